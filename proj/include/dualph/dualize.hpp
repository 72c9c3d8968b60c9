#pragma once

#include <stdexcept>
#include <vector>

#include "dualph/chain_complex.hpp"
#include "dualph/cubical.hpp"

namespace dualph {

/// Raised when a complex is not a closed pseudomanifold of the requested
/// dimension; lists the offending cells.
class NotClosedPseudomanifold : public std::runtime_error
{
public:
    NotClosedPseudomanifold(std::string const& message, std::vector<CellId> cells);
    std::vector<CellId> const& cells() const { return cells_; }

private:
    std::vector<CellId> cells_;
};

/// Cells of dimension > d, and (d-1)-cells without exactly two d-cofacets.
std::vector<CellId> pseudomanifold_violations(FilteredComplex const& complex, int d);

/// Dual complex: cell ids are kept, dimension k becomes d - k, incidences
/// are transposed and values negated. Names gain a trailing '*'.
FilteredComplex dual_complex(FilteredComplex const& complex, int d);

/// Glues one d-cell onto the outer boundary of a T-construction, closing it
/// into a sphere. The new cell takes the last id.
///
/// `value` must be at least the value of every boundary (d-1)-cell.
FilteredComplex compactify_t(CubicalComplex const& t_complex, ExtendedValue value);

/// Cones the outer boundary of a V-construction to an apex (last id).
///
/// The cone is laid out on the lattice one layer wider than the V grid, so
/// a boundary cell gets one cone cell per outward direction (a corner
/// vertex of a square grid gets two parallel edges to the apex). Cell ids
/// coincide with those of compactify_t on the same image shape, and
/// dual_complex(compactify_t(build_t(pad(-I, -N)), -N), d) equals
/// compactify_v(build_v(pad(I, N)), N) cell for cell.
///
/// Every added cell carries `value`, which must be at least the grid maximum.
FilteredComplex compactify_v(CubicalComplex const& v_complex, ExtendedValue value);

} // namespace dualph
