#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualph/extended_value.hpp"

namespace dualph {

/// Dense index of a cell inside its FilteredComplex.
using CellId = std::uint32_t;

/// A cell of a filtered CW complex with its Z2 boundary (facet ids).
struct Cell
{
    int dim = 0;
    ExtendedValue value;
    std::vector<CellId> boundary;
};

/// A finite filtered complex over Z2.
///
/// Cells are addressed by their position; the optional names give the
/// stable labels used by the text formats. Boundaries are stored sorted.
/// Instances are immutable once constructed.
class FilteredComplex
{
public:
    FilteredComplex() = default;
    FilteredComplex(std::vector<Cell> cells, int ambient_dim,
                    std::vector<std::string> names = {});

    std::size_t size() const { return cells_.size(); }
    int ambient_dim() const { return ambient_dim_; }

    Cell const& cell(CellId id) const { return cells_.at(id); }
    std::vector<Cell> const& cells() const { return cells_; }

    bool has_names() const { return !names_.empty(); }
    std::vector<std::string> const& names() const { return names_; }
    /// The stored name, or the decimal id when the complex is unnamed.
    std::string name(CellId id) const;
    std::optional<CellId> find(std::string const& name) const;

    /// Number of cells of each dimension 0..ambient_dim.
    std::vector<std::size_t> cell_counts() const;
    long euler_characteristic() const;

    /// Cofacet lists, the transpose of the boundary relation.
    std::vector<std::vector<CellId>> cofacets() const;

private:
    std::vector<Cell> cells_;
    int ambient_dim_ = 0;
    std::vector<std::string> names_;
};

struct ValidationIssue
{
    enum class Kind {
        DanglingFacet,
        FacetDimension,
        DuplicateFacet,
        Monotonicity,
        BoundarySquare,
        DimensionRange,
    };

    Kind kind;
    CellId cell;
    std::string message;
};

using ValidationReport = std::vector<ValidationIssue>;

char const* to_string(ValidationIssue::Kind kind);

/// Checks every complex invariant; never throws. Empty iff valid.
ValidationReport validate(FilteredComplex const& complex);

class InvalidComplex : public std::runtime_error
{
public:
    explicit InvalidComplex(ValidationReport report);
    ValidationReport const& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Throws InvalidComplex when validate() reports anything.
void require_valid(FilteredComplex const& complex);

/// Total order of cell ids by (value, dim, id). Every prefix is a subcomplex.
using FiltrationOrder = std::vector<CellId>;

FiltrationOrder filtration_order(FilteredComplex const& complex);

/// Same ordering without revalidating; caller guarantees validity.
FiltrationOrder filtration_order_unchecked(FilteredComplex const& complex);

} // namespace dualph
