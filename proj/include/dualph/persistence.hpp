#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dualph/chain_complex.hpp"

namespace dualph {

/// Interval [birth, death) in homology dimension `dim`.
struct Bar
{
    int dim = 0;
    ExtendedValue birth;
    ExtendedValue death;

    bool essential() const { return death.is_pos_inf(); }
    bool finite() const { return birth.is_finite() && death.is_finite(); }

    friend bool operator==(Bar const&, Bar const&) = default;
    friend auto operator<=>(Bar const&, Bar const&) = default;
};

std::string to_string(Bar const& bar);

/// Which filtered complex a diagram describes.
enum class DiagramKind { V, T, DualT, DualV, Abstract };

char const* to_string(DiagramKind kind);
std::optional<DiagramKind> parse_diagram_kind(std::string const& text);

class InvalidDiagram : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Multiset of bars, kept sorted by (dim, birth, death) so that comparing
/// bars() compares multisets.
class Diagram
{
public:
    Diagram() = default;
    /// Throws InvalidDiagram if a bar has birth > death or dim outside [0, d].
    Diagram(int d, std::vector<Bar> bars, DiagramKind kind = DiagramKind::Abstract,
            bool reduced = false);

    int d() const { return d_; }
    DiagramKind kind() const { return kind_; }
    bool reduced() const { return reduced_; }
    std::vector<Bar> const& bars() const { return bars_; }
    std::size_t size() const { return bars_.size(); }
    bool empty() const { return bars_.empty(); }

    Diagram with_kind(DiagramKind kind, bool reduced) const;

    friend bool operator==(Diagram const&, Diagram const&) = default;

private:
    int d_ = 0;
    std::vector<Bar> bars_;
    DiagramKind kind_ = DiagramKind::Abstract;
    bool reduced_ = false;
};

/// Index-level result of the boundary reduction: every cell is exactly one
/// of birth, death, or essential.
struct PersistencePairs
{
    std::vector<std::pair<CellId, CellId>> finite; ///< (birth cell, death cell)
    std::vector<CellId> essential;
};

/// Z2 reduction with clearing, processed in filtration order.
PersistencePairs compute_pairs(FilteredComplex const& complex);

struct BarcodeOptions
{
    bool keep_zero_bars = false;
};

Diagram compute_barcode(FilteredComplex const& complex, BarcodeOptions options = {});

/// Bars from precomputed pairs; the complex supplies values and dimensions.
Diagram barcode_from_pairs(FilteredComplex const& complex, PersistencePairs const& pairs,
                           BarcodeOptions options = {});

/// Removes the unique essential 0-bar of minimal birth.
Diagram reduce_diagram(Diagram const& diagram);

/// Relabels a finite sentinel: left endpoints -N become -inf, right
/// endpoints +N become +inf, and bars born at +N are dropped.
///
/// Throws InvalidDiagram if any other finite endpoint has |value| >= N.
Diagram drop_sentinel(Diagram const& diagram, double sentinel);

} // namespace dualph
