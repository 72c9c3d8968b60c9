#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualph/chain_complex.hpp"

namespace dualph {

/// (tail, head) with tail a facet of head.
struct GradientPair
{
    CellId tail;
    CellId head;

    friend bool operator==(GradientPair const&, GradientPair const&) = default;
    friend auto operator<=>(GradientPair const&, GradientPair const&) = default;
};

/// Partial matching of cells with cofacets. Pairs are kept sorted.
class DiscreteVectorField
{
public:
    DiscreteVectorField() = default;
    explicit DiscreteVectorField(std::vector<GradientPair> pairs);

    std::vector<GradientPair> const& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

    friend bool operator==(DiscreteVectorField const&, DiscreteVectorField const&) = default;

private:
    std::vector<GradientPair> pairs_;
};

struct FieldIssue
{
    enum class Kind { UnknownCell, NotFacet, ValueMismatch, DoublePairing, Cycle };

    Kind kind;
    std::string message;
};

using FieldReport = std::vector<FieldIssue>;

char const* to_string(FieldIssue::Kind kind);

/// Facet relation, equal values, at most one pair per cell, and no closed
/// V-path. Never throws.
FieldReport validate_field(DiscreteVectorField const& field, FilteredComplex const& complex);

class InvalidField : public std::runtime_error
{
public:
    explicit InvalidField(FieldReport report);
    FieldReport const& report() const { return report_; }

private:
    FieldReport report_;
};

/// The field V* on dual_complex(complex, d): each (tau, sigma) becomes
/// (sigma*, tau*). Ids are shared with the dual complex.
DiscreteVectorField dual_field(DiscreteVectorField const& field, FilteredComplex const& complex,
                               int d);

/// Unpaired cells in filtration order.
std::vector<CellId> critical_cells(DiscreteVectorField const& field, FilteredComplex const& complex);

/// Alternating tau0, sigma0, tau1, sigma1, ..., tauN, sigmaN.
using VPath = std::vector<CellId>;

/// Empty when `path` is a V-path of `field`, otherwise the first problem.
std::optional<std::string> check_v_path(VPath const& path, DiscreteVectorField const& field,
                                        FilteredComplex const& complex);

/// The dual V-path sigmaN*, tauN*, ..., sigma0*, tau0* (ids are shared, so
/// this is the reversed sequence). Throws std::invalid_argument on an
/// invalid input path.
VPath dual_v_path(VPath const& path, DiscreteVectorField const& field,
                  FilteredComplex const& complex);

/// Chain complex on the critical cells.
struct MorseComplex
{
    FilteredComplex complex;
    /// Original id of each Morse cell.
    std::vector<CellId> source;
};

/// Boundary coefficient of critical tau in d(sigma) is the parity of
/// V-paths from the facets of sigma to tau.
MorseComplex morse_complex(DiscreteVectorField const& field, FilteredComplex const& complex);

/// Greedy free-face collapse inside each filtration value; when stuck, the
/// last remaining cell in filtration order becomes critical.
DiscreteVectorField build_gradient(FilteredComplex const& complex);

} // namespace dualph
