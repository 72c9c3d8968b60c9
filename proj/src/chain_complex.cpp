#include "dualph/chain_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dualph {

FilteredComplex::FilteredComplex(std::vector<Cell> cells, int ambient_dim,
                                 std::vector<std::string> names)
    : cells_(std::move(cells)),
      ambient_dim_(ambient_dim),
      names_(std::move(names))
{
    if (ambient_dim_ < 0)
        throw std::invalid_argument("ambient dimension must be nonnegative");
    if (!names_.empty() && names_.size() != cells_.size())
        throw std::invalid_argument("cell names must match cell count");
    for (auto& cell : cells_)
        std::sort(cell.boundary.begin(), cell.boundary.end());
}

std::string FilteredComplex::name(CellId id) const
{
    if (names_.empty())
        return std::to_string(id);
    return names_.at(id);
}

std::optional<CellId> FilteredComplex::find(std::string const& name) const
{
    if (names_.empty()) {
        CellId id = 0;
        std::istringstream in(name);
        if (in >> id && in.eof() && id < cells_.size())
            return id;
        return std::nullopt;
    }
    auto const it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<CellId>(it - names_.begin());
}

std::vector<std::size_t> FilteredComplex::cell_counts() const
{
    int top = ambient_dim_;
    for (auto const& cell : cells_)
        top = std::max(top, cell.dim);
    std::vector<std::size_t> counts(static_cast<std::size_t>(top) + 1, 0);
    for (auto const& cell : cells_)
        if (cell.dim >= 0)
            ++counts[static_cast<std::size_t>(cell.dim)];
    return counts;
}

long FilteredComplex::euler_characteristic() const
{
    long chi = 0;
    for (auto const& cell : cells_)
        chi += (cell.dim % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<std::vector<CellId>> FilteredComplex::cofacets() const
{
    std::vector<std::vector<CellId>> result(cells_.size());
    for (CellId id = 0; id < cells_.size(); ++id)
        for (CellId facet : cells_[id].boundary)
            if (facet < cells_.size())
                result[facet].push_back(id);
    return result;
}

char const* to_string(ValidationIssue::Kind kind)
{
    switch (kind) {
    case ValidationIssue::Kind::DanglingFacet:
        return "dangling-facet";
    case ValidationIssue::Kind::FacetDimension:
        return "facet-dimension";
    case ValidationIssue::Kind::DuplicateFacet:
        return "duplicate-facet";
    case ValidationIssue::Kind::Monotonicity:
        return "monotonicity";
    case ValidationIssue::Kind::BoundarySquare:
        return "boundary-square";
    case ValidationIssue::Kind::DimensionRange:
        return "dimension-range";
    }
    return "unknown";
}

ValidationReport validate(FilteredComplex const& complex)
{
    using Kind = ValidationIssue::Kind;
    ValidationReport report;
    auto const& cells = complex.cells();
    auto const n = cells.size();

    auto issue = [&](Kind kind, CellId id, std::string const& detail) {
        report.push_back({kind, id, "cell " + complex.name(id) + ": " + detail});
    };

    // structural checks first; ∂² is only meaningful on resolvable boundaries
    std::vector<bool> resolvable(n, true);
    for (CellId id = 0; id < n; ++id) {
        auto const& cell = cells[id];
        if (cell.dim < 0 || cell.dim > complex.ambient_dim()) {
            issue(Kind::DimensionRange, id,
                  "dimension " + std::to_string(cell.dim) + " outside [0, " +
                      std::to_string(complex.ambient_dim()) + "]");
        }
        for (std::size_t i = 0; i < cell.boundary.size(); ++i) {
            CellId const facet = cell.boundary[i];
            if (i > 0 && cell.boundary[i - 1] == facet)
                issue(Kind::DuplicateFacet, id, "facet " + std::to_string(facet) + " listed twice");
            if (facet >= n) {
                issue(Kind::DanglingFacet, id, "facet id " + std::to_string(facet) + " does not exist");
                resolvable[id] = false;
                continue;
            }
            auto const& face = cells[facet];
            if (face.dim != cell.dim - 1) {
                issue(Kind::FacetDimension, id,
                      "facet " + complex.name(facet) + " has dimension " + std::to_string(face.dim));
            }
            if (cell.value < face.value) {
                issue(Kind::Monotonicity, id,
                      "value " + cell.value.to_string() + " below facet " + complex.name(facet) +
                          " value " + face.value.to_string());
            }
        }
    }

    std::vector<CellId> second;
    for (CellId id = 0; id < n; ++id) {
        if (!resolvable[id])
            continue;
        second.clear();
        bool ok = true;
        for (CellId facet : cells[id].boundary) {
            if (!resolvable[facet]) {
                ok = false;
                break;
            }
            second.insert(second.end(), cells[facet].boundary.begin(), cells[facet].boundary.end());
        }
        if (!ok)
            continue;
        std::sort(second.begin(), second.end());
        for (std::size_t i = 0; i < second.size();) {
            std::size_t j = i;
            while (j < second.size() && second[j] == second[i])
                ++j;
            if ((j - i) % 2 != 0) {
                issue(Kind::BoundarySquare, id,
                      "boundary of boundary contains " + complex.name(second[i]));
                break;
            }
            i = j;
        }
    }
    return report;
}

namespace {

std::string summarize(ValidationReport const& report)
{
    std::string text = "invalid complex";
    if (!report.empty())
        text += ": " + report.front().message;
    if (report.size() > 1)
        text += " (+" + std::to_string(report.size() - 1) + " more)";
    return text;
}

} // namespace

InvalidComplex::InvalidComplex(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report))
{
}

void require_valid(FilteredComplex const& complex)
{
    auto report = validate(complex);
    if (!report.empty())
        throw InvalidComplex(std::move(report));
}

FiltrationOrder filtration_order_unchecked(FilteredComplex const& complex)
{
    auto const& cells = complex.cells();
    FiltrationOrder order(cells.size());
    std::iota(order.begin(), order.end(), CellId{0});
    std::sort(order.begin(), order.end(), [&](CellId a, CellId b) {
        auto const& ca = cells[a];
        auto const& cb = cells[b];
        if (auto const c = ca.value <=> cb.value; c != 0)
            return c < 0;
        if (ca.dim != cb.dim)
            return ca.dim < cb.dim;
        return a < b;
    });
    return order;
}

FiltrationOrder filtration_order(FilteredComplex const& complex)
{
    require_valid(complex);
    return filtration_order_unchecked(complex);
}

} // namespace dualph
