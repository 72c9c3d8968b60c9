#include "dualph/persistence.hpp"

#include <algorithm>

#include "dualph/detail/bit_tree_column.hpp"

namespace dualph {

std::string to_string(Bar const& bar)
{
    return "[" + bar.birth.to_string() + "," + bar.death.to_string() + ")_" + std::to_string(bar.dim);
}

char const* to_string(DiagramKind kind)
{
    switch (kind) {
    case DiagramKind::V:
        return "V";
    case DiagramKind::T:
        return "T";
    case DiagramKind::DualT:
        return "dual-T";
    case DiagramKind::DualV:
        return "dual-V";
    case DiagramKind::Abstract:
        return "abstract";
    }
    return "abstract";
}

std::optional<DiagramKind> parse_diagram_kind(std::string const& text)
{
    for (auto kind : {DiagramKind::V, DiagramKind::T, DiagramKind::DualT, DiagramKind::DualV,
                      DiagramKind::Abstract})
        if (text == to_string(kind))
            return kind;
    return std::nullopt;
}

Diagram::Diagram(int d, std::vector<Bar> bars, DiagramKind kind, bool reduced)
    : d_(d), bars_(std::move(bars)), kind_(kind), reduced_(reduced)
{
    if (d_ < 0)
        throw InvalidDiagram("diagram dimension must be nonnegative");
    for (auto const& bar : bars_) {
        if (bar.dim < 0 || bar.dim > d_)
            throw InvalidDiagram("bar " + to_string(bar) + " outside dimensions 0.." + std::to_string(d_));
        if (bar.death < bar.birth)
            throw InvalidDiagram("bar " + to_string(bar) + " dies before it is born");
    }
    std::sort(bars_.begin(), bars_.end());
}

Diagram Diagram::with_kind(DiagramKind kind, bool reduced) const
{
    Diagram copy = *this;
    copy.kind_ = kind;
    copy.reduced_ = reduced;
    return copy;
}

PersistencePairs compute_pairs(FilteredComplex const& complex)
{
    auto const order = filtration_order(complex);
    auto const n = order.size();

    std::vector<std::uint32_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i]] = static_cast<std::uint32_t>(i);

    // columns indexed by filtration position, entries are facet positions
    std::vector<std::vector<std::uint32_t>> columns(n);
    int top_dim = 0;
    for (std::size_t j = 0; j < n; ++j) {
        auto const& cell = complex.cell(order[j]);
        top_dim = std::max(top_dim, cell.dim);
        auto& column = columns[j];
        column.reserve(cell.boundary.size());
        for (CellId facet : cell.boundary)
            column.push_back(position[facet]);
        std::sort(column.begin(), column.end());
    }

    constexpr auto none = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> pivot_owner(n, none);
    std::vector<bool> cleared(n, false);
    detail::BitTreeColumn work(n);
    std::vector<std::uint32_t> scratch;

    // Highest dimension first: each pivot found in dimension k clears the
    // column of its (k-1)-cell, which is known to reduce to zero.
    for (int dim = top_dim; dim >= 1; --dim) {
        for (std::size_t j = 0; j < n; ++j) {
            if (cleared[j] || complex.cell(order[j]).dim != dim || columns[j].empty())
                continue;
            work.add(columns[j]);
            while (!work.empty()) {
                auto const pivot = work.max_index();
                auto const owner = pivot_owner[pivot];
                if (owner == none)
                    break;
                work.add(columns[owner]);
            }
            work.drain(scratch);
            columns[j].swap(scratch);
            if (!columns[j].empty()) {
                auto const pivot = columns[j].back();
                pivot_owner[pivot] = static_cast<std::uint32_t>(j);
                cleared[pivot] = true;
                columns[pivot].clear();
            }
        }
    }

    PersistencePairs pairs;
    for (std::size_t j = 0; j < n; ++j) {
        if (!columns[j].empty())
            pairs.finite.emplace_back(order[columns[j].back()], order[j]);
        else if (pivot_owner[j] == none)
            pairs.essential.push_back(order[j]);
    }
    std::sort(pairs.finite.begin(), pairs.finite.end(), [&](auto const& a, auto const& b) {
        return position[a.first] < position[b.first];
    });
    return pairs;
}

Diagram barcode_from_pairs(FilteredComplex const& complex, PersistencePairs const& pairs,
                           BarcodeOptions options)
{
    std::vector<Bar> bars;
    bars.reserve(pairs.finite.size() + pairs.essential.size());
    for (auto const& [birth, death] : pairs.finite) {
        auto const& born = complex.cell(birth);
        auto const& dies = complex.cell(death);
        if (!options.keep_zero_bars && born.value == dies.value)
            continue;
        bars.push_back({born.dim, born.value, dies.value});
    }
    for (CellId id : pairs.essential) {
        auto const& cell = complex.cell(id);
        bars.push_back({cell.dim, cell.value, ExtendedValue::infinity()});
    }
    return Diagram(complex.ambient_dim(), std::move(bars));
}

Diagram compute_barcode(FilteredComplex const& complex, BarcodeOptions options)
{
    return barcode_from_pairs(complex, compute_pairs(complex), options);
}

Diagram reduce_diagram(Diagram const& diagram)
{
    auto const& bars = diagram.bars();
    if (bars.empty())
        throw InvalidDiagram("cannot reduce an empty diagram");

    auto const lowest =
        std::min_element(bars.begin(), bars.end(),
                         [](Bar const& a, Bar const& b) { return a.birth < b.birth; })
            ->birth;
    std::size_t matches = 0;
    std::size_t found = 0;
    for (std::size_t i = 0; i < bars.size(); ++i) {
        auto const& bar = bars[i];
        if (bar.dim == 0 && bar.essential() && bar.birth == lowest) {
            ++matches;
            found = i;
        }
    }
    if (matches != 1) {
        throw InvalidDiagram("expected exactly one essential 0-bar born at " + lowest.to_string() +
                             ", found " + std::to_string(matches));
    }

    std::vector<Bar> kept;
    kept.reserve(bars.size() - 1);
    for (std::size_t i = 0; i < bars.size(); ++i)
        if (i != found)
            kept.push_back(bars[i]);
    return Diagram(diagram.d(), std::move(kept), diagram.kind(), true);
}

Diagram drop_sentinel(Diagram const& diagram, double sentinel)
{
    ExtendedValue const high(sentinel);
    ExtendedValue const low = -high;
    if (!high.is_finite() || !(low < high))
        throw InvalidDiagram("sentinel must be a positive finite value");

    auto separated = [&](ExtendedValue const& v) {
        return !v.is_finite() || (low < v && v < high);
    };

    std::vector<Bar> bars;
    for (auto bar : diagram.bars()) {
        if (bar.birth == high)
            continue;
        if (bar.birth == low)
            bar.birth = ExtendedValue::neg_infinity();
        if (bar.death == high)
            bar.death = ExtendedValue::infinity();
        if (!separated(bar.birth) || !separated(bar.death)) {
            throw InvalidDiagram("endpoint of " + to_string(bar) + " is not separated from sentinel " +
                                 high.to_string());
        }
        bars.push_back(bar);
    }
    return Diagram(diagram.d(), std::move(bars), diagram.kind(), diagram.reduced());
}

} // namespace dualph
