#include "dualph/morse.hpp"

#include <algorithm>
#include <deque>

#include "dualph/dualize.hpp"

namespace dualph {

namespace {

constexpr auto unpaired = static_cast<CellId>(-1);

bool is_facet(FilteredComplex const& complex, CellId facet, CellId cell)
{
    auto const& boundary = complex.cell(cell).boundary;
    return std::binary_search(boundary.begin(), boundary.end(), facet);
}

// partner[c] for every cell, assuming a structurally valid field
std::vector<CellId> partners(DiscreteVectorField const& field, std::size_t n)
{
    std::vector<CellId> partner(n, unpaired);
    for (auto const& pair : field.pairs()) {
        partner[pair.tail] = pair.head;
        partner[pair.head] = pair.tail;
    }
    return partner;
}

void require_valid_field(DiscreteVectorField const& field, FilteredComplex const& complex)
{
    auto report = validate_field(field, complex);
    if (!report.empty())
        throw InvalidField(std::move(report));
}

std::vector<CellId> symmetric_difference(std::vector<CellId> const& a, std::vector<CellId> const& b)
{
    std::vector<CellId> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

DiscreteVectorField::DiscreteVectorField(std::vector<GradientPair> pairs) : pairs_(std::move(pairs))
{
    std::sort(pairs_.begin(), pairs_.end());
}

char const* to_string(FieldIssue::Kind kind)
{
    switch (kind) {
    case FieldIssue::Kind::UnknownCell:
        return "unknown-cell";
    case FieldIssue::Kind::NotFacet:
        return "not-facet";
    case FieldIssue::Kind::ValueMismatch:
        return "value-mismatch";
    case FieldIssue::Kind::DoublePairing:
        return "double-pairing";
    case FieldIssue::Kind::Cycle:
        return "cycle";
    }
    return "unknown";
}

FieldReport validate_field(DiscreteVectorField const& field, FilteredComplex const& complex)
{
    using Kind = FieldIssue::Kind;
    FieldReport report;
    auto const n = complex.size();
    auto label = [&](GradientPair const& p) {
        auto name = [&](CellId c) { return c < n ? complex.name(c) : std::to_string(c); };
        return "(" + name(p.tail) + ", " + name(p.head) + ")";
    };

    std::vector<CellId> partner(n, unpaired);
    std::vector<bool> usable(field.size(), true);
    for (std::size_t i = 0; i < field.size(); ++i) {
        auto const& pair = field.pairs()[i];
        if (pair.tail >= n || pair.head >= n) {
            report.push_back({Kind::UnknownCell, "pair " + label(pair) + " references a missing cell"});
            usable[i] = false;
            continue;
        }
        if (!is_facet(complex, pair.tail, pair.head)) {
            report.push_back({Kind::NotFacet, "pair " + label(pair) + ": tail is not a facet of head"});
            usable[i] = false;
        }
        if (complex.cell(pair.tail).value != complex.cell(pair.head).value) {
            report.push_back({Kind::ValueMismatch,
                              "pair " + label(pair) + " joins values " +
                                  complex.cell(pair.tail).value.to_string() + " and " +
                                  complex.cell(pair.head).value.to_string()});
        }
        for (CellId c : {pair.tail, pair.head}) {
            if (partner[c] != unpaired) {
                report.push_back({Kind::DoublePairing, "cell " + complex.name(c) + " is paired twice"});
                usable[i] = false;
            } else {
                partner[c] = c == pair.tail ? pair.head : pair.tail;
            }
        }
    }

    // V-path digraph on usable pairs: (tau, sigma) -> (tau', sigma') when
    // tau' is a facet of sigma other than tau.
    std::vector<std::size_t> pair_of_tail(n, field.size());
    for (std::size_t i = 0; i < field.size(); ++i)
        if (usable[i])
            pair_of_tail[field.pairs()[i].tail] = i;

    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> colour(field.size(), white);
    std::vector<std::pair<std::size_t, std::size_t>> stack; // (pair, next facet slot)
    for (std::size_t root = 0; root < field.size(); ++root) {
        if (!usable[root] || colour[root] != white)
            continue;
        stack.push_back({root, 0});
        colour[root] = grey;
        while (!stack.empty()) {
            auto& [current, slot] = stack.back();
            auto const& pair = field.pairs()[current];
            auto const& boundary = complex.cell(pair.head).boundary;
            if (slot == boundary.size()) {
                colour[current] = black;
                stack.pop_back();
                continue;
            }
            CellId const facet = boundary[slot++];
            if (facet == pair.tail || facet >= n)
                continue;
            auto const next = pair_of_tail[facet];
            if (next == field.size())
                continue;
            if (colour[next] == grey) {
                report.push_back({Kind::Cycle, "closed V-path through pair " + label(field.pairs()[next])});
                colour[next] = black; // report each cycle entry once
            } else if (colour[next] == white) {
                colour[next] = grey;
                stack.push_back({next, 0});
            }
        }
    }
    return report;
}

namespace {

std::string summarize(FieldReport const& report)
{
    std::string text = "invalid vector field";
    if (!report.empty())
        text += ": " + report.front().message;
    return text;
}

} // namespace

InvalidField::InvalidField(FieldReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report))
{
}

DiscreteVectorField dual_field(DiscreteVectorField const& field, FilteredComplex const& complex,
                               int d)
{
    require_valid_field(field, complex);
    auto bad = pseudomanifold_violations(complex, d);
    if (!bad.empty())
        throw NotClosedPseudomanifold("complex has no dual in dimension " + std::to_string(d), bad);

    std::vector<GradientPair> pairs;
    pairs.reserve(field.size());
    for (auto const& pair : field.pairs())
        pairs.push_back({pair.head, pair.tail});
    return DiscreteVectorField(std::move(pairs));
}

std::vector<CellId> critical_cells(DiscreteVectorField const& field, FilteredComplex const& complex)
{
    require_valid_field(field, complex);
    auto const partner = partners(field, complex.size());
    std::vector<CellId> result;
    for (CellId id : filtration_order(complex))
        if (partner[id] == unpaired)
            result.push_back(id);
    return result;
}

std::optional<std::string> check_v_path(VPath const& path, DiscreteVectorField const& field,
                                        FilteredComplex const& complex)
{
    if (path.empty() || path.size() % 2 != 0)
        return "a V-path has an even, nonzero number of cells";
    for (CellId c : path)
        if (c >= complex.size())
            return "cell id " + std::to_string(c) + " does not exist";
    for (std::size_t i = 0; i < path.size(); i += 2) {
        GradientPair const step{path[i], path[i + 1]};
        if (!std::binary_search(field.pairs().begin(), field.pairs().end(), step)) {
            return "(" + complex.name(step.tail) + ", " + complex.name(step.head) +
                   ") is not a pair of the field";
        }
        if (i + 2 < path.size()) {
            CellId const next = path[i + 2];
            if (next == step.tail || !is_facet(complex, next, step.head))
                return complex.name(next) + " is not another facet of " + complex.name(step.head);
        }
    }
    return std::nullopt;
}

VPath dual_v_path(VPath const& path, DiscreteVectorField const& field,
                  FilteredComplex const& complex)
{
    if (auto problem = check_v_path(path, field, complex))
        throw std::invalid_argument("invalid V-path: " + *problem);
    return VPath(path.rbegin(), path.rend());
}

MorseComplex morse_complex(DiscreteVectorField const& field, FilteredComplex const& complex)
{
    auto const critical = critical_cells(field, complex);
    auto const n = complex.size();
    auto const partner = partners(field, n);

    std::vector<CellId> morse_id(n, unpaired);
    for (CellId i = 0; i < critical.size(); ++i)
        morse_id[critical[i]] = i;

    // flow[c]: critical cells (original ids, sorted) reached from c along
    // V-paths, counted mod 2. Heads of lower pairs flow nowhere.
    std::vector<std::vector<CellId>> flow(n);
    std::vector<std::uint8_t> state(n, 0); // 0 new, 1 expanded, 2 done
    auto is_tail = [&](CellId c) {
        return partner[c] != unpaired && complex.cell(partner[c]).dim == complex.cell(c).dim + 1;
    };

    auto resolve = [&](CellId root) {
        std::vector<CellId> stack{root};
        while (!stack.empty()) {
            CellId const c = stack.back();
            if (state[c] == 2) {
                stack.pop_back();
                continue;
            }
            if (morse_id[c] != unpaired) {
                flow[c] = {c};
                state[c] = 2;
                stack.pop_back();
                continue;
            }
            if (!is_tail(c)) {
                state[c] = 2;
                stack.pop_back();
                continue;
            }
            auto const& next = complex.cell(partner[c]).boundary;
            if (state[c] == 0) {
                state[c] = 1;
                for (CellId f : next)
                    if (f != c && state[f] != 2)
                        stack.push_back(f);
                continue;
            }
            std::vector<CellId> sum;
            for (CellId f : next)
                if (f != c)
                    sum = symmetric_difference(sum, flow[f]);
            flow[c] = std::move(sum);
            state[c] = 2;
            stack.pop_back();
        }
    };

    std::vector<Cell> cells;
    std::vector<std::string> names;
    cells.reserve(critical.size());
    for (CellId sigma : critical) {
        auto const& original = complex.cell(sigma);
        std::vector<CellId> boundary;
        for (CellId f : original.boundary) {
            resolve(f);
            boundary = symmetric_difference(boundary, flow[f]);
        }
        for (auto& b : boundary)
            b = morse_id[b];
        cells.push_back({original.dim, original.value, std::move(boundary)});
        names.push_back(complex.name(sigma));
    }
    return {FilteredComplex(std::move(cells), complex.ambient_dim(), std::move(names)), critical};
}

DiscreteVectorField build_gradient(FilteredComplex const& complex)
{
    auto const order = filtration_order(complex);
    auto const n = complex.size();
    auto const cofacets = complex.cofacets();

    std::vector<bool> removed(n, false);
    std::vector<std::size_t> live_cofacets(n, 0);
    std::vector<GradientPair> pairs;

    auto same_level = [&](CellId a, CellId b) { return complex.cell(a).value == complex.cell(b).value; };

    std::size_t begin = 0;
    while (begin < n) {
        std::size_t end = begin;
        while (end < n && same_level(order[begin], order[end]))
            ++end;

        std::deque<CellId> free;
        for (std::size_t i = begin; i < end; ++i) {
            CellId const c = order[i];
            for (CellId co : cofacets[c])
                if (same_level(c, co))
                    ++live_cofacets[c];
            if (live_cofacets[c] == 1)
                free.push_back(c);
        }

        auto remove = [&](CellId c) {
            removed[c] = true;
            for (CellId f : complex.cell(c).boundary) {
                if (removed[f] || !same_level(c, f))
                    continue;
                if (--live_cofacets[f] == 1)
                    free.push_back(f);
            }
        };

        std::size_t remaining = end - begin;
        std::size_t last = end;
        while (remaining > 0) {
            if (!free.empty()) {
                CellId const c = free.front();
                free.pop_front();
                if (removed[c] || live_cofacets[c] != 1)
                    continue;
                CellId head = unpaired;
                for (CellId co : cofacets[c])
                    if (!removed[co] && same_level(c, co))
                        head = co;
                pairs.push_back({c, head});
                remove(c);
                remove(head);
                remaining -= 2;
                continue;
            }
            while (removed[order[last - 1]])
                --last;
            remove(order[last - 1]);
            --remaining;
        }
        begin = end;
    }
    return DiscreteVectorField(std::move(pairs));
}

} // namespace dualph
