#include <doctest.h>

#include <random>

#include "dualph/detail/bit_tree_column.hpp"
#include "dualph/dualize.hpp"
#include "dualph/morse.hpp"
#include "dualph/persistence.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace dualph;
using dualph::test::inf;

TEST_CASE("bit tree column tracks the maximum under toggles")
{
    for (std::size_t n : {1u, 63u, 64u, 65u, 4096u, 300000u}) {
        detail::BitTreeColumn column(n);
        std::set<std::size_t> reference;
        std::mt19937_64 rng(n);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int step = 0; step < 500; ++step) {
            auto const i = pick(rng);
            column.toggle(i);
            if (!reference.erase(i))
                reference.insert(i);
            REQUIRE(column.empty() == reference.empty());
            if (!reference.empty())
                REQUIRE(column.max_index() == *reference.rbegin());
        }
        std::vector<std::uint32_t> drained;
        column.drain(drained);
        CHECK(column.empty());
        CHECK(std::equal(drained.begin(), drained.end(), reference.begin(), reference.end()));
    }
}

TEST_CASE("golden barcodes of the running example")
{
    auto const image = test::grid3x3();
    CHECK(compute_barcode(build_v(image).complex).bars() ==
          test::bars({{0, 1, inf}, {0, 2, 5}, {0, 3, 7}, {0, 4, 6}, {1, 8, 9}}));
    CHECK(compute_barcode(build_t(image).complex).bars() == test::bars({{0, 1, inf}, {1, 4, 9}}));

    auto const n = default_pad_value(image);
    auto const dual = compute_barcode(build_t(pad(negate(image), -n)).complex);
    CHECK(drop_sentinel(dual, n).bars() == test::bars({{0, -inf, inf},
                                                       {0, -9, -8},
                                                       {1, -inf, -1},
                                                       {1, -5, -2},
                                                       {1, -7, -3},
                                                       {1, -6, -4}}));

    FilteredComplex const vertex({{0, 7.0, {}}}, 0);
    CHECK(compute_barcode(vertex).bars() == test::bars({{0, 7, inf}}));
}

TEST_CASE("zero-persistence bars are optional")
{
    auto const v = build_v(test::grid3x3()).complex;
    auto const all = compute_barcode(v, {.keep_zero_bars = true});
    auto const pairs = compute_pairs(v);
    CHECK(all.size() == pairs.finite.size() + pairs.essential.size());
    CHECK(compute_barcode(v).size() == 5);
    for (auto const& bar : all.bars())
        CHECK(bar.birth <= bar.death);
}

TEST_CASE("barcode rejects invalid complexes")
{
    FilteredComplex const bad({{0, 2.0, {}}, {0, 0.0, {}}, {1, 1.0, {0, 1}}}, 1);
    CHECK_THROWS_AS(compute_barcode(bad), InvalidComplex);
}

TEST_CASE("reduce_diagram removes the unique minimal essential 0-bar")
{
    Diagram const dual_t_bars(2, {{0, -inf, inf}, {0, -9, -8}, {1, -inf, -1}, {1, -5, -2}, {1, -7, -3}, {1, -6, -4}});
    auto const reduced = reduce_diagram(dual_t_bars);
    CHECK(reduced.reduced());
    CHECK(reduced.bars() ==
          test::bars({{0, -9, -8}, {1, -inf, -1}, {1, -5, -2}, {1, -7, -3}, {1, -6, -4}}));

    CHECK(reduce_diagram(Diagram(0, {{0, 7, inf}})).empty());
    CHECK_THROWS_AS(reduce_diagram(Diagram(1, {{0, 1, inf}, {0, 1, inf}})), InvalidDiagram);
    CHECK_THROWS_AS(reduce_diagram(Diagram(1, {{1, 1, inf}})), InvalidDiagram);
    CHECK_THROWS_AS(reduce_diagram(Diagram(1, {})), InvalidDiagram);
}

TEST_CASE("drop_sentinel relabels the padding value")
{
    CHECK(drop_sentinel(Diagram(0, {{0, -10, -8}}), 10).bars() == test::bars({{0, -inf, -8}}));
    // born at +N: the cell never enters under infinite padding
    CHECK(drop_sentinel(Diagram(2, {{2, 10, inf}}), 10).empty());
    CHECK(drop_sentinel(Diagram(1, {{1, 3, 10}}), 10).bars() == test::bars({{1, 3, inf}}));

    Diagram const plain(1, {{0, 1, inf}, {0, 2, 5}});
    CHECK(drop_sentinel(plain, 10).bars() == plain.bars());

    CHECK_THROWS_AS(drop_sentinel(Diagram(1, {{0, 1, 12}}), 10), InvalidDiagram);
    CHECK_THROWS_AS(drop_sentinel(Diagram(1, {{0, -11, 2}}), 10), InvalidDiagram);
    CHECK_THROWS_AS(drop_sentinel(plain, -1), InvalidDiagram);
}

TEST_CASE("diagram construction checks bars and sorts them")
{
    CHECK_THROWS_AS(Diagram(1, {{0, 5, 2}}), InvalidDiagram);
    CHECK_THROWS_AS(Diagram(1, {{2, 1, 2}}), InvalidDiagram);
    CHECK_THROWS_AS(Diagram(1, {{-1, 1, 2}}), InvalidDiagram);
    Diagram const d(2, {{1, 3, 4}, {0, 2, inf}, {0, 1, 9}});
    CHECK(d.bars().front() == Bar{0, 1, 9});
    CHECK(d.bars().back() == Bar{1, 3, 4});
}

namespace {

std::vector<FilteredComplex> random_complexes(std::mt19937_64& rng, int count)
{
    std::vector<FilteredComplex> out;
    for (int trial = 0; trial < count; ++trial) {
        int const d = 1 + trial % 3;
        std::size_t const extent = d == 1 ? 12 : d == 2 ? 5 : 2;
        auto const image = test::random_image(rng, d, extent, 1, 9);
        auto const n = default_pad_value(image);
        auto const t = build_t(image);
        auto const v = build_v(image);
        out.push_back(v.complex);
        out.push_back(t.complex);
        auto const closed = compactify_t(t, n);
        out.push_back(closed);
        out.push_back(dual_complex(closed, d));
        out.push_back(compactify_v(v, n));
        out.push_back(morse_complex(build_gradient(t.complex), t.complex).complex);
    }
    return out;
}

} // namespace

TEST_CASE("optimized reduction agrees with the naive oracle")
{
    std::mt19937_64 rng(101);
    int checked = 0;
    for (auto const& complex : random_complexes(rng, 60)) {
        if (complex.size() > 200)
            continue;
        ++checked;
        CHECK(compute_barcode(complex).bars() == oracle::naive_barcode(complex).bars());
        CHECK(compute_barcode(complex, {.keep_zero_bars = true}).bars() ==
              oracle::naive_barcode(complex, true).bars());
    }
    CHECK(checked > 200);
}

TEST_CASE("every cell is a birth, a death, or essential")
{
    std::mt19937_64 rng(103);
    for (auto const& complex : random_complexes(rng, 30)) {
        auto const pairs = compute_pairs(complex);
        CHECK(complex.size() == 2 * pairs.finite.size() + pairs.essential.size());

        std::vector<int> seen(complex.size(), 0);
        for (auto const& [b, d] : pairs.finite) {
            ++seen[b];
            ++seen[d];
            CHECK(complex.cell(d).dim == complex.cell(b).dim + 1);
        }
        for (auto e : pairs.essential)
            ++seen[e];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
}

TEST_CASE("essential bars count the Betti numbers")
{
    std::mt19937_64 rng(107);
    for (auto const& complex : random_complexes(rng, 24)) {
        auto const betti = oracle::betti_numbers(complex);
        std::vector<std::size_t> essential(betti.size(), 0);
        auto const diagram = compute_barcode(complex);
        for (auto const& bar : diagram.bars())
            if (bar.essential())
                ++essential[static_cast<std::size_t>(bar.dim)];
        CHECK(essential == betti);
    }
}

TEST_CASE("reduction is deterministic")
{
    auto const complex = build_t(pad(negate(test::grid3x3()), -10)).complex;
    auto const first = compute_pairs(complex);
    for (int i = 0; i < 5; ++i) {
        auto const again = compute_pairs(complex);
        CHECK(again.finite == first.finite);
        CHECK(again.essential == first.essential);
    }
}
