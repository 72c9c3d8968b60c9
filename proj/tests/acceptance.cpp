// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
//   dualph-acceptance [--golden <dir>] [--emit <dir>]
//
// --golden compares the diagram files of criteria 1-5 with stored copies;
// --emit writes them (used to refresh the stored copies).

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "dualph/dualize.hpp"
#include "dualph/io.hpp"
#include "dualph/morse.hpp"
#include "dualph/pipeline.hpp"
#include "dualph/transform.hpp"

using namespace dualph;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

struct Outcome
{
    bool pass = true;
    std::string detail;

    void require(bool ok, std::string const& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Bar> sorted(std::vector<Bar> bars)
{
    std::sort(bars.begin(), bars.end());
    return bars;
}

std::string show(Diagram const& diagram)
{
    std::string out = "{";
    for (auto const& bar : diagram.bars())
        out += (out.size() > 1 ? ", " : "") + to_string(bar);
    return out + "}";
}

bool same(Diagram const& got, std::vector<Bar> const& expected)
{
    return got.bars() == sorted(expected);
}

ImageArray running_example()
{
    return ImageArray({3, 3}, {5, 1, 6, 2, 9, 4, 8, 3, 7});
}

// Cube fixture: f on vertices 1..8, cells take the max of their vertices.
FilteredComplex cube()
{
    return io::parse_complex(R"(a 0 1
v2 0 2
v3 0 3
v4 0 4
v5 0 5
v6 0 6
v7 0 7
v8 0 8
e12 1 2 a v2
e23 1 3 v2 v3
e34 1 4 v3 v4
e45 1 5 v4 v5
b 1 6 v5 v6
e16 1 6 a v6
e17 1 7 a v7
e37 1 7 v3 v7
e57 1 7 v5 v7
e28 1 8 v2 v8
e48 1 8 v4 v8
e68 1 8 v6 v8
back 2 7 e37 e34 e45 e57
top 2 7 e12 e23 e37 e17
c 2 7 e17 e57 b e16
front 2 8 e12 e28 e68 e16
right 2 8 e23 e34 e48 e28
d 2 8 e68 e48 e45 b
)",
                             "cube");
}

DiscreteVectorField cube_field(FilteredComplex const& complex)
{
    return io::parse_field("v2 e12\nv3 e23\nv4 e34\nv5 e45\nv6 e16\nv7 e17\n"
                           "e37 top\ne57 back\nv8 e28\ne68 front\ne48 right\n",
                           complex, "cube.field");
}

ImageArray random_image(std::mt19937_64& rng, int d, std::size_t max_extent)
{
    std::uniform_int_distribution<std::size_t> extent(1, max_extent);
    std::uniform_int_distribution<int> value(1, 99);
    std::vector<std::size_t> shape;
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        shape.push_back(extent(rng));
        total *= shape.back();
    }
    std::vector<double> values(total);
    for (auto& v : values)
        v = value(rng);
    return ImageArray(std::move(shape), std::move(values));
}

// Complexes visited by criteria 6-8, collected for the counting identity.
std::vector<FilteredComplex> visited;

// Diagram files of criteria 1-5, keyed by file name.
std::map<std::string, std::string> diagram_files()
{
    auto const image = running_example();
    auto const v = image_barcode(image, Construction::V);
    auto const t = image_barcode(image, Construction::T);
    auto const dual = dual_image_barcode(image, Construction::T, default_pad_value(image), false);
    auto const x = cube();
    return {
        {"v.json", io::format_diagram(v)},
        {"t.json", io::format_diagram(t)},
        {"dual_t.json", io::format_diagram(dual)},
        {"v_to_t.json", io::format_diagram(convert_v_to_t(v, 2))},
        {"cube.json", io::format_diagram(compute_barcode(x))},
        {"cube_dual.json", io::format_diagram(compute_barcode(dual_complex(x, 2)))},
        {"cube_dual_barcode.json", io::format_diagram(dual_barcode(compute_barcode(x), 2))},
    };
}

Outcome golden_v()
{
    Outcome out;
    auto const start = Clock::now();
    auto const diagram = compute_barcode(build_v(running_example()).complex);
    auto const ms = elapsed_ms(start);
    out.require(same(diagram, {{0, 1, inf}, {0, 2, 5}, {0, 3, 7}, {0, 4, 6}, {1, 8, 9}}),
                "got " + show(diagram));
    out.require(ms < 10, "took " + std::to_string(ms) + " ms");
    return out;
}

Outcome golden_t()
{
    Outcome out;
    auto const diagram = compute_barcode(build_t(running_example()).complex);
    out.require(same(diagram, {{0, 1, inf}, {1, 4, 9}}), "got " + show(diagram));
    return out;
}

std::vector<Bar> const dual_t_bars = {{0, -inf, inf}, {0, -9, -8}, {1, -inf, -1},
                               {1, -5, -2},    {1, -7, -3}, {1, -6, -4}};

Outcome golden_dual()
{
    Outcome out;
    auto const image = running_example();
    auto const n = default_pad_value(image);
    auto const diagram = drop_sentinel(compute_barcode(build_t(pad(negate(image), -n)).complex), n);
    out.require(same(diagram, dual_t_bars), "got " + show(diagram));
    return out;
}

Outcome conversion()
{
    Outcome out;
    Diagram const v_diagram(2, {{0, 1, inf}, {0, 2, 5}, {0, 3, 7}, {0, 4, 6}, {1, 8, 9}});
    auto const converted = convert_v_to_t(v_diagram, 2);
    auto const expected = reduce_diagram(Diagram(2, dual_t_bars));
    out.require(converted.bars() == expected.bars(),
                "converted " + show(converted) + " vs " + show(expected));
    return out;
}

Outcome example_one()
{
    Outcome out;
    auto const x = cube();
    auto const forward = compute_barcode(x);
    auto const backward = compute_barcode(dual_complex(x, 2));
    out.require(same(forward, {{0, 1, inf}, {1, 6, 7}, {2, 8, inf}}), "Dgm(X) = " + show(forward));
    out.require(same(backward, {{0, -8, inf}, {0, -7, -6}, {2, -1, inf}}), "Dgm(X*) = " + show(backward));
    out.require(dual_barcode(forward, 2).bars() == backward.bars(), "Dgm(X) does not map to Dgm(X*)");
    out.require(dual_barcode(backward, 2).bars() == forward.bars(), "Dgm(X*) does not map to Dgm(X)");
    return out;
}

Outcome image_bijections()
{
    Outcome out;
    std::mt19937_64 rng(2024);
    auto const start = Clock::now();
    auto run = [&](int d, std::size_t extent, int count) {
        for (int i = 0; i < count && out.pass; ++i) {
            auto const image = random_image(rng, d, extent);
            for (auto const& check : verify_image_duality(image))
                out.require(check.pass, check.name + " on " + io::format_dense_image(image) + ": " +
                                            check.first_mismatch);
            auto const n = separated_sentinel(image);
            auto const negated = pad(negate(image), -n);
            visited.push_back(build_v(image).complex);
            visited.push_back(build_t(image).complex);
            visited.push_back(build_t(negated).complex);
            visited.push_back(build_v(negated).complex);
        }
    };
    run(2, 8, 200);
    run(3, 4, 50);
    auto const ms = elapsed_ms(start);
    out.require(ms < 60000, "took " + std::to_string(ms) + " ms");
    return out;
}

Outcome sphere_duality()
{
    Outcome out;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50 && out.pass; ++i) {
        int const d = 1 + i % 3;
        auto const image = random_image(rng, d, d == 3 ? 4 : 8);
        auto const closed = compactify_t(build_t(image), default_pad_value(image));
        auto const dual = dual_complex(closed, d);
        auto const expected = compute_barcode(dual);
        auto const got = dual_barcode(compute_barcode(closed), d);
        out.require(got.bars() == expected.bars(),
                    "image " + io::format_dense_image(image) + ": " + first_mismatch(got, expected));
        visited.push_back(closed);
        visited.push_back(dual);
    }
    return out;
}

std::vector<std::string> names(FilteredComplex const& complex, std::vector<CellId> const& ids)
{
    std::vector<std::string> out;
    for (auto id : ids)
        out.push_back(complex.name(id));
    return out;
}

Outcome morse()
{
    Outcome out;
    auto const x = cube();
    auto const field = cube_field(x);
    out.require(validate_field(field, x).empty(), "cube field is invalid");
    out.require(names(x, critical_cells(field, x)) == std::vector<std::string>{"a", "b", "c", "d"},
                "critical cells differ");

    auto const m = morse_complex(field, x);
    std::map<std::string, std::vector<std::string>> boundary;
    for (CellId id = 0; id < m.complex.size(); ++id)
        for (CellId f : m.complex.cell(id).boundary)
            boundary[x.name(m.source[id])].push_back(x.name(m.source[f]));
    out.require(boundary["b"].empty() && boundary["c"] == std::vector<std::string>{"b"} &&
                    boundary["d"] == std::vector<std::string>{"b"},
                "Morse boundary differs");
    out.require(compute_barcode(m.complex).bars() == compute_barcode(x).bars(), "Morse barcode differs");
    visited.push_back(x);
    visited.push_back(m.complex);

    auto const octahedron = dual_complex(x, 2);
    auto const star = dual_field(field, x, 2);
    out.require(validate_field(star, octahedron).empty(), "dual field is invalid");
    out.require(names(octahedron, critical_cells(star, octahedron)) ==
                    std::vector<std::string>{"d*", "c*", "b*", "a*"},
                "dual critical cells differ");

    std::mt19937_64 rng(99);
    for (int i = 0; i < 100 && out.pass; ++i) {
        int const d = 1 + i % 3;
        auto const image = random_image(rng, d, d == 3 ? 4 : 8);
        auto const complex = i % 2 == 0 ? build_v(image).complex : build_t(image).complex;
        auto const greedy = build_gradient(complex);
        out.require(validate_field(greedy, complex).empty(), "greedy field is invalid");
        auto const reduced = morse_complex(greedy, complex).complex;
        out.require(compute_barcode(reduced).bars() == compute_barcode(complex).bars(),
                    "Morse barcode differs on " + io::format_dense_image(image));
        visited.push_back(complex);
        visited.push_back(reduced);
    }
    return out;
}

Outcome counting()
{
    Outcome out;
    out.require(!visited.empty(), "no complexes were visited");
    for (auto const& complex : visited) {
        auto const diagram = compute_barcode(complex, {.keep_zero_bars = true});
        std::size_t finite = 0;
        std::size_t essential = 0;
        for (auto const& bar : diagram.bars())
            (bar.essential() ? essential : finite) += 1;
        out.require(complex.size() == 2 * finite + essential,
                    std::to_string(complex.size()) + " cells vs " + std::to_string(finite) +
                        " finite and " + std::to_string(essential) + " essential bars");
    }
    if (out.pass)
        out.detail = std::to_string(visited.size()) + " complexes";
    return out;
}

std::string golden_dir;

Outcome determinism()
{
    Outcome out;
    auto const first = diagram_files();
    for (int run = 0; run < 3; ++run)
        out.require(diagram_files() == first, "repeated run produced different bytes");
    if (!golden_dir.empty()) {
        for (auto const& [name, text] : first) {
            auto const path = std::filesystem::path(golden_dir) / name;
            std::string stored;
            try {
                stored = io::read_file(path);
            } catch (io::IoError const& e) {
                out.require(false, e.what());
                continue;
            }
            out.require(stored == text, name + " differs from the stored copy");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance checks"};
    std::string emit_dir;
    app.add_option("--golden", golden_dir, "directory with stored diagram files");
    app.add_option("--emit", emit_dir, "write the diagram files of criteria 1-5 here and exit");
    CLI11_PARSE(app, argc, argv);

    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (auto const& [name, text] : diagram_files())
            io::write_file(std::filesystem::path(emit_dir) / name, text);
        return 0;
    }

    std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria = {
        {"golden V barcode of the 3x3 image", golden_v},
        {"golden T barcode of the 3x3 image", golden_t},
        {"golden dual T barcode with sentinel relabelling", golden_dual},
        {"V-to-T conversion equals the reduced dual barcode", conversion},
        {"cube and octahedron barcodes correspond", example_one},
        {"both image bijections on 250 random images", image_bijections},
        {"dual barcode on 50 compactified T-complexes", sphere_duality},
        {"Morse complexes reproduce critical cells and barcodes", morse},
        {"cells = 2 finite bars + essential bars", counting},
        {"diagram files are byte-identical across runs", determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto const& [label, check] = criteria[i];
        auto const start = Clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (std::exception const& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::ostringstream line;
        line << "criterion " << i + 1 << ": " << (outcome.pass ? "PASS" : "FAIL") << "  " << label
             << " (" << static_cast<long>(elapsed_ms(start)) << " ms)";
        if (!outcome.detail.empty())
            line << " [" << outcome.detail << "]";
        std::cout << line.str() << "\n";
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
