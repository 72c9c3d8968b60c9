// dualph command-line interface.
//
// Exit codes: 0 success, 1 validation or shape failure, 2 I/O or parse failure.

#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "dualph/dualize.hpp"
#include "dualph/io.hpp"
#include "dualph/morse.hpp"
#include "dualph/pipeline.hpp"
#include "dualph/transform.hpp"

namespace {

using namespace dualph;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_io = 2;

void emit(std::string const& text, std::string const& output)
{
    if (output.empty())
        std::cout << text;
    else
        io::write_file(output, text);
}

Construction parse_construction(std::string const& flag)
{
    return flag == "T" ? Construction::T : Construction::V;
}

struct BarcodeArgs
{
    std::string image;
    std::string construction = "V";
    bool dual = false;
    bool reduced = false;
    std::optional<double> pad_value;
    bool keep_zero_bars = false;
    std::string output;
};

int run_barcode(BarcodeArgs const& args)
{
    auto const image = io::read_image(args.image);
    auto const construction = parse_construction(args.construction);
    BarcodeOptions const options{args.keep_zero_bars};

    Diagram diagram;
    if (args.dual) {
        auto const sentinel = args.pad_value.value_or(separated_sentinel(image));
        diagram = dual_image_barcode(image, construction, sentinel, args.reduced, options);
    } else {
        if (args.pad_value) {
            auto const padded = pad(image, *args.pad_value);
            diagram = drop_sentinel(image_barcode(padded, construction, options), *args.pad_value);
        } else {
            diagram = image_barcode(image, construction, options);
        }
        if (args.reduced)
            diagram = reduce_diagram(diagram);
    }
    emit(io::format_diagram(diagram), args.output);
    return exit_ok;
}

struct ConvertArgs
{
    std::string diagram;
    std::string direction;
    std::optional<int> d;
    std::string output;
};

int run_convert(ConvertArgs const& args)
{
    auto const input = io::parse_diagram(io::read_file(args.diagram), args.diagram);
    int const d = args.d.value_or(input.d());
    Diagram result;
    if (args.direction == "v-to-t")
        result = convert_v_to_t(input, d);
    else if (args.direction == "t-to-v")
        result = convert_t_to_v(input, d);
    else
        result = invert_conversion(input, d);
    emit(io::format_diagram(result), args.output);
    return exit_ok;
}

struct VerifyArgs
{
    std::string image;
    std::optional<int> d;
    std::uint64_t seed = 0;
    std::size_t extent = 4;
};

ImageArray random_image(int d, std::size_t extent, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> value(1, 99);
    std::vector<std::size_t> shape(static_cast<std::size_t>(d), extent);
    std::size_t total = 1;
    for (auto e : shape)
        total *= e;
    std::vector<double> values(total);
    for (auto& v : values)
        v = value(rng);
    return ImageArray(std::move(shape), std::move(values));
}

int run_verify(VerifyArgs const& args)
{
    ImageArray image;
    if (!args.image.empty()) {
        image = io::read_image(args.image);
        if (args.d && *args.d != image.dim()) {
            std::cerr << "error: --d " << *args.d << " does not match image dimension " << image.dim()
                      << "\n";
            return exit_failure;
        }
    } else {
        image = random_image(args.d.value_or(2), args.extent, args.seed);
    }

    bool all = true;
    for (auto const& check : verify_image_duality(image)) {
        std::cout << check.name << ": " << (check.pass ? "PASS" : "FAIL");
        if (!check.pass)
            std::cout << " (" << check.first_mismatch << ")";
        std::cout << "\n";
        all = all && check.pass;
    }
    return all ? exit_ok : exit_failure;
}

struct ComplexArgs
{
    std::string input;
    std::string construction = "V";
    std::optional<int> d;
    std::optional<double> pad_value;
    std::string output;
};

// An abstract complex file, or an image built with the chosen construction.
FilteredComplex load_complex(ComplexArgs const& args)
{
    auto const text = io::read_file(args.input);
    if (!io::looks_like_image(text))
        return io::parse_complex(text, args.input);
    auto const image = io::parse_image(text, args.input);
    return build(image, parse_construction(args.construction)).complex;
}

int run_dualize(ComplexArgs const& args)
{
    auto const text = io::read_file(args.input);
    FilteredComplex closed;
    if (io::looks_like_image(text)) {
        auto const image = io::parse_image(text, args.input);
        auto const value = args.pad_value.value_or(default_pad_value(image));
        auto const cubical = build(image, parse_construction(args.construction));
        closed = cubical.construction == Construction::T ? compactify_t(cubical, value)
                                                         : compactify_v(cubical, value);
    } else {
        closed = io::parse_complex(text, args.input);
    }
    auto const dual = dual_complex(closed, args.d.value_or(closed.ambient_dim()));
    emit(io::format_complex(dual), args.output);
    return exit_ok;
}

struct MorseArgs
{
    ComplexArgs complex;
    std::string field;
    std::string action;
};

int run_morse(MorseArgs const& args)
{
    auto const complex = load_complex(args.complex);
    auto const field = args.field.empty()
                           ? build_gradient(complex)
                           : io::parse_field(io::read_file(args.field), complex, args.field);
    auto const& output = args.complex.output;

    if (args.action == "validate") {
        auto const report = validate_field(field, complex);
        std::string text;
        for (auto const& issue : report)
            text += std::string(to_string(issue.kind)) + ": " + issue.message + "\n";
        emit(text, output);
        return report.empty() ? exit_ok : exit_failure;
    }
    if (args.action == "dualize") {
        int const d = args.complex.d.value_or(complex.ambient_dim());
        auto const dual = dual_complex(complex, d);
        emit(io::format_field(dual_field(field, complex, d), dual), output);
        return exit_ok;
    }
    if (args.action == "critical") {
        std::string text;
        for (CellId id : critical_cells(field, complex))
            text += complex.name(id) + " " + std::to_string(complex.cell(id).dim) + "\n";
        emit(text, output);
        return exit_ok;
    }
    auto const morse = morse_complex(field, complex);
    emit(io::format_diagram(compute_barcode(morse.complex)), output);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Persistent homology of greyscale images under the T- and V-constructions, "
                 "with barcode conversion between them."};
    app.require_subcommand(1);

    BarcodeArgs barcode;
    auto* barcode_cmd = app.add_subcommand("barcode", "Compute the barcode of an image");
    barcode_cmd->add_option("image", barcode.image, "Image file (dense text or PGM P2)")->required();
    barcode_cmd->add_option("--construction", barcode.construction, "V or T")
        ->check(CLI::IsMember({"V", "T"}));
    barcode_cmd->add_flag("--dual", barcode.dual, "Use the padded, negated image; sentinel becomes inf");
    barcode_cmd->add_flag("--reduced", barcode.reduced, "Drop the essential 0-bar of minimal birth");
    barcode_cmd->add_option("--pad-value", barcode.pad_value, "Sentinel N for padding");
    barcode_cmd->add_flag("--keep-zero-bars", barcode.keep_zero_bars, "Keep bars with birth == death");
    barcode_cmd->add_option("--output", barcode.output, "Output file (default stdout)");

    ConvertArgs convert;
    auto* convert_cmd = app.add_subcommand("convert", "Convert a barcode between constructions");
    convert_cmd->add_option("diagram", convert.diagram, "Diagram JSON file")->required();
    convert_cmd->add_option("direction", convert.direction, "v-to-t, t-to-v or invert")
        ->required()
        ->check(CLI::IsMember({"v-to-t", "t-to-v", "invert"}));
    convert_cmd->add_option("--d", convert.d, "Image dimension (default: the file's d)");
    convert_cmd->add_option("--output", convert.output, "Output file (default stdout)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check both image bijections on one image");
    verify_cmd->add_option("image", verify.image, "Image file; omit to use a random image");
    verify_cmd->add_option("--d", verify.d, "Image dimension (random image default 2)");
    verify_cmd->add_option("--seed", verify.seed, "Seed for the random image");
    verify_cmd->add_option("--extent", verify.extent, "Random image extent per axis")
        ->check(CLI::PositiveNumber);

    ComplexArgs dualize;
    auto* dualize_cmd = app.add_subcommand("dualize", "Write the dual of a closed complex");
    dualize_cmd->add_option("input", dualize.input, "Complex file, or image to compactify")->required();
    dualize_cmd->add_option("--construction", dualize.construction, "V or T, for image input")
        ->check(CLI::IsMember({"V", "T"}));
    dualize_cmd->add_option("--d", dualize.d, "Dimension of the closed complex");
    dualize_cmd->add_option("--pad-value", dualize.pad_value, "Value of the compactifying cells");
    dualize_cmd->add_option("--output", dualize.output, "Output file (default stdout)");

    MorseArgs morse;
    auto* morse_cmd = app.add_subcommand("morse", "Discrete Morse operations on a filtered complex");
    morse_cmd->add_option("input", morse.complex.input, "Complex file or image")->required();
    morse_cmd->add_option("action", morse.action, "validate, dualize, critical or reduce")
        ->required()
        ->check(CLI::IsMember({"validate", "dualize", "critical", "reduce"}));
    morse_cmd->add_option("--field", morse.field, "Field file (default: greedy gradient)");
    morse_cmd->add_option("--construction", morse.complex.construction, "V or T, for image input")
        ->check(CLI::IsMember({"V", "T"}));
    morse_cmd->add_option("--d", morse.complex.d, "Dimension for dualize");
    morse_cmd->add_option("--output", morse.complex.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        return app.exit(e) == 0 ? exit_ok : exit_io;
    }

    try {
        if (barcode_cmd->parsed())
            return run_barcode(barcode);
        if (convert_cmd->parsed())
            return run_convert(convert);
        if (verify_cmd->parsed())
            return run_verify(verify);
        if (dualize_cmd->parsed())
            return run_dualize(dualize);
        return run_morse(morse);
    } catch (io::ParseError const& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_io;
    } catch (io::IoError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
}
