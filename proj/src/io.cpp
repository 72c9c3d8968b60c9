#include "dualph/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace dualph::io {

namespace {

struct Token
{
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

using Line = std::vector<Token>;

// Non-empty lines split on whitespace; '#' starts a comment to end of line.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t line_no = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto const eol = std::min(text.find('\n', pos), text.size());
        auto content = text.substr(pos, eol - pos);
        if (auto hash = content.find('#'); hash != std::string_view::npos)
            content = content.substr(0, hash);

        Line line;
        std::size_t i = 0;
        while (i < content.size()) {
            while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i])))
                ++i;
            auto const start = i;
            while (i < content.size() && !std::isspace(static_cast<unsigned char>(content[i])))
                ++i;
            if (i > start)
                line.push_back({content.substr(start, i - start), line_no, start + 1});
        }
        if (!line.empty())
            lines.push_back(std::move(line));
        if (eol == text.size())
            break;
        pos = eol + 1;
        ++line_no;
    }
    return lines;
}

[[noreturn]] void fail(std::string const& source, Token const& token, std::string const& what)
{
    throw ParseError(source, token.line, token.column, what);
}

double parse_real(std::string const& source, Token const& token)
{
    double value = 0.0;
    auto const* first = token.text.data();
    auto const* last = first + token.text.size();
    if (first != last && *first == '+')
        ++first;
    auto const [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last || !std::isfinite(value))
        fail(source, token, "expected a finite number, got '" + std::string(token.text) + "'");
    return value;
}

template <typename Int>
Int parse_integer(std::string const& source, Token const& token, char const* what)
{
    Int value{};
    auto const* first = token.text.data();
    auto const* last = first + token.text.size();
    auto const [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        fail(source, token, std::string("expected ") + what + ", got '" + std::string(token.text) + "'");
    return value;
}

std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

nlohmann::json endpoint_json(ExtendedValue const& value)
{
    if (!value.is_finite())
        return value.to_string();
    double const v = value.finite();
    if (std::trunc(v) == v && std::abs(v) < 9007199254740992.0)
        return static_cast<std::int64_t>(v);
    return v;
}

} // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column, std::string const& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      source_(std::move(source)),
      line_(line),
      column_(column)
{
}

std::string read_file(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(std::filesystem::path const& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw IoError("write failed for " + path.string());
}

bool looks_like_image(std::string_view text)
{
    auto const lines = tokenize(text);
    if (lines.empty())
        return false;
    auto const first = lines.front().front().text;
    return first == "P2" || first.starts_with("dims:");
}

ImageArray parse_image(std::string_view text, std::string const& source)
{
    auto const lines = tokenize(text);
    if (!lines.empty() && lines.front().front().text == "P2")
        return parse_pgm(text, source);
    return parse_dense_image(text, source);
}

ImageArray parse_dense_image(std::string_view text, std::string const& source)
{
    auto const lines = tokenize(text);
    if (lines.empty())
        throw ParseError(source, 1, 1, "empty image file; expected 'dims: n1 ... nd'");

    auto const& header = lines.front();
    auto head = header.front();
    std::size_t first_dim = 1;
    if (head.text == "dims:") {
        // "dims:" stands alone
    } else if (head.text.starts_with("dims:")) {
        // "dims:3 3" with no space after the colon
        head.text.remove_prefix(5);
        head.column += 5;
        first_dim = 0;
    } else {
        fail(source, head, "expected 'dims:' header");
    }

    std::vector<std::size_t> shape;
    for (std::size_t i = first_dim; i < header.size(); ++i) {
        auto const& token = i == 0 ? head : header[i];
        auto const extent = parse_integer<std::size_t>(source, token, "a positive integer extent");
        if (extent == 0)
            fail(source, token, "extents must be positive");
        shape.push_back(extent);
    }
    if (shape.empty())
        fail(source, head, "'dims:' needs at least one extent");

    std::size_t expected = 1;
    for (auto e : shape)
        expected *= e;

    std::vector<double> values;
    values.reserve(expected);
    for (std::size_t l = 1; l < lines.size(); ++l) {
        for (auto const& token : lines[l]) {
            if (values.size() == expected)
                fail(source, token, "more than " + std::to_string(expected) + " values");
            values.push_back(parse_real(source, token));
        }
    }
    if (values.size() != expected) {
        auto const& last = lines.back().back();
        throw ParseError(source, last.line, last.column + last.text.size(),
                         "expected " + std::to_string(expected) + " values, found " +
                             std::to_string(values.size()));
    }
    return ImageArray(std::move(shape), std::move(values));
}

ImageArray parse_pgm(std::string_view text, std::string const& source)
{
    std::vector<Token> tokens;
    for (auto& line : tokenize(text))
        tokens.insert(tokens.end(), line.begin(), line.end());
    if (tokens.empty() || tokens.front().text != "P2")
        throw ParseError(source, 1, 1, "expected PGM magic 'P2'");
    if (tokens.size() < 4) {
        auto const& last = tokens.back();
        fail(source, last, "truncated PGM header");
    }
    auto const width = parse_integer<std::size_t>(source, tokens[1], "a width");
    auto const height = parse_integer<std::size_t>(source, tokens[2], "a height");
    auto const maxval = parse_integer<long>(source, tokens[3], "a maxval");
    if (width == 0)
        fail(source, tokens[1], "width must be positive");
    if (height == 0)
        fail(source, tokens[2], "height must be positive");
    if (maxval < 1 || maxval > 65535)
        fail(source, tokens[3], "maxval must be in 1..65535");

    auto const expected = width * height;
    if (tokens.size() - 4 != expected) {
        auto const& at = tokens.size() - 4 > expected ? tokens[4 + expected] : tokens.back();
        fail(source, at,
             "expected " + std::to_string(expected) + " pixels, found " + std::to_string(tokens.size() - 4));
    }
    std::vector<double> values;
    values.reserve(expected);
    for (std::size_t i = 4; i < tokens.size(); ++i) {
        auto const v = parse_integer<long>(source, tokens[i], "a pixel value");
        if (v < 0 || v > maxval)
            fail(source, tokens[i], "pixel value outside 0.." + std::to_string(maxval));
        values.push_back(static_cast<double>(v));
    }
    return ImageArray({height, width}, std::move(values));
}

std::string format_dense_image(ImageArray const& image)
{
    std::string out = "dims:";
    for (auto e : image.shape())
        out += " " + std::to_string(e);
    out += "\n";
    auto const row = image.shape().empty() ? 1 : image.shape().back();
    for (std::size_t i = 0; i < image.size(); ++i) {
        out += format_double(image.values()[i]);
        out += (i + 1) % row == 0 ? "\n" : " ";
    }
    return out;
}

ImageArray read_image(std::filesystem::path const& path)
{
    return parse_image(read_file(path), path.string());
}

std::string format_diagram(Diagram const& diagram)
{
    std::string out = "{\n";
    out += "  \"d\": " + std::to_string(diagram.d()) + ",\n";
    out += "  \"construction\": " + nlohmann::json(to_string(diagram.kind())).dump() + ",\n";
    out += std::string("  \"reduced\": ") + (diagram.reduced() ? "true" : "false") + ",\n";
    out += "  \"bars\": [";
    auto const& bars = diagram.bars();
    for (std::size_t i = 0; i < bars.size(); ++i) {
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"dim\": " + std::to_string(bars[i].dim) +
               ", \"birth\": " + endpoint_json(bars[i].birth).dump() +
               ", \"death\": " + endpoint_json(bars[i].death).dump() + "}";
    }
    out += bars.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

Diagram parse_diagram(std::string_view text, std::string const& source)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
        auto const [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(source, line, column, "malformed JSON: " + std::string(e.what()));
    }

    auto schema = [&](std::string const& where, std::string const& what) -> ParseError {
        return ParseError(source, 0, 0, where + ": " + what);
    };
    if (!doc.is_object())
        throw schema("document", "expected an object");

    auto const d_it = doc.find("d");
    if (d_it == doc.end() || !d_it->is_number_integer() || d_it->get<long>() < 0)
        throw schema("d", "expected a nonnegative integer");
    auto const d = d_it->get<int>();

    auto kind = DiagramKind::Abstract;
    if (auto it = doc.find("construction"); it != doc.end()) {
        auto parsed = it->is_string() ? parse_diagram_kind(it->get<std::string>()) : std::nullopt;
        if (!parsed)
            throw schema("construction", "expected one of V, T, dual-T, dual-V, abstract");
        kind = *parsed;
    }
    bool reduced = false;
    if (auto it = doc.find("reduced"); it != doc.end()) {
        if (!it->is_boolean())
            throw schema("reduced", "expected a boolean");
        reduced = it->get<bool>();
    }

    auto const bars_it = doc.find("bars");
    if (bars_it == doc.end() || !bars_it->is_array())
        throw schema("bars", "expected an array");

    std::vector<Bar> bars;
    for (std::size_t i = 0; i < bars_it->size(); ++i) {
        auto const& item = (*bars_it)[i];
        auto const where = "bars[" + std::to_string(i) + "]";
        if (!item.is_object())
            throw schema(where, "expected an object");
        auto const dim = item.find("dim");
        if (dim == item.end() || !dim->is_number_integer() || dim->get<long>() < 0)
            throw schema(where + ".dim", "expected a nonnegative integer");

        auto endpoint = [&](char const* key, char const* infinite) {
            auto const it = item.find(key);
            auto const here = where + "." + key;
            if (it == item.end())
                throw schema(here, "missing");
            if (it->is_number())
                return ExtendedValue(it->get<double>());
            if (it->is_string() && it->get<std::string>() == infinite)
                return ExtendedValue::parse(infinite);
            throw schema(here, std::string("expected a number or \"") + infinite + "\"");
        };
        bars.push_back({dim->get<int>(), endpoint("birth", "-inf"), endpoint("death", "inf")});
    }

    try {
        return Diagram(d, std::move(bars), kind, reduced);
    } catch (InvalidDiagram const& e) {
        throw schema("bars", e.what());
    }
}

std::string format_complex(FilteredComplex const& complex)
{
    std::string out;
    for (CellId id = 0; id < complex.size(); ++id) {
        auto const& cell = complex.cell(id);
        out += complex.name(id) + " " + std::to_string(cell.dim) + " " + cell.value.to_string();
        for (CellId facet : cell.boundary)
            out += " " + complex.name(facet);
        out += "\n";
    }
    return out;
}

FilteredComplex parse_complex(std::string_view text, std::string const& source)
{
    auto const lines = tokenize(text);
    std::unordered_map<std::string_view, CellId> ids;
    std::vector<std::string> names;
    std::vector<Cell> cells;
    int top = 0;

    for (auto const& line : lines) {
        if (line.size() < 3)
            fail(source, line.back(), "expected 'id dim value facet-ids...'");
        if (!ids.emplace(line[0].text, static_cast<CellId>(cells.size())).second)
            fail(source, line[0], "duplicate cell id '" + std::string(line[0].text) + "'");
        Cell cell;
        cell.dim = parse_integer<int>(source, line[1], "a nonnegative dimension");
        if (cell.dim < 0)
            fail(source, line[1], "dimension must be nonnegative");
        try {
            cell.value = ExtendedValue::parse(std::string(line[2].text));
        } catch (std::invalid_argument const&) {
            fail(source, line[2], "expected a number, inf or -inf");
        }
        top = std::max(top, cell.dim);
        names.emplace_back(line[0].text);
        cells.push_back(std::move(cell));
    }

    // facets may refer forward, so resolve them in a second pass
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t t = 3; t < lines[i].size(); ++t) {
            auto const it = ids.find(lines[i][t].text);
            if (it == ids.end())
                fail(source, lines[i][t], "unknown facet '" + std::string(lines[i][t].text) + "'");
            cells[i].boundary.push_back(it->second);
        }
    }
    return FilteredComplex(std::move(cells), top, std::move(names));
}

std::string format_field(DiscreteVectorField const& field, FilteredComplex const& complex)
{
    std::string out;
    for (auto const& pair : field.pairs())
        out += complex.name(pair.tail) + " " + complex.name(pair.head) + "\n";
    return out;
}

DiscreteVectorField parse_field(std::string_view text, FilteredComplex const& complex,
                                std::string const& source)
{
    std::vector<GradientPair> pairs;
    for (auto const& line : tokenize(text)) {
        if (line.size() != 2)
            fail(source, line.front(), "expected 'tail head'");
        CellId ends[2];
        for (int k = 0; k < 2; ++k) {
            auto const id = complex.find(std::string(line[k].text));
            if (!id)
                fail(source, line[k], "unknown cell '" + std::string(line[k].text) + "'");
            ends[k] = *id;
        }
        pairs.push_back({ends[0], ends[1]});
    }
    return DiscreteVectorField(std::move(pairs));
}

} // namespace dualph::io
