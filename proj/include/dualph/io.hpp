#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dualph/chain_complex.hpp"
#include "dualph/cubical.hpp"
#include "dualph/morse.hpp"
#include "dualph/persistence.hpp"

namespace dualph::io {

/// Malformed input, located at a 1-based line and column (0 when unknown).
class ParseError : public std::runtime_error
{
public:
    ParseError(std::string source, std::size_t line, std::size_t column, std::string const& what);

    std::string const& source() const { return source_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

/// Unreadable or unwritable file.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(std::filesystem::path const& path);
void write_file(std::filesystem::path const& path, std::string_view contents);

// Images: dense text ("dims: n1 ... nd" then row-major values, '#' comment
// lines) or plain PGM (P2). The format is detected from the content.
ImageArray parse_image(std::string_view text, std::string const& source = "<input>");
ImageArray parse_dense_image(std::string_view text, std::string const& source = "<input>");
ImageArray parse_pgm(std::string_view text, std::string const& source = "<input>");
std::string format_dense_image(ImageArray const& image);
ImageArray read_image(std::filesystem::path const& path);

/// True when the text looks like an image (dense or PGM) rather than a complex.
bool looks_like_image(std::string_view text);

// Diagrams: JSON with keys d, construction, reduced, bars; bars sorted by
// (dim, birth, death); infinite endpoints are the strings "inf" / "-inf".
std::string format_diagram(Diagram const& diagram);
Diagram parse_diagram(std::string_view text, std::string const& source = "<input>");

// Abstract complexes: one cell per line, "id dim value facet-ids...".
std::string format_complex(FilteredComplex const& complex);
FilteredComplex parse_complex(std::string_view text, std::string const& source = "<input>");

// Vector fields: one "tail head" pair of cell names per line.
std::string format_field(DiscreteVectorField const& field, FilteredComplex const& complex);
DiscreteVectorField parse_field(std::string_view text, FilteredComplex const& complex,
                                std::string const& source = "<input>");

} // namespace dualph::io
