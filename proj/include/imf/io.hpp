#pragma once

#include <iosfwd>
#include <string>

#include "imf/matrix.hpp"

namespace imf {

/// Matrix text parse failure with 1-based location.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line, column;
};

/// Text grammar: rows on lines, entries whitespace-separated, each an
/// optionally signed integer or "p/q" fraction; blank lines ignored; "#"
/// starts a comment. A document whose first non-space character is '{' is
/// instead parsed as JSON {rows, cols, entries: [strings]}.
Matrix parse_matrix(const std::string& text);
Matrix read_matrix_file(const std::string& path);

std::string matrix_to_text(const Matrix& m);
std::string vector_to_text(const Vec& v);  // "(a, b, c)" with exact fractions

}  // namespace imf
