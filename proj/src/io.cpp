#include "imf/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace imf {

namespace {

Matrix parse_json_matrix(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, 1, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("rows") || !doc.contains("cols") || !doc.contains("entries"))
        throw ParseError(1, 1, "JSON matrix needs rows, cols and entries fields");
    const std::size_t rows = doc["rows"].get<std::size_t>();
    const std::size_t cols = doc["cols"].get<std::size_t>();
    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != rows * cols)
        throw ParseError(1, 1, "JSON entries length must equal rows*cols");
    std::vector<Rat> values;
    values.reserve(entries.size());
    for (const auto& e : entries) {
        auto r = parse_rational(e.get<std::string>());
        if (!r) throw ParseError(1, 1, "bad rational entry '" + e.get<std::string>() + "'");
        values.push_back(*r);
    }
    return Matrix(rows, cols, std::move(values));
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json_matrix(text);

    std::vector<std::vector<Rat>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<Rat> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
                continue;
            }
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            auto r = parse_rational(std::string_view(line).substr(pos, end - pos));
            if (!r)
                throw ParseError(lineno, pos + 1,
                                 "bad rational entry '" + line.substr(pos, end - pos) + "'");
            row.push_back(*r);
            pos = end;
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(lineno, 1, "row length differs from previous rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno == 0 ? 1 : lineno, 1, "no matrix rows found");
    return Matrix::from_rows(rows);
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string matrix_to_text(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string vector_to_text(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace imf
