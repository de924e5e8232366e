#include "relkit/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace relkit {

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix json: expected an object with rows, cols, entries");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
        !j["entries"].is_array())
        throw ParseError("matrix json: rows/cols must be integers and entries an array");
    const auto rows = j["rows"].get<Index>();
    const auto cols = j["cols"].get<Index>();
    if (rows < 0 || cols < 0) throw ParseError("matrix json: negative dimensions");
    const auto& entries = j["entries"];
    if (static_cast<Index>(entries.size()) != rows * cols)
        throw ParseError("matrix json: entry count does not equal rows * cols");
    Matrix m(rows, cols);
    Index idx = 0;
    for (Index i = 0; i < rows; ++i) {
        for (Index k = 0; k < cols; ++k, ++idx) {
            const auto& cell = entries[static_cast<std::size_t>(idx)];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw ParseError("matrix json: each entry must be a [re, im] pair");
            m(i, k) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    if (!all_finite(m)) throw ParseError("matrix json: non-finite entries");
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index k = 0; k < m.cols(); ++k)
            entries.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace {

/// Accepts plain reals; complex "a+bi" cells are recognized and rejected,
/// since the CSV route carries real matrices only.
double parse_csv_cell(const std::string& raw) {
    std::string cell;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) cell.push_back(c);
    if (cell.empty()) throw ParseError("matrix csv: empty cell");
    if (cell.find('i') != std::string::npos || cell.find('I') != std::string::npos)
        throw ParseError("matrix csv: complex cells are not accepted; use the json format");
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(cell, &consumed);
    } catch (const std::exception&) {
        throw ParseError("matrix csv: cannot parse cell '" + raw + "'");
    }
    if (consumed != cell.size())
        throw ParseError("matrix csv: trailing characters in cell '" + raw + "'");
    return value;
}

Matrix matrix_from_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(parse_csv_cell(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("matrix csv: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix csv: no data");
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index k = 0; k < m.cols(); ++k)
            m(i, k) = Complex(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], 0.0);
    if (!all_finite(m)) throw ParseError("matrix csv: non-finite entries");
    return m;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    if (has_suffix(path, ".csv")) return matrix_from_csv(in);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid json in '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

void save_matrix(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << matrix_to_json(m).dump(2) << '\n';
}

Json subspace_to_json(const Subspace& s) {
    return Json{{"ambient_dim", s.ambient()},
                {"dim", s.dim()},
                {"basis", matrix_to_json(s.basis())}};
}

}  // namespace relkit
