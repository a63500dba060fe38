#include "diact/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace diact {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_cell(const std::string& cell, const std::string& source, std::size_t line_no) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(cell, &consumed);
    } catch (const std::exception&) {
        throw ParseError(source + ":" + std::to_string(line_no) + ": cell '" + cell +
                         "' is not a number");
    }
    if (consumed != cell.size() || !std::isfinite(v))
        throw ParseError(source + ":" + std::to_string(line_no) + ": cell '" + cell +
                         "' is not a finite decimal");
    return v;
}

}  // namespace

LabeledMatrix parse_matrix_csv(std::istream& in, const std::string& source_name) {
    LabeledMatrix out;
    std::vector<double> entries;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto fields = split_fields(line);
        if (!have_header) {
            if (fields.size() < 2)
                throw ParseError(source_name + ": header must name at least one column");
            out.col_labels.assign(fields.begin() + 1, fields.end());
            have_header = true;
            continue;
        }
        if (fields.size() != out.col_labels.size() + 1)
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": ragged row (" +
                             std::to_string(fields.size() - 1) + " values, expected " +
                             std::to_string(out.col_labels.size()) + ")");
        out.row_labels.push_back(fields[0]);
        for (std::size_t k = 1; k < fields.size(); ++k)
            entries.push_back(parse_cell(fields[k], source_name, line_no));
    }
    if (!have_header || out.row_labels.empty())
        throw ParseError(source_name + ": no matrix data found");
    out.values = Matrix(out.row_labels.size(), out.col_labels.size(), std::move(entries));
    return out;
}

LabeledMatrix load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_matrix_csv(in, path);
}

Vector as_vector(const LabeledMatrix& m) {
    if (m.values.cols() == 1) {
        std::vector<double> v(m.values.entries().begin(), m.values.entries().end());
        return Vector(std::move(v));
    }
    if (m.values.rows() == 1) {
        std::vector<double> v(m.values.entries().begin(), m.values.entries().end());
        return Vector(std::move(v));
    }
    throw ParseError("expected a one-column (or one-row) CSV for a vector");
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_matrix_csv(std::ostream& out, const LabeledMatrix& m,
                      const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "sector";
    for (const auto& label : m.col_labels) out << "," << label;
    out << "\n";
    for (std::size_t i = 0; i < m.values.rows(); ++i) {
        out << m.row_labels[i];
        for (std::size_t k = 0; k < m.values.cols(); ++k)
            out << "," << format_number(m.values(i, k));
        out << "\n";
    }
}

}  // namespace diact
