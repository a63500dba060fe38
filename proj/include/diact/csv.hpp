#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "diact/matrix.hpp"

namespace diact {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix with row and column labels, the on-disk CSV shape: a header row
/// of column labels, then one row per sector starting with its label.
/// Lines starting with '#' are comments.
struct LabeledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Matrix values{1, 1};
};

LabeledMatrix parse_matrix_csv(std::istream& in, const std::string& source_name = "<stream>");
LabeledMatrix load_matrix_csv(const std::string& path);

/// A vector is a one-column (or one-row) matrix CSV.
Vector as_vector(const LabeledMatrix& m);

/// Formats with 12 significant digits; round-trips every value produced by
/// the library exactly.
std::string format_number(double v);

void write_matrix_csv(std::ostream& out, const LabeledMatrix& m,
                      const std::vector<std::string>& comments = {});

}  // namespace diact
