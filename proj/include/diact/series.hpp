#pragma once

#include <utility>

#include "diact/io_system.hpp"

namespace diact {

struct SeriesReport {
    std::size_t terms_used = 0;
    double residual_inf_norm = 0.0;
    bool converged = false;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partial sum I + A + ... + A^(n_terms-1), accumulated with one running
/// power matrix and no inversion. Independent of the LU-based inverse.
Matrix truncated_leontief(const Matrix& A, std::size_t n_terms);

/// The n-th propagation round: (A^n * f_hat, A^n * f).
std::pair<Matrix, Vector> propagation_round(const IoSystem& sys, std::size_t n);

/// Accumulates series terms until the partial sum is within tol of L (in
/// infinity norm) or 10^6 terms, and cross-checks the series forms of the
/// legacy matrices E1 = sum_{k>=1} A^k and E3 = sum_{k>=2} A^k against the
/// LU-based values. Throws ConvergenceError if the cap is hit.
SeriesReport verify_system(const IoSystem& sys, double tol);

}  // namespace diact
