#pragma once

#include <string>
#include <vector>

#include "diact/matrix.hpp"

namespace diact {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ViabilityError : ValidationError {
    using ValidationError::ValidationError;
};

/// Diagnostics for the viability of a coefficient matrix.
struct ViabilityReport {
    double spectral_radius = 0.0;
    bool hawkins_simon_minors_positive = false;
    bool leontief_nonnegative = false;

    bool viable() const { return spectral_radius < 1.0; }
};

ViabilityReport viability(const Matrix& A);

/// A validated input-output economy. Transactions Z use the row-to-column
/// convention: producer in row, consumer in column. Immutable once built.
class IoSystem {
public:
    static IoSystem from_transactions(Matrix Z, Vector f, std::vector<std::string> names = {},
                                      bool allow_negative_demand = false);
    static IoSystem from_coefficients(Matrix A, Vector f, std::vector<std::string> names = {},
                                      bool allow_negative_demand = false);

    std::size_t n() const { return Z_.rows(); }
    const std::vector<std::string>& sector_names() const { return names_; }
    const Matrix& Z() const { return Z_; }
    const Vector& f() const { return f_; }
    const Vector& x() const { return x_; }
    const Matrix& A() const { return A_; }
    const Matrix& L() const { return L_; }
    /// Diagonal of L as a diagonal matrix.
    const Matrix& L_hat() const { return L_hat_; }
    double spectral_radius() const { return rho_; }

private:
    IoSystem(Matrix Z, Vector f, Vector x, Matrix A, std::vector<std::string> names);

    Matrix Z_;
    Vector f_;
    Vector x_;
    Matrix A_;
    Matrix L_;
    Matrix L_hat_;
    double rho_;
    std::vector<std::string> names_;
};

}  // namespace diact
