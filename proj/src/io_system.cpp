#include "diact/io_system.hpp"

#include <cmath>
#include <string>

namespace diact {

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
    if (names.empty()) {
        for (std::size_t i = 0; i < n; ++i) names.push_back("sector-" + std::to_string(i + 1));
    }
    if (names.size() != n) throw ValidationError("sector name count does not match matrix size");
    return names;
}

void check_demand(const Vector& f, bool allow_negative) {
    if (!allow_negative && !f.nonnegative())
        throw ValidationError("final demand has a negative entry (pass the override to allow)");
}

}  // namespace

ViabilityReport viability(const Matrix& A) {
    if (!A.square()) throw std::invalid_argument("viability requires a square matrix");
    if (!A.nonnegative()) throw std::invalid_argument("viability requires a nonnegative matrix");
    ViabilityReport report;
    report.spectral_radius = spectral_radius_bound(A);

    const std::size_t n = A.rows();
    const Matrix I_minus_A = Matrix::identity(n) - A;
    report.hawkins_simon_minors_positive = true;
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix leading(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) leading(i, j) = I_minus_A(i, j);
        if (determinant(leading) <= 0.0) {
            report.hawkins_simon_minors_positive = false;
            break;
        }
    }

    report.leontief_nonnegative = false;
    if (report.spectral_radius < 1.0) {
        try {
            report.leontief_nonnegative = invert(I_minus_A).nonnegative(1e-12);
        } catch (const SingularMatrixError&) {
        }
    }
    return report;
}

IoSystem::IoSystem(Matrix Z, Vector f, Vector x, Matrix A, std::vector<std::string> names)
    : Z_(std::move(Z)),
      f_(std::move(f)),
      x_(std::move(x)),
      A_(std::move(A)),
      L_(invert(Matrix::identity(A_.rows()) - A_)),
      L_hat_(diag_of(L_)),
      rho_(spectral_radius_bound(A_)),
      names_(std::move(names)) {}

IoSystem IoSystem::from_transactions(Matrix Z, Vector f, std::vector<std::string> names,
                                     bool allow_negative_demand) {
    if (!Z.square()) throw ValidationError("transactions matrix must be square");
    if (Z.rows() != f.len()) throw ValidationError("final demand length does not match Z");
    if (!Z.nonnegative()) throw ValidationError("transactions matrix has a negative entry");
    check_demand(f, allow_negative_demand);

    const std::size_t n = Z.rows();
    Vector x = row_sums(Z) + f;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] <= 0.0)
            throw ValidationError("sector " + std::to_string(i + 1) + " has zero gross output");
    }
    Matrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) A(i, k) = Z(i, k) / x[k];

    const double rho = spectral_radius_bound(A);
    if (rho >= 1.0)
        throw ViabilityError("system is not viable: spectral radius of A is " +
                             std::to_string(rho) + " (must be < 1)");
    return IoSystem(std::move(Z), std::move(f), std::move(x), std::move(A),
                    default_names(n, std::move(names)));
}

IoSystem IoSystem::from_coefficients(Matrix A, Vector f, std::vector<std::string> names,
                                     bool allow_negative_demand) {
    if (!A.square()) throw ValidationError("coefficients matrix must be square");
    if (A.rows() != f.len()) throw ValidationError("final demand length does not match A");
    if (!A.nonnegative()) throw ValidationError("coefficients matrix has a negative entry");
    check_demand(f, allow_negative_demand);

    const double rho = spectral_radius_bound(A);
    if (rho >= 1.0)
        throw ViabilityError("system is not viable: spectral radius of A is " +
                             std::to_string(rho) + " (must be < 1)");

    const std::size_t n = A.rows();
    Matrix L = invert(Matrix::identity(n) - A);
    Vector x = L * f;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] <= 0.0)
            throw ValidationError("sector " + std::to_string(i + 1) + " has zero gross output");
    }
    Matrix Z = A * diag_from(x);
    return IoSystem(std::move(Z), std::move(f), std::move(x), std::move(A),
                    default_names(n, std::move(names)));
}

}  // namespace diact
