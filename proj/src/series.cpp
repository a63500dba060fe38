#include "diact/series.hpp"

#include "diact/requirements.hpp"

namespace diact {

Matrix truncated_leontief(const Matrix& A, std::size_t n_terms) {
    if (!A.square()) throw std::invalid_argument("truncated_leontief requires a square matrix");
    if (n_terms < 1) throw std::invalid_argument("truncated_leontief requires n_terms >= 1");
    Matrix sum = Matrix::identity(A.rows());
    Matrix power = Matrix::identity(A.rows());
    for (std::size_t k = 1; k < n_terms; ++k) {
        power = power * A;
        sum = sum + power;
    }
    return sum;
}

std::pair<Matrix, Vector> propagation_round(const IoSystem& sys, std::size_t n) {
    Matrix power = Matrix::identity(sys.n());
    for (std::size_t k = 0; k < n; ++k) power = power * sys.A();
    return {power * diag_from(sys.f()), power * sys.f()};
}

SeriesReport verify_system(const IoSystem& sys, double tol) {
    constexpr std::size_t kTermCap = 1000000;
    const Matrix& A = sys.A();
    const std::size_t n = sys.n();

    Matrix partial = Matrix::identity(n);        // sum_{k>=0} A^k
    Matrix power = Matrix::identity(n);          // A^k

    SeriesReport report;
    report.terms_used = 1;
    report.residual_inf_norm = (partial - sys.L()).inf_norm();
    while (report.residual_inf_norm >= tol) {
        if (report.terms_used >= kTermCap)
            throw ConvergenceError(
                "series did not converge within the term cap; spectral radius too close to 1");
        power = power * A;
        partial = partial + power;
        ++report.terms_used;
        report.residual_inf_norm = (partial - sys.L()).inf_norm();
    }
    report.converged = true;

    const Matrix tail_from_one = partial - Matrix::identity(n);  // sum_{k>=1} A^k
    const Matrix tail_from_two = tail_from_one - A;              // sum_{k>=2} A^k
    const double e1_residual = (tail_from_one - legacy_indirect(sys, LegacyVariant::e1)).inf_norm();
    const double e3_residual = (tail_from_two - legacy_indirect(sys, LegacyVariant::e3)).inf_norm();
    if (e1_residual >= tol || e3_residual >= tol)
        throw ConvergenceError("legacy-matrix series reconstruction exceeded tolerance");
    return report;
}

}  // namespace diact
