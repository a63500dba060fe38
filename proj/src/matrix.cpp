#include "diact/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace diact {

namespace {

constexpr double kPivotFloor = 1e-12;

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

void require_finite(std::span<const double> entries) {
    for (double e : entries) {
        require(std::isfinite(e), "matrix entries must be finite");
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require(std::isfinite(fill), "matrix entries must be finite");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require(entries_.size() == rows * cols, "entry count must equal rows * cols");
    require_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) t(k, i) = (*this)(i, k);
    return t;
}

double Matrix::inf_norm() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < cols_; ++k) sum += std::abs((*this)(i, k));
        worst = std::max(worst, sum);
    }
    return worst;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double Matrix::max_entry() const {
    return *std::max_element(entries_.begin(), entries_.end());
}

bool Matrix::nonnegative(double tol) const {
    return std::all_of(entries_.begin(), entries_.end(), [tol](double e) { return e >= -tol; });
}

Vector::Vector(std::size_t len, double fill) : entries_(len, fill) {
    require(len > 0, "vector length must be positive");
    require(std::isfinite(fill), "vector entries must be finite");
}

Vector::Vector(std::initializer_list<double> entries) : entries_(entries) {
    require(!entries_.empty(), "vector length must be positive");
    require_finite(entries_);
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
    require(!entries_.empty(), "vector length must be positive");
    require_finite(entries_);
}

bool Vector::nonnegative(double tol) const {
    return std::all_of(entries_.begin(), entries_.end(), [tol](double e) { return e >= -tol; });
}

double Vector::max_abs() const {
    double m = 0.0;
    for (double e : entries_) m = std::max(m, std::abs(e));
    return m;
}

Vector ones(std::size_t n) { return Vector(n, 1.0); }

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix dimension mismatch in +");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out(i, k) = a(i, k) + b(i, k);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix dimension mismatch in -");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out(i, k) = a(i, k) - b(i, k);
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matrix dimension mismatch in multiply");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t k = 0; k < b.cols(); ++k) out(i, k) += aij * b(j, k);
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Matrix operator*(double s, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) out(i, k) = s * m(i, k);
    return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
    require(m.cols() == v.len(), "matrix/vector dimension mismatch");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < m.cols(); ++k) sum += m(i, k) * v[k];
        out[i] = sum;
    }
    return out;
}

Vector operator+(const Vector& a, const Vector& b) {
    require(a.len() == b.len(), "vector dimension mismatch in +");
    Vector out(a.len());
    for (std::size_t i = 0; i < a.len(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    require(a.len() == b.len(), "vector dimension mismatch in -");
    Vector out(a.len());
    for (std::size_t i = 0; i < a.len(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector operator*(double s, const Vector& v) {
    Vector out(v.len());
    for (std::size_t i = 0; i < v.len(); ++i) out[i] = s * v[i];
    return out;
}

namespace {

// LU factorization with partial pivoting, in place. Returns the row
// permutation; throws SingularMatrixError on a pivot below kPivotFloor.
std::vector<std::size_t> lu_factor(Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot_row, col))) pivot_row = r;
        if (std::abs(m(pivot_row, col)) < kPivotFloor)
            throw SingularMatrixError("singular matrix: pivot below 1e-12");
        if (pivot_row != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(col, k), m(pivot_row, k));
            std::swap(perm[col], perm[pivot_row]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = m(r, col) / m(col, col);
            m(r, col) = factor;
            for (std::size_t k = col + 1; k < n; ++k) m(r, k) -= factor * m(col, k);
        }
    }
    return perm;
}

}  // namespace

Matrix invert(const Matrix& m) {
    require(m.square(), "invert requires a square matrix");
    const std::size_t n = m.rows();
    Matrix lu = m;
    const auto perm = lu_factor(lu);
    Matrix inv(n, n);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        // solve LU y = P e_j by forward then back substitution
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = perm[i] == j ? 1.0 : 0.0;
            for (std::size_t k = 0; k < i; ++k) col[i] -= lu(i, k) * col[k];
        }
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t k = ii + 1; k < n; ++k) col[ii] -= lu(ii, k) * col[k];
            col[ii] /= lu(ii, ii);
        }
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

double determinant(const Matrix& m) {
    require(m.square(), "determinant requires a square matrix");
    Matrix lu = m;
    std::vector<std::size_t> perm;
    try {
        perm = lu_factor(lu);
    } catch (const SingularMatrixError&) {
        return 0.0;
    }
    double det = 1.0;
    for (std::size_t i = 0; i < lu.rows(); ++i) det *= lu(i, i);
    // sign of the permutation
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t k = i; !seen[k]; k = perm[k]) {
            seen[k] = true;
            ++len;
        }
        if (len % 2 == 0) det = -det;
    }
    return det;
}

Matrix diag_of(const Matrix& m) {
    require(m.square(), "diag_of requires a square matrix");
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) = m(i, i);
    return out;
}

Matrix diag_from(const Vector& v) {
    Matrix out(v.len(), v.len());
    for (std::size_t i = 0; i < v.len(); ++i) out(i, i) = v[i];
    return out;
}

Vector diagonal(const Matrix& m) {
    require(m.square(), "diagonal requires a square matrix");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, i);
    return out;
}

Vector row_sums(const Matrix& m) {
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < m.cols(); ++k) sum += m(i, k);
        out[i] = sum;
    }
    return out;
}

double spectral_radius_bound(const Matrix& m) {
    require(m.square(), "spectral_radius_bound requires a square matrix");
    require(m.nonnegative(), "spectral_radius_bound requires nonnegative entries");
    const std::size_t n = m.rows();

    // Work with B = m + I: for nonnegative m the Perron root of B is
    // rho(m) + 1 and strictly dominates every other eigenvalue modulus, so
    // the Gelfand limit ||B^N||^(1/N) -> rho(B) converges even for
    // reducible m or support patterns that are pure cycles. Repeated
    // squaring reaches N = 2^60 in 60 multiplications, where the
    // (log N)/N defect term is below machine precision; each square is
    // normalized and the scale tracked in log space so entries never
    // overflow.
    Matrix B = m + Matrix::identity(n);
    double log_rho = 0.0;   // running estimate of log ||B^(2^k)|| / 2^k
    double weight = 1.0;    // 1 / 2^k
    for (int k = 0; k < 60; ++k) {
        const double norm = B.inf_norm();
        log_rho += weight * std::log(norm);
        weight *= 0.5;
        B = (1.0 / norm) * B;
        B = B * B;
    }
    log_rho += weight * std::log(B.inf_norm());
    return std::max(std::exp(log_rho) - 1.0, 0.0);
}

}  // namespace diact
