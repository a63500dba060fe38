#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace diact {

/// Dense real matrix, row-major storage, value semantics.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t k) const { return entries_[i * cols_ + k]; }
    double& operator()(std::size_t i, std::size_t k) { return entries_[i * cols_ + k]; }

    std::span<const double> entries() const { return entries_; }

    Matrix transposed() const;

    /// Maximum absolute row sum.
    double inf_norm() const;
    double max_abs() const;
    double max_entry() const;

    bool nonnegative(double tol = 0.0) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// Dense real vector.
class Vector {
public:
    explicit Vector(std::size_t len, double fill = 0.0);
    Vector(std::initializer_list<double> entries);
    explicit Vector(std::vector<double> entries);

    std::size_t len() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    double& operator[](std::size_t i) { return entries_[i]; }

    std::span<const double> entries() const { return entries_; }

    bool nonnegative(double tol = 0.0) const;
    double max_abs() const;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<double> entries_;
};

Vector ones(std::size_t n);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& v);

Matrix multiply(const Matrix& a, const Matrix& b);

/// Inverse via LU factorization with partial pivoting.
/// Throws SingularMatrixError when a pivot magnitude drops below 1e-12.
Matrix invert(const Matrix& m);

/// Determinant via the same LU factorization.
double determinant(const Matrix& m);

/// Diagonal matrix retaining m's diagonal, zeros elsewhere.
Matrix diag_of(const Matrix& m);

/// Square diagonal matrix built from v.
Matrix diag_from(const Vector& v);

Vector diagonal(const Matrix& m);

Vector row_sums(const Matrix& m);

/// Estimate of the dominant eigenvalue magnitude of a nonnegative square
/// matrix, via the Gelfand limit ||(m+I)^N||^(1/N) - 1 evaluated by
/// repeated squaring. The shift by I makes the dominant eigenvalue real
/// and strictly dominant even when m has several eigenvalues of equal
/// modulus (e.g. pure cycles), and the limit is insensitive to
/// reducibility and defective eigenvalues.
double spectral_radius_bound(const Matrix& m);

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace diact
