#pragma once

#include <cmath>
#include <random>

#include "diact/io_system.hpp"
#include "diact/matrix.hpp"

namespace diact::testing {

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

inline double max_abs_diff(const Vector& a, const Vector& b) { return (a - b).max_abs(); }

/// Random nonnegative coefficient matrix rescaled to the requested
/// spectral radius, with a sparsity mix so zero patterns get exercised.
inline Matrix random_coefficients(std::mt19937& rng, std::size_t n, double target_rho,
                                  double density = 0.7) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Matrix A(n, n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (unif(rng) < density) {
                A(i, k) = unif(rng);
                any = true;
            }
        }
    }
    if (!any) return A;  // zero matrix, trivially viable
    const double rho = spectral_radius_bound(A);
    // Nilpotent (acyclic) support patterns report a spectral radius at
    // rounding level; leave them unscaled rather than amplify the entries.
    if (rho < 1e-9) return A;
    return (target_rho / rho) * A;
}

inline Vector random_demand(std::mt19937& rng, std::size_t n, double lo = 1.0, double hi = 50.0) {
    std::uniform_real_distribution<double> unif(lo, hi);
    Vector f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = unif(rng);
    return f;
}

inline IoSystem random_system(std::mt19937& rng, std::size_t n, double target_rho) {
    return IoSystem::from_coefficients(random_coefficients(rng, n, target_rho),
                                       random_demand(rng, n));
}

}  // namespace diact::testing
