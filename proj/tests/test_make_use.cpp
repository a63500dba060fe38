#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diact/make_use.hpp"
#include "helpers.hpp"

using namespace diact;
using diact::testing::max_abs_diff;

namespace {

MakeUseTables random_tables(std::mt19937& rng, std::size_t commodities, std::size_t industries) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Matrix U(commodities, industries);
    Matrix V(industries, commodities);
    for (std::size_t i = 0; i < commodities; ++i)
        for (std::size_t k = 0; k < industries; ++k) U(i, k) = unif(rng);
    for (std::size_t i = 0; i < industries; ++i)
        for (std::size_t k = 0; k < commodities; ++k) V(i, k) = unif(rng) + 0.05;
    // shrink U until DB is viable
    MakeUseTables tables{U, V, {}, {}};
    while (spectral_radius_bound(coefficients_from_make_use(tables)) >= 0.9) {
        tables.U = 0.5 * tables.U;
    }
    return tables;
}

}  // namespace

TEST_CASE("technology: identity make table passes U through") {
    Matrix U(3, 3, {1, 2, 0, 0, 1, 1, 2, 0, 3});
    const auto [D, B] = technology({U, Matrix::identity(3), {}, {}});
    CHECK(D == Matrix::identity(3));
    CHECK(max_abs_diff(B, U) < 1e-15);
}

TEST_CASE("technology: diagonal make table scales U by industry outputs") {
    const Vector w{2, 4, 5};
    Matrix U(3, 3, {1, 2, 0, 0, 1, 1, 2, 0, 3});
    const auto [D, B] = technology({U, diag_from(w), {}, {}});
    CHECK(max_abs_diff(D, Matrix::identity(3)) < 1e-15);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) CHECK(B(i, k) == doctest::Approx(U(i, k) / w[k]));
}

TEST_CASE("technology: rectangular tables, column-stochastic D, scalar-loop oracle for A") {
    std::mt19937 rng(13);
    const auto tables = random_tables(rng, 4, 3);
    const auto [D, B] = technology(tables);
    CHECK(D.rows() == 3);
    CHECK(D.cols() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        double colsum = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            colsum += D(i, k);
            CHECK(D(i, k) >= 0.0);
            CHECK(D(i, k) <= 1.0);
        }
        CHECK(std::abs(colsum - 1.0) < 1e-12);
    }

    // independent elementwise quotient oracle for A = D * B
    const Matrix A = coefficients_from_make_use(tables);
    const Vector commodity_out = row_sums(tables.V.transposed());
    const Vector industry_out = row_sums(tables.V);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            double expected = 0.0;
            for (std::size_t c = 0; c < 4; ++c)
                expected += (tables.V(i, c) / commodity_out[c]) *
                            (tables.U(c, k) / industry_out[k]);
            CHECK(A(i, k) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("technology error paths") {
    // commodity 2 never produced
    Matrix V(2, 2, {1, 0, 2, 0});
    CHECK_THROWS_AS(technology({Matrix(2, 2, 1.0), V, {}, {}}), ValidationError);
    // industry 2 produces nothing
    Matrix V2(2, 2, {1, 1, 0, 0});
    CHECK_THROWS_AS(technology({Matrix(2, 2, 1.0), V2, {}, {}}), ValidationError);
    CHECK_THROWS_AS(technology({Matrix(2, 3, 1.0), Matrix(2, 3, 1.0), {}, {}}), ValidationError);
    Matrix negU(2, 2, {1, -1, 1, 1});
    CHECK_THROWS_AS(technology({negU, Matrix::identity(2), {}, {}}), ValidationError);
}

TEST_CASE("single-product industries collapse to the transactions form") {
    const Matrix Z(3, 3, {0, 2.6761, 0, 0, 0, 6.7606, 3.8028, 0, 0});
    const Vector x{12.6761, 26.7606, 33.8028};
    const Matrix A = coefficients_from_make_use({Z, diag_from(x), {}, {}});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(A(i, k) == doctest::Approx(Z(i, k) / x[k]).epsilon(1e-14));
}

TEST_CASE("zero use table gives zero coefficients and zero transfer/indirect") {
    const MakeUseTables tables{Matrix(3, 3), Matrix::identity(3), {}, {}};
    CHECK(coefficients_from_make_use(tables) == Matrix(3, 3));
    CHECK(requirements_from_make_use(tables, Kind::transfer, Frame::simple).values ==
          Matrix(3, 3));
    CHECK(requirements_from_make_use(tables, Kind::indirect, Frame::composite).values ==
          Matrix(3, 3));
}

TEST_CASE("make-use pipeline equals requirements pipeline on A = DB") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t c = 2 + rng() % 4;
        const std::size_t m = 2 + rng() % 4;
        const auto tables = random_tables(rng, c, m);
        const Matrix A = coefficients_from_make_use(tables);
        const auto sys = IoSystem::from_coefficients(A, ones(m));
        for (Frame fr : {Frame::simple, Frame::composite}) {
            for (Kind k : {Kind::direct, Kind::indirect, Kind::transfer}) {
                const Matrix via_tables = requirements_from_make_use(tables, k, fr).values;
                const Matrix via_system = requirements(sys, k, fr).values;
                CHECK(max_abs_diff(via_tables, via_system) < 1e-12);
            }
        }
    }
}

TEST_CASE("make-use system equivalent to the hypothetical model matches its displays") {
    const Matrix Z(3, 3, {0, 2.6761, 0, 0, 0, 6.7606, 3.8028, 0, 0});
    const Vector x{12.6761, 26.7606, 33.8028};
    const MakeUseTables tables{Z, diag_from(x), {}, {}};
    const auto ni = requirements_from_make_use(tables, Kind::indirect, Frame::simple).values;
    CHECK(ni(0, 2) == doctest::Approx(0.0201).epsilon(1e-2));
    CHECK(std::abs(ni(0, 1)) < 1e-12);
    const auto nd = requirements_from_make_use(tables, Kind::direct, Frame::simple).values;
    CHECK(nd(2, 0) == doctest::Approx(0.3018).epsilon(1e-3));
    const auto cnt = requirements_from_make_use(tables, Kind::transfer, Frame::composite).values;
    CHECK(cnt(2, 0) == doctest::Approx(0.3000).epsilon(1e-3));
}

TEST_CASE("non-viable make-use tables are rejected") {
    // each industry needs more than a dollar of input per dollar of output
    const MakeUseTables tables{Matrix(2, 2, 2.0), Matrix::identity(2), {}, {}};
    CHECK_THROWS_AS(requirements_from_make_use(tables, Kind::transfer, Frame::simple),
                    ViabilityError);
}
