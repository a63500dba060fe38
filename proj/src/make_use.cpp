#include "diact/make_use.hpp"

namespace diact {

namespace {

void validate(const MakeUseTables& tables) {
    if (tables.U.rows() != tables.V.cols() || tables.U.cols() != tables.V.rows())
        throw ValidationError("use table must be c-by-m and make table m-by-c");
    if (!tables.U.nonnegative() || !tables.V.nonnegative())
        throw ValidationError("make-use tables must be nonnegative");
}

Matrix scale_columns(const Matrix& m, const Vector& totals, const char* what) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t k = 0; k < m.cols(); ++k) {
        if (totals[k] <= 0.0) throw ValidationError(what);
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, k) / totals[k];
    }
    return out;
}

}  // namespace

TechnologyMatrices technology(const MakeUseTables& tables) {
    validate(tables);
    const Vector commodity_output = row_sums(tables.V.transposed());  // V'1
    const Vector industry_output = row_sums(tables.V);                // V1
    return TechnologyMatrices{
        scale_columns(tables.V, commodity_output, "a commodity has zero total output"),
        scale_columns(tables.U, industry_output, "an industry has zero total output")};
}

Matrix coefficients_from_make_use(const MakeUseTables& tables) {
    const auto [D, B] = technology(tables);
    return D * B;
}

RequirementsMatrix requirements_from_make_use(const MakeUseTables& tables, Kind kind, Frame frame) {
    const auto [D, B] = technology(tables);
    const Matrix DB = D * B;
    const std::size_t m = DB.rows();

    const double rho = spectral_radius_bound(DB);
    if (rho >= 1.0)
        throw ViabilityError("make-use system is not viable: spectral radius of DB is " +
                             std::to_string(rho));

    const Matrix I = Matrix::identity(m);
    const Matrix L = invert(I - DB);
    Matrix L_hat_inv(m, m);
    for (std::size_t i = 0; i < m; ++i) L_hat_inv(i, i) = 1.0 / L(i, i);

    auto transfer = [&] {
        if (frame == Frame::simple) return L - I;
        return (L - I) * L_hat_inv;
    };
    // Simple direct uses D*B*L_hat (the complementarity-consistent scaling),
    // not the diag(...)^-1 variant.
    auto direct = [&] {
        if (frame == Frame::composite) return DB;
        return DB * diag_of(L);
    };

    switch (kind) {
        case Kind::transfer: return {kind, frame, transfer()};
        case Kind::direct: return {kind, frame, direct()};
        case Kind::indirect: return {kind, frame, transfer() - direct()};
    }
    throw std::invalid_argument("unknown requirements kind");
}

}  // namespace diact
