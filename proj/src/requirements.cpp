#include "diact/requirements.hpp"

namespace diact {

std::string to_string(Kind k) {
    switch (k) {
        case Kind::direct: return "direct";
        case Kind::indirect: return "indirect";
        case Kind::transfer: return "transfer";
    }
    return "?";
}

std::string to_string(Frame fr) {
    return fr == Frame::simple ? "simple" : "composite";
}

std::string to_string(LegacyVariant v) {
    switch (v) {
        case LegacyVariant::e1: return "e1";
        case LegacyVariant::e2: return "e2";
        case LegacyVariant::e3: return "e3";
        case LegacyVariant::e4: return "e4";
    }
    return "?";
}

namespace {

Matrix inverse_of_diagonal(const Matrix& d) {
    Matrix out(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i) out(i, i) = 1.0 / d(i, i);
    return out;
}

Matrix transfer_matrix(const IoSystem& sys, Frame frame) {
    const Matrix L_minus_I = sys.L() - Matrix::identity(sys.n());
    if (frame == Frame::simple) return L_minus_I;
    return L_minus_I * inverse_of_diagonal(sys.L_hat());
}

Matrix direct_matrix(const IoSystem& sys, Frame frame) {
    if (frame == Frame::simple) return sys.A() * sys.L_hat();
    return sys.A();
}

}  // namespace

Subthroughflow subthroughflow(const IoSystem& sys) {
    Matrix T = sys.L() * diag_from(sys.f());
    return Subthroughflow{std::move(T), diagonal(sys.L_hat() * diag_from(sys.f()))};
}

RequirementsMatrix requirements(const IoSystem& sys, Kind kind, Frame frame) {
    switch (kind) {
        case Kind::transfer: return {kind, frame, transfer_matrix(sys, frame)};
        case Kind::direct: return {kind, frame, direct_matrix(sys, frame)};
        case Kind::indirect:
            return {kind, frame, transfer_matrix(sys, frame) - direct_matrix(sys, frame)};
    }
    throw std::invalid_argument("unknown requirements kind");
}

RequirementsMatrix simple_requirements(const IoSystem& sys, Kind kind) {
    return requirements(sys, kind, Frame::simple);
}

RequirementsMatrix composite_requirements(const IoSystem& sys, Kind kind) {
    return requirements(sys, kind, Frame::composite);
}

TransactionsMatrix transactions(const IoSystem& sys, Kind kind, Frame frame) {
    const Vector& scale = frame == Frame::simple ? sys.f() : sys.x();
    return {kind, frame, requirements(sys, kind, frame).values * diag_from(scale)};
}

Vector diact_gross_outputs(const IoSystem& sys, Kind kind, Frame frame) {
    return row_sums(transactions(sys, kind, frame).values);
}

Matrix legacy_indirect(const IoSystem& sys, LegacyVariant variant) {
    const Matrix I = Matrix::identity(sys.n());
    switch (variant) {
        case LegacyVariant::e1: return sys.L() - I;
        case LegacyVariant::e2: return sys.L() - sys.A();
        case LegacyVariant::e3: return sys.L() - I - sys.A();
        case LegacyVariant::e4: return sys.L() - sys.L_hat();
    }
    throw std::invalid_argument("unknown legacy variant");
}

Vector cycling_coefficients(const IoSystem& sys, Frame frame) {
    return diagonal(requirements(sys, Kind::indirect, frame).values);
}

}  // namespace diact
