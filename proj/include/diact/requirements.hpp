#pragma once

#include <string>

#include "diact/io_system.hpp"
#include "diact/matrix.hpp"

namespace diact {

enum class Kind { direct, indirect, transfer };
enum class Frame { simple, composite };
enum class LegacyVariant { e1, e2, e3, e4 };

std::string to_string(Kind k);
std::string to_string(Frame fr);
std::string to_string(LegacyVariant v);

/// Coefficient matrix tagged with kind and frame. Simple matrices are
/// normalized by final demands, composite ones by gross outputs.
struct RequirementsMatrix {
    Kind kind;
    Frame frame;
    Matrix values;
};

/// Monetary-flow matrix tagged with kind and frame.
struct TransactionsMatrix {
    Kind kind;
    Frame frame;
    Matrix values;
};

/// Cumulative demand distribution L*f_hat and its diagonal.
struct Subthroughflow {
    Matrix values;
    Vector diag;
};

Subthroughflow subthroughflow(const IoSystem& sys);

/// All six (kind, frame) matrices derive from the system's shared (A, L,
/// L_hat); indirect is transfer minus direct, so complementarity holds to
/// machine precision.
RequirementsMatrix requirements(const IoSystem& sys, Kind kind, Frame frame);
RequirementsMatrix simple_requirements(const IoSystem& sys, Kind kind);
RequirementsMatrix composite_requirements(const IoSystem& sys, Kind kind);

TransactionsMatrix transactions(const IoSystem& sys, Kind kind, Frame frame);

/// Gross-output vector for a (kind, frame): row sums of the transactions
/// matrix, equivalently requirements applied to f (simple) or x (composite).
Vector diact_gross_outputs(const IoSystem& sys, Kind kind, Frame frame);

/// The four indirect-effects matrices from the earlier literature:
/// E1 = L-I, E2 = L-A, E3 = L-I-A, E4 = L-L_hat.
Matrix legacy_indirect(const IoSystem& sys, LegacyVariant variant);

/// Diagonal of the indirect requirements matrix of the given frame.
Vector cycling_coefficients(const IoSystem& sys, Frame frame);

}  // namespace diact
