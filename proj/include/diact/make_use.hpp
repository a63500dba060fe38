#pragma once

#include <string>
#include <vector>

#include "diact/requirements.hpp"

namespace diact {

/// Use table U (commodities-by-industries) and make table V
/// (industries-by-commodities), in currency per year.
struct MakeUseTables {
    Matrix U;
    Matrix V;
    std::vector<std::string> commodity_names;
    std::vector<std::string> industry_names;
};

/// Market shares D (industries-by-commodities, columns sum to one) and
/// absorption coefficients B (commodities-by-industries).
struct TechnologyMatrices {
    Matrix D;
    Matrix B;
};

/// D = V * diag(V'1)^-1, B = U * diag(V1)^-1.
/// Throws ValidationError when a commodity or industry total output is zero.
TechnologyMatrices technology(const MakeUseTables& tables);

/// Industry-by-industry coefficients A = D*B under the industry-based
/// technology assumption.
Matrix coefficients_from_make_use(const MakeUseTables& tables);

/// Requirements straight from the make-use tables; agrees with routing
/// A = D*B through the requirements module.
RequirementsMatrix requirements_from_make_use(const MakeUseTables& tables, Kind kind, Frame frame);

}  // namespace diact
