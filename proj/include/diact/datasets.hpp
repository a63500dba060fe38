#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diact/requirements.hpp"

namespace diact {

/// One embedded dataset: a coefficient matrix plus, where the source
/// printed them, the published simple requirements blocks and final demands.
struct Fixture {
    std::string name;
    Matrix A{1, 1};
    std::optional<Matrix> published_Nd;
    std::optional<Matrix> published_Ni;
    std::optional<Matrix> published_Nt;
    std::optional<Vector> f;
    std::vector<std::string> sector_names;

    const std::optional<Matrix>& published(Kind kind) const;
};

/// Catalog order: hypothetical first, then US years ascending.
std::vector<std::string> fixture_names();
bool is_fixture_name(const std::string& name);

/// Directory holding the fixture CSVs; DIACT_FIXTURES_DIR overrides the
/// compiled-in default.
std::string fixtures_dir();

Fixture load_fixture(const std::string& name);

/// Builds an IoSystem from a fixture, defaulting f to the all-ones vector
/// when the fixture carries none (simple requirements do not depend on f).
IoSystem fixture_system(const Fixture& fix);

struct DeviationReport {
    double max_abs = 0.0;
    double median_abs = 0.0;
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;
    bool within_tol = true;
};

struct MissingPublishedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Elementwise deviation of a computed requirements matrix from the
/// fixture's published block of the same kind.
DeviationReport regression_compare(const Fixture& fix, const RequirementsMatrix& computed,
                                   double tol);

}  // namespace diact
