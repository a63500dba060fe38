#include "diact/datasets.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "diact/csv.hpp"

#ifndef DIACT_DEFAULT_FIXTURES_DIR
#define DIACT_DEFAULT_FIXTURES_DIR "data/fixtures"
#endif

namespace diact {

namespace {

const std::vector<std::string> kUsYears = {"1919", "1929", "1939", "1947", "1958",
                                           "1963", "1967", "1972", "1977", "1982",
                                           "1987", "1992", "1997", "2002", "2006"};

std::optional<Matrix> try_load(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    return load_matrix_csv(path.string()).values;
}

}  // namespace

const std::optional<Matrix>& Fixture::published(Kind kind) const {
    switch (kind) {
        case Kind::direct: return published_Nd;
        case Kind::indirect: return published_Ni;
        case Kind::transfer: return published_Nt;
    }
    throw std::invalid_argument("unknown kind");
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names = {"hypothetical"};
    for (const auto& y : kUsYears) names.push_back("us-" + y);
    return names;
}

bool is_fixture_name(const std::string& name) {
    const auto names = fixture_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::string fixtures_dir() {
    if (const char* env = std::getenv("DIACT_FIXTURES_DIR"); env && *env) return env;
    return DIACT_DEFAULT_FIXTURES_DIR;
}

Fixture load_fixture(const std::string& name) {
    if (!is_fixture_name(name)) throw std::invalid_argument("unknown fixture '" + name + "'");
    const std::filesystem::path dir = fixtures_dir();

    Fixture fix;
    fix.name = name;
    const auto a_csv = load_matrix_csv((dir / (name + "-A.csv")).string());
    fix.A = a_csv.values;
    fix.sector_names = a_csv.row_labels;
    fix.published_Nd = try_load(dir / (name + "-Nd.csv"));
    fix.published_Ni = try_load(dir / (name + "-Ni.csv"));
    fix.published_Nt = try_load(dir / (name + "-Nt.csv"));
    if (auto f_path = dir / (name + "-f.csv"); std::filesystem::exists(f_path))
        fix.f = as_vector(load_matrix_csv(f_path.string()));
    return fix;
}

IoSystem fixture_system(const Fixture& fix) {
    const Vector f = fix.f ? *fix.f : ones(fix.A.rows());
    return IoSystem::from_coefficients(fix.A, f, fix.sector_names);
}

DeviationReport regression_compare(const Fixture& fix, const RequirementsMatrix& computed,
                                   double tol) {
    if (computed.frame != Frame::simple)
        throw MissingPublishedError("fixtures publish only simple-frame matrices");
    const auto& published = fix.published(computed.kind);
    if (!published)
        throw MissingPublishedError("fixture '" + fix.name + "' has no published " +
                                    to_string(computed.kind) + " matrix");
    const Matrix& p = *published;
    const Matrix& c = computed.values;
    if (p.rows() != c.rows() || p.cols() != c.cols())
        throw MissingPublishedError("published matrix size mismatch for '" + fix.name + "'");

    DeviationReport report;
    std::vector<double> devs;
    devs.reserve(p.rows() * p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t k = 0; k < p.cols(); ++k) {
            const double d = std::abs(c(i, k) - p(i, k));
            devs.push_back(d);
            if (d > report.max_abs) {
                report.max_abs = d;
                report.worst_row = i;
                report.worst_col = k;
            }
        }
    }
    std::sort(devs.begin(), devs.end());
    const std::size_t m = devs.size();
    report.median_abs = m % 2 == 1 ? devs[m / 2] : 0.5 * (devs[m / 2 - 1] + devs[m / 2]);
    report.within_tol = report.max_abs <= tol;
    return report;
}

}  // namespace diact
