// diact: command-line front end for input-output requirements analysis.
//
// Subcommands:
//   derive        system summary and subthroughflow matrix (JSON)
//   requirements  requirements matrices by kind/frame (CSV or JSON, SVG heatmap)
//   impact        impact of a demand or gross-output segment (JSON)
//   fixtures      list embedded datasets / run the regression suite
//   oracle        series-expansion cross-check of the Leontief inverse (JSON)
//
// Exit codes: 0 success, 2 parse/usage error, 3 validation or viability
// failure, 4 unsupported kind/frame combination, 5 regression failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "diact/csv.hpp"
#include "diact/datasets.hpp"
#include "diact/impact.hpp"
#include "diact/make_use.hpp"
#include "diact/series.hpp"
#include "diact/svg.hpp"

namespace {

using nlohmann::json;
using namespace diact;

constexpr const char* kOrientationComment =
    "orientation: row-to-column (producing sector in row, consuming sector in column)";

/// Quantizes to the 12 significant digits every emitter uses, so JSON and
/// CSV output carry identical values.
double quantized(double v) { return std::stod(format_number(v)); }

json to_json(const Vector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.len(); ++i) arr.push_back(quantized(v[i]));
    return arr;
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(quantized(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
}

void emit_json(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

LabeledMatrix labeled(const Matrix& values, const std::vector<std::string>& names) {
    return LabeledMatrix{names, names, values};
}

std::string matrix_csv_text(const Matrix& values, const std::vector<std::string>& names) {
    std::ostringstream out;
    write_matrix_csv(out, labeled(values, names), {kOrientationComment});
    return out.str();
}

/// Shared --transactions/--coefficients/--use/--make/--final-demand options.
struct SystemInput {
    std::string transactions;
    std::string coefficients;
    std::string use_table;
    std::string make_table;
    std::string final_demand;
    bool allow_negative_demand = false;

    void attach(CLI::App& cmd) {
        auto* z = cmd.add_option("--transactions", transactions, "Transactions matrix CSV (Z)");
        auto* a = cmd.add_option("--coefficients", coefficients,
                                 "Coefficients matrix CSV (A), or an embedded fixture name");
        auto* u = cmd.add_option("--use", use_table, "Use table CSV (U)");
        auto* v = cmd.add_option("--make", make_table, "Make table CSV (V)");
        cmd.add_option("--final-demand", final_demand, "Final demand vector CSV (f)");
        cmd.add_flag("--allow-negative-demand", allow_negative_demand,
                     "Accept negative final-demand entries (e.g. inventory drawdown)");
        z->excludes(a)->excludes(u)->excludes(v);
        a->excludes(u)->excludes(v);
        u->needs(v);
        v->needs(u);
    }

    IoSystem load() const {
        std::optional<Vector> f;
        if (!final_demand.empty()) f = as_vector(load_matrix_csv(final_demand));

        if (!transactions.empty()) {
            const auto z = load_matrix_csv(transactions);
            if (!f) throw ValidationError("--transactions requires --final-demand");
            return IoSystem::from_transactions(z.values, *f, z.row_labels,
                                               allow_negative_demand);
        }
        if (!coefficients.empty()) {
            if (is_fixture_name(coefficients)) {
                const auto fix = load_fixture(coefficients);
                if (!f && fix.f) f = fix.f;
                if (!f) f = ones(fix.A.rows());
                return IoSystem::from_coefficients(fix.A, *f, fix.sector_names,
                                                   allow_negative_demand);
            }
            const auto a = load_matrix_csv(coefficients);
            if (!f) f = ones(a.values.rows());
            return IoSystem::from_coefficients(a.values, *f, a.row_labels,
                                               allow_negative_demand);
        }
        if (!use_table.empty()) {
            const auto u = load_matrix_csv(use_table);
            const auto v = load_matrix_csv(make_table);
            MakeUseTables tables{u.values, v.values, u.row_labels, v.row_labels};
            const Matrix A = coefficients_from_make_use(tables);
            if (!f) throw ValidationError("make-use input requires --final-demand "
                                          "(industry terms)");
            return IoSystem::from_coefficients(A, *f, tables.industry_names,
                                               allow_negative_demand);
        }
        throw ValidationError(
            "no system input: pass --transactions, --coefficients, or --use/--make");
    }
};

json system_summary(const IoSystem& sys) {
    const auto report = viability(sys.A());
    return json{
        {"n", sys.n()},
        {"sectors", sys.sector_names()},
        {"f", to_json(sys.f())},
        {"x", to_json(sys.x())},
        {"spectral_radius", quantized(sys.spectral_radius())},
        {"viability",
         {{"spectral_radius", quantized(report.spectral_radius)},
          {"hawkins_simon_minors_positive", report.hawkins_simon_minors_positive},
          {"leontief_nonnegative", report.leontief_nonnegative},
          {"viable", report.viable()}}},
    };
}

int cmd_derive(const SystemInput& input, const std::string& out_path) {
    const auto sys = input.load();
    const auto flows = subthroughflow(sys);
    json doc{
        {"schema", "diact-report/1"},
        {"command", "derive"},
        {"system", system_summary(sys)},
        {"subthroughflow", to_json(flows.values)},
        {"subthroughflow_diagonal", to_json(flows.diag)},
    };
    emit_json(doc, out_path);
    return 0;
}

struct Selection {
    std::string name;  // file stem and JSON tag
    std::optional<Kind> kind;
    std::optional<Frame> frame;
    Matrix values{1, 1};
};

std::vector<Selection> select_requirements(const IoSystem& sys, const std::string& kind_arg,
                                           const std::string& frame_arg,
                                           const std::string& legacy_arg) {
    std::vector<Selection> picks;
    if (!legacy_arg.empty()) {
        const LegacyVariant v = legacy_arg == "e1"   ? LegacyVariant::e1
                                : legacy_arg == "e2" ? LegacyVariant::e2
                                : legacy_arg == "e3" ? LegacyVariant::e3
                                                     : LegacyVariant::e4;
        picks.push_back({"legacy-" + legacy_arg, std::nullopt, std::nullopt,
                         legacy_indirect(sys, v)});
        return picks;
    }
    std::vector<Kind> kinds;
    if (kind_arg == "all")
        kinds = {Kind::direct, Kind::indirect, Kind::transfer};
    else
        kinds = {kind_arg == "direct"     ? Kind::direct
                 : kind_arg == "indirect" ? Kind::indirect
                                          : Kind::transfer};
    std::vector<Frame> frames;
    if (frame_arg == "all")
        frames = {Frame::simple, Frame::composite};
    else
        frames = {frame_arg == "simple" ? Frame::simple : Frame::composite};

    for (Frame fr : frames)
        for (Kind k : kinds) {
            const auto req = requirements(sys, k, fr);
            picks.push_back({to_string(fr) + "-" + to_string(k), k, fr, req.values});
        }
    return picks;
}

int cmd_requirements(const SystemInput& input, const std::string& kind_arg,
                     const std::string& frame_arg, const std::string& legacy_arg,
                     const std::string& format, const std::string& out_path,
                     const std::string& out_dir, const std::string& heatmap_path) {
    const auto sys = input.load();
    const auto picks = select_requirements(sys, kind_arg, frame_arg, legacy_arg);

    if (!heatmap_path.empty()) {
        if (picks.size() != 1)
            throw UnsupportedCombinationError(
                "--heatmap needs a single matrix; narrow --kind/--frame");
        write_text(heatmap_path, heatmap_svg(picks.front().values, sys.sector_names(),
                                             picks.front().name + " requirements"));
    }

    if (format == "json") {
        json matrices = json::array();
        for (const auto& pick : picks) {
            json entry{{"name", pick.name}, {"values", to_json(pick.values)}};
            if (pick.kind) entry["kind"] = to_string(*pick.kind);
            if (pick.frame) entry["frame"] = to_string(*pick.frame);
            matrices.push_back(entry);
        }
        json doc{{"schema", "diact-report/1"},
                 {"command", "requirements"},
                 {"system", system_summary(sys)},
                 {"orientation", "row-to-column"},
                 {"matrices", matrices}};
        emit_json(doc, out_path);
        return 0;
    }

    if (picks.size() == 1 && out_dir.empty()) {
        const std::string text = matrix_csv_text(picks.front().values, sys.sector_names());
        if (out_path.empty())
            std::cout << text;
        else
            write_text(out_path, text);
        return 0;
    }

    if (out_dir.empty())
        throw ValidationError("multiple matrices selected: pass --out-dir for CSV output");
    std::filesystem::create_directories(out_dir);
    json manifest = json::array();
    for (const auto& pick : picks) {
        const std::string file = pick.name + ".csv";
        write_text((std::filesystem::path(out_dir) / file).string(),
                   matrix_csv_text(pick.values, sys.sector_names()));
        json entry{{"file", file}};
        if (pick.kind) entry["kind"] = to_string(*pick.kind);
        if (pick.frame) entry["frame"] = to_string(*pick.frame);
        manifest.push_back(entry);
    }
    emit_json(json{{"schema", "diact-manifest/1"}, {"matrices", manifest}},
              (std::filesystem::path(out_dir) / "manifest.json").string());
    return 0;
}

int cmd_impact(const SystemInput& input, const std::string& segment_path,
               const std::string& frame_arg, const std::string& kind_arg,
               const std::string& out_path) {
    const auto sys = input.load();
    const Vector delta = as_vector(load_matrix_csv(segment_path));
    const Frame frame = frame_arg == "simple" ? Frame::simple : Frame::composite;

    ImpactResult result{ImpactKind::direct, frame, Matrix(1, 1), Vector(1)};
    if (frame == Frame::simple) {
        const ImpactKind kind = kind_arg == "direct"     ? ImpactKind::direct
                                : kind_arg == "indirect" ? ImpactKind::indirect
                                : kind_arg == "transfer" ? ImpactKind::transfer
                                                         : ImpactKind::cumulative;
        result = final_demand_impact(sys, {frame, delta}, kind,
                                     input.allow_negative_demand);
    } else {
        if (kind_arg == "cumulative")
            throw UnsupportedCombinationError(
                "cumulative impact exists only in the simple frame");
        const Kind kind = kind_arg == "direct"     ? Kind::direct
                          : kind_arg == "indirect" ? Kind::indirect
                                                   : Kind::transfer;
        result = gross_output_impact(sys, {frame, delta}, kind,
                                     input.allow_negative_demand);
    }

    json doc{{"schema", "diact-report/1"},
             {"command", "impact"},
             {"system", system_summary(sys)},
             {"kind", kind_arg},
             {"frame", frame_arg},
             {"segment", to_json(delta)},
             {"delta_T", to_json(result.delta_T)},
             {"delta_x", to_json(result.delta_x)}};
    emit_json(doc, out_path);
    return 0;
}

int cmd_fixtures_list() {
    for (const auto& name : fixture_names()) std::cout << name << "\n";
    return 0;
}

int cmd_fixtures_run(double tol) {
    bool failed = false;
    for (const auto& name : fixture_names()) {
        const auto fix = load_fixture(name);
        const auto sys = fixture_system(fix);
        for (Kind kind : {Kind::direct, Kind::indirect, Kind::transfer}) {
            if (!fix.published(kind)) continue;
            const auto report = regression_compare(fix, simple_requirements(sys, kind), tol);
            std::cout << name << " " << to_string(kind)
                      << " max=" << format_number(report.max_abs)
                      << " median=" << format_number(report.median_abs)
                      << (report.within_tol ? "" : " FAIL") << "\n";
            if (!report.within_tol && !failed) {
                failed = true;
                std::cerr << "regression failure: fixture " << name << ", kind "
                          << to_string(kind) << ", cell (" << report.worst_row + 1 << ","
                          << report.worst_col + 1
                          << "), deviation " << format_number(report.max_abs)
                          << " exceeds " << format_number(tol) << "\n";
            }
        }
    }
    return failed ? 5 : 0;
}

int cmd_oracle(const SystemInput& input, double tol, const std::string& out_path) {
    const auto sys = input.load();
    const auto report = verify_system(sys, tol);
    json doc{{"schema", "diact-report/1"},
             {"command", "oracle"},
             {"system", system_summary(sys)},
             {"tolerance", tol},
             {"terms_used", report.terms_used},
             {"residual_inf_norm", quantized(report.residual_inf_norm)},
             {"converged", report.converged}};
    emit_json(doc, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Input-output requirements and impact analysis"};
    app.require_subcommand(1);

    SystemInput derive_input, req_input, impact_input, oracle_input;
    std::string out_path, req_out, req_out_dir, req_heatmap, impact_out, oracle_out;
    std::string kind_arg = "all", frame_arg = "all", legacy_arg, format = "csv";
    std::string impact_segment, impact_frame = "simple", impact_kind = "transfer";
    double fixtures_tol = 5e-3, oracle_tol = 1e-8;

    auto* derive = app.add_subcommand("derive", "Derive x, A, L and the subthroughflow matrix");
    derive_input.attach(*derive);
    derive->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    auto* req = app.add_subcommand("requirements", "Compute requirements matrices");
    req_input.attach(*req);
    req->add_option("--kind", kind_arg, "direct|indirect|transfer|all")
        ->check(CLI::IsMember({"direct", "indirect", "transfer", "all"}));
    req->add_option("--frame", frame_arg, "simple|composite|all")
        ->check(CLI::IsMember({"simple", "composite", "all"}));
    req->add_option("--legacy", legacy_arg, "Legacy indirect-effects matrix e1|e2|e3|e4")
        ->check(CLI::IsMember({"e1", "e2", "e3", "e4"}));
    req->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    req->add_option("--out", req_out, "Output file (single matrix or JSON)");
    req->add_option("--out-dir", req_out_dir, "Directory for multiple CSV outputs");
    req->add_option("--heatmap", req_heatmap, "Write an SVG heatmap of the selected matrix");

    auto* impact = app.add_subcommand("impact", "Impact of a demand or gross-output segment");
    impact_input.attach(*impact);
    impact->add_option("--segment", impact_segment, "Segment vector CSV")->required();
    impact->add_option("--frame", impact_frame, "simple|composite")
        ->check(CLI::IsMember({"simple", "composite"}));
    impact->add_option("--kind", impact_kind, "direct|indirect|transfer|cumulative")
        ->check(CLI::IsMember({"direct", "indirect", "transfer", "cumulative"}));
    impact->add_option("--out", impact_out, "Write the JSON report here instead of stdout");

    auto* fixtures = app.add_subcommand("fixtures", "Embedded dataset catalog and regressions");
    fixtures->require_subcommand(1);
    auto* fix_list = fixtures->add_subcommand("list", "List fixture names");
    auto* fix_run = fixtures->add_subcommand("run", "Run the regression suite");
    fix_run->add_option("--tol", fixtures_tol, "Max elementwise deviation allowed");

    auto* oracle = app.add_subcommand("oracle", "Series-expansion verification of L");
    oracle_input.attach(*oracle);
    oracle->add_option("--tol", oracle_tol, "Series convergence tolerance");
    oracle->add_option("--out", oracle_out, "Write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (derive->parsed()) return cmd_derive(derive_input, out_path);
        if (req->parsed())
            return cmd_requirements(req_input, kind_arg, frame_arg, legacy_arg, format,
                                    req_out, req_out_dir, req_heatmap);
        if (impact->parsed())
            return cmd_impact(impact_input, impact_segment, impact_frame, impact_kind,
                              impact_out);
        if (fix_list->parsed()) return cmd_fixtures_list();
        if (fix_run->parsed()) return cmd_fixtures_run(fixtures_tol);
        if (oracle->parsed()) return cmd_oracle(oracle_input, oracle_tol, oracle_out);
    } catch (const UnsupportedCombinationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
