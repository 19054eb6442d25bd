// illiqdep: dependence analysis of trade/no-trade sequences.
//
//   illiqdep analyze  --input returns.csv [--out dir] [--emit json,csv,svg] ...
//   illiqdep simulate config.json [--out result.json] [--threads N] [--seed S]
//   illiqdep plot     --report dir/report.json [--out dir]
//
// Failures print {"error": {...}} on stderr and exit with status 2. Test
// decisions never change the exit status.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "illiqdep/analysis.hpp"
#include "illiqdep/error.hpp"
#include "illiqdep/montecarlo.hpp"
#include "illiqdep/serialize.hpp"
#include "illiqdep/svg.hpp"

namespace fs = std::filesystem;
using namespace illiqdep;

namespace {

constexpr int kExitFailure = 2;

int report_error(std::string_view kind, const std::string& message,
                 std::optional<std::size_t> index = std::nullopt) {
    Json j;
    j["error"]["kind"] = std::string(kind);
    j["error"]["message"] = message;
    if (index) j["error"]["index"] = *index;
    std::cerr << j.dump() << '\n';
    return kExitFailure;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
    out << content;
    if (!out) throw Error(ErrorKind::InvalidInput, "write failed for " + path.string());
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::InvalidInput, "cannot create " + dir.string() + ": " + ec.message());
}

Json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, path.string() + ": " + e.what());
    }
}

void write_svgs(const std::vector<SavedProfile>& profiles, const fs::path& dir) {
    for (const auto& p : profiles) {
        write_file(dir / (p.name + ".svg"), render_dependence_svg(p.profile, p.title));
    }
}

std::string describe(const TestReport& t, std::string_view label) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-18s stat=%9.3f  df=%d  crit=%7.3f  p=%.4f  %s",
                  std::string(label).c_str(), t.statistic, t.df, t.critical_value, t.p_value,
                  t.reject ? "reject" : "accept");
    return buf;
}

struct AnalyzeArgs {
    std::string input;
    std::string out = ".";
    std::optional<std::size_t> max_lag;
    std::size_t test_lags = 5;
    double alpha = 0.05;
    std::optional<double> bandwidth;
    double bandwidth_constant = kDefaultBandwidthConstant;
    std::string kernel = "epanechnikov";
    double threshold = 0.0;
    std::vector<std::string> emit = {"json", "csv", "svg"};
    std::vector<std::size_t> cusum_lags;
};

void run_analyze(const AnalyzeArgs& args) {
    std::set<std::string> emit(args.emit.begin(), args.emit.end());
    for (const auto& e : emit) {
        if (e != "json" && e != "csv" && e != "svg") {
            throw Error(ErrorKind::InvalidInput, "unknown --emit format '" + e + "'");
        }
    }

    AnalysisOptions opts;
    opts.plot_lags = args.max_lag;
    opts.test_lags = args.test_lags;
    opts.alpha = args.alpha;
    opts.threshold = args.threshold;
    opts.kernel = kernel_family_from_string(args.kernel);
    opts.bandwidth = args.bandwidth;
    opts.bandwidth_constant = args.bandwidth_constant;
    opts.cusum_lags = args.cusum_lags;

    const auto returns = read_returns_csv(args.input);
    const auto report = analyze(returns, opts);

    const fs::path dir = args.out;
    ensure_dir(dir);
    if (emit.contains("json")) write_file(dir / "report.json", to_json(report).dump(2) + "\n");
    if (emit.contains("csv")) {
        for (const auto& p : plot_profiles(report)) {
            std::ostringstream csv;
            write_profile_csv(csv, p.profile);
            write_file(dir / (p.name + ".csv"), csv.str());
        }
        std::ostringstream prob;
        write_estimate_csv(prob, report.estimate);
        write_file(dir / "probability.csv", prob.str());
        for (const auto& c : report.cusum) {
            std::ostringstream csv;
            write_cusum_csv(csv, c);
            write_file(dir / ("cusum_lag" + std::to_string(c.h) + ".csv"), csv.str());
        }
    }
    if (emit.contains("svg")) write_svgs(plot_profiles(report), dir);

    char head[128];
    std::snprintf(head, sizeof head, "%s: n=%zu a_bar=%.2f bandwidth=%.4f clipped=%zu",
                  report.source_id.c_str(), report.n, report.a_bar, report.estimate.spec.bandwidth,
                  report.estimate.clip_count());
    std::cout << head << '\n'
              << describe(report.stationary.test, "stationary") << '\n'
              << describe(report.feasible.test, "feasible_adaptive") << '\n';
    for (const auto& w : report.feasible.test.warnings) std::cout << "warning: " << w << '\n';
}

struct SimulateArgs {
    std::string config;
    std::string out;
    std::size_t threads = 0;
    std::optional<std::uint64_t> seed;
    bool timing = false;
};

void run_simulate(const SimulateArgs& args) {
    auto study = study_from_json(read_json(args.config));
    if (args.seed) study.base.seed = *args.seed;
    const auto results = run_study(study, resolve_workers(args.threads));
    std::cout << render_table(study, results);
    if (args.timing) {
        for (const auto& r : results) {
            std::printf("n=%zu runtime %.3fs\n", r.n, r.runtime_seconds);
        }
    }
    if (!args.out.empty()) {
        const fs::path out = args.out;
        if (out.has_parent_path()) ensure_dir(out.parent_path());
        write_file(out, study_result_json(study, results, args.timing).dump(2) + "\n");
    }
}

void run_plot(const std::string& report_path, const std::string& out) {
    const auto profiles = profiles_from_report(read_json(report_path));
    const fs::path dir = out.empty() ? fs::path(report_path).parent_path() : fs::path(out);
    if (!dir.empty()) ensure_dir(dir);
    write_svgs(profiles, dir.empty() ? fs::path(".") : dir);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dependence analysis of trade/no-trade sequences"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a CSV of returns");
    analyze_cmd->add_option("--input,-i", an.input, "CSV with a return column")->required();
    analyze_cmd->add_option("--out,-o", an.out, "Output directory")->capture_default_str();
    analyze_cmd->add_option("--max-lag", an.max_lag,
                            "Lags in the dependence plots (default 60, capped at n-1)");
    analyze_cmd->add_option("--test-lags", an.test_lags, "Lags entering the portmanteau tests")
        ->capture_default_str();
    analyze_cmd->add_option("--alpha", an.alpha, "Test level")->capture_default_str();
    analyze_cmd->add_option("--bandwidth", an.bandwidth, "Fixed kernel bandwidth in (0, 1)");
    analyze_cmd->add_option("--bandwidth-constant", an.bandwidth_constant,
                            "c in b = c n^(-1/3) when --bandwidth is not given")
        ->capture_default_str();
    analyze_cmd->add_option("--kernel", an.kernel, "epanechnikov, triangular or uniform")
        ->capture_default_str();
    analyze_cmd->add_option("--threshold", an.threshold, "No-trade threshold on |return|")
        ->capture_default_str();
    analyze_cmd->add_option("--emit", an.emit, "Outputs to write: json, csv, svg")
        ->delimiter(',')
        ->capture_default_str();
    analyze_cmd->add_option("--cusum-lags", an.cusum_lags, "Lags for partial-sum trajectories")
        ->delimiter(',');

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Run a Monte Carlo study from a JSON config");
    simulate_cmd->add_option("config", sim.config, "Study configuration")->required();
    simulate_cmd->add_option("--out,-o", sim.out, "Result JSON path");
    simulate_cmd->add_option("--threads,-j", sim.threads, "Workers (0 = all cores)")
        ->capture_default_str();
    simulate_cmd->add_option("--seed", sim.seed, "Override the config seed");
    simulate_cmd->add_flag("--timing", sim.timing, "Report runtimes (also written to --out)");

    std::string report_path, plot_out;
    auto* plot_cmd = app.add_subcommand("plot", "Re-render dependence plots from a saved report");
    plot_cmd->add_option("--report,-r", report_path, "report.json from analyze")->required();
    plot_cmd->add_option("--out,-o", plot_out, "Output directory (default: next to the report)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return report_error("usage", e.what());
    }

    try {
        if (*analyze_cmd) run_analyze(an);
        if (*simulate_cmd) run_simulate(sim);
        if (*plot_cmd) run_plot(report_path, plot_out);
    } catch (const Error& e) {
        return report_error(to_string(e.kind()), e.what(), e.index());
    } catch (const std::exception& e) {
        return report_error("internal", e.what());
    }
    return 0;
}
