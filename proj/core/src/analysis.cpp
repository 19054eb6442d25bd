#include "illiqdep/analysis.hpp"

#include <algorithm>
#include <cstdio>

#include "illiqdep/error.hpp"
#include "illiqdep/stationary.hpp"

namespace illiqdep {

namespace {

std::string title_for(const std::string& source_id, Variant v) {
    const std::string label = v == Variant::Stationary ? "stationary" : "adaptive";
    return source_id.empty() ? label : source_id + " (" + label + ")";
}

}  // namespace

AnalysisReport analyze(const BinarySeries& series, const AnalysisOptions& options) {
    const std::size_t n = series.size();
    std::size_t plot_lags = 0;
    if (options.plot_lags) {
        plot_lags = *options.plot_lags;
        if (plot_lags == 0 || plot_lags >= n) {
            throw Error(ErrorKind::InvalidLag, "max lag " + std::to_string(plot_lags) +
                                                   " must satisfy 1 <= m < n = " +
                                                   std::to_string(n));
        }
    } else {
        plot_lags = std::min(kDefaultPlotLags, n - 1);
    }
    if (options.test_lags == 0 || options.test_lags >= n) {
        throw Error(ErrorKind::InvalidLag, "test lags " + std::to_string(options.test_lags) +
                                               " must satisfy 1 <= m < n = " +
                                               std::to_string(n));
    }
    const std::size_t profile_lags = std::max(plot_lags, options.test_lags);

    const KernelSpec spec =
        options.bandwidth ? KernelSpec::explicit_bandwidth(*options.bandwidth, options.kernel)
                          : KernelSpec::rate_default(n, options.bandwidth_constant, options.kernel);

    AnalysisReport report;
    report.source_id = series.source_id();
    report.n = n;
    report.a_bar = sample_mean(series);
    report.threshold = series.threshold();
    report.estimate = estimate_probability(series, spec);

    report.stationary.profile = dependence_profile_stationary(series, profile_lags);
    report.stationary.test =
        chi2_decision(report.stationary.profile, options.test_lags, options.alpha);

    report.feasible.profile = profile_feasible(series, report.estimate, profile_lags);
    report.feasible.test = chi2_decision(report.feasible.profile, options.test_lags, options.alpha);
    if (const auto clipped = report.estimate.clip_count(); clipped > 0) {
        report.feasible.test.warnings.push_back(
            std::to_string(clipped) + " probability estimates clipped to [1e-6, 1 - 1e-6]");
    }

    for (std::size_t h : options.cusum_lags) {
        report.cusum.push_back(cusum_trajectory(series, report.estimate, h, options.cusum_grid));
    }
    return report;
}

AnalysisReport analyze(const ReturnSeries& returns, const AnalysisOptions& options) {
    return analyze(binarize(returns, options.threshold), options);
}

Json to_json(const AnalysisReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source_id"] = report.source_id;
    j["n"] = report.n;
    j["a_bar"] = report.a_bar;
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", report.a_bar);
    j["a_bar_display"] = buf;
    j["threshold"] = report.threshold;
    j["probability_estimate"] = summary_json(report.estimate);
    j["stationary"] = {{"profile", to_json(report.stationary.profile)},
                       {"test", to_json(report.stationary.test)}};
    j["feasible_adaptive"] = {{"profile", to_json(report.feasible.profile)},
                              {"test", to_json(report.feasible.test)}};
    Json cusum = Json::array();
    for (const auto& c : report.cusum) cusum.push_back(to_json(c));
    j["cusum"] = cusum;
    return j;
}

std::vector<SavedProfile> plot_profiles(const AnalysisReport& report) {
    return {
        {"dependence_stationary", title_for(report.source_id, Variant::Stationary),
         report.stationary.profile},
        {"dependence_feasible_adaptive", title_for(report.source_id, Variant::FeasibleAdaptive),
         report.feasible.profile},
    };
}

std::vector<SavedProfile> profiles_from_report(const Json& report) {
    if (!report.is_object() || !report.contains("schema_version")) {
        throw Error(ErrorKind::InvalidInput, "not an analysis report (no schema_version)");
    }
    if (report.at("schema_version") != kSchemaVersion) {
        throw Error(ErrorKind::InvalidInput, "unsupported report schema_version");
    }
    const std::string source =
        report.contains("source_id") && report.at("source_id").is_string()
            ? report.at("source_id").get<std::string>()
            : std::string{};
    std::vector<SavedProfile> out;
    for (const auto& [key, stem] : {std::pair{"stationary", "dependence_stationary"},
                                    std::pair{"feasible_adaptive",
                                              "dependence_feasible_adaptive"}}) {
        if (!report.contains(key) || !report.at(key).contains("profile")) {
            throw Error(ErrorKind::InvalidInput,
                        std::string("field '") + key + ".profile': is required");
        }
        auto profile = profile_from_json(report.at(key).at("profile"));
        out.push_back({stem, title_for(source, profile.variant), std::move(profile)});
    }
    return out;
}

}  // namespace illiqdep
