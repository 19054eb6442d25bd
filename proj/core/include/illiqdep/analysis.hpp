#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "illiqdep/adaptive.hpp"
#include "illiqdep/binarize.hpp"
#include "illiqdep/dependence.hpp"
#include "illiqdep/kernel.hpp"
#include "illiqdep/serialize.hpp"

namespace illiqdep {

struct AnalysisOptions {
    /// Lags in the dependence plots. Unset means 60, reduced to n - 1 for
    /// short series; an explicit value must be < n.
    std::optional<std::size_t> plot_lags;
    /// Lags entering the portmanteau tests.
    std::size_t test_lags = 5;
    double alpha = 0.05;
    double threshold = 0.0;
    KernelFamily kernel = KernelFamily::Epanechnikov;
    std::optional<double> bandwidth;
    double bandwidth_constant = kDefaultBandwidthConstant;
    std::vector<std::size_t> cusum_lags;
    std::size_t cusum_grid = 100;
};

inline constexpr std::size_t kDefaultPlotLags = 60;

struct VariantAnalysis {
    DependenceProfile profile;
    TestReport test;
};

/// Stationary and feasible-adaptive results side by side for one series.
struct AnalysisReport {
    std::string source_id;
    std::size_t n = 0;
    double a_bar = 0.0;
    double threshold = 0.0;
    ProbabilityEstimate estimate;
    VariantAnalysis stationary;
    VariantAnalysis feasible;
    std::vector<CusumTrajectory> cusum;
};

[[nodiscard]] AnalysisReport analyze(const BinarySeries& series, const AnalysisOptions& options);
[[nodiscard]] AnalysisReport analyze(const ReturnSeries& returns, const AnalysisOptions& options);

/// Versioned report document (`schema_version` = 1).
[[nodiscard]] Json to_json(const AnalysisReport& report);

/// Titled profiles recovered from a saved report, for re-rendering plots.
struct SavedProfile {
    std::string name;  // file stem, e.g. "dependence_stationary"
    std::string title;
    DependenceProfile profile;
};
[[nodiscard]] std::vector<SavedProfile> profiles_from_report(const Json& report);

/// Same name/title pairing that profiles_from_report recovers.
[[nodiscard]] std::vector<SavedProfile> plot_profiles(const AnalysisReport& report);

}  // namespace illiqdep
