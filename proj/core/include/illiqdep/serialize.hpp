#pragma once

#include <nlohmann/json.hpp>
#include <ostream>
#include <vector>

#include "illiqdep/adaptive.hpp"
#include "illiqdep/dependence.hpp"
#include "illiqdep/kernel.hpp"
#include "illiqdep/montecarlo.hpp"

namespace illiqdep {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

[[nodiscard]] Json to_json(const DependenceProfile& profile);
[[nodiscard]] DependenceProfile profile_from_json(const Json& j);
[[nodiscard]] Json to_json(const TestReport& report);
[[nodiscard]] TestReport test_report_from_json(const Json& j);
[[nodiscard]] Json to_json(const KernelSpec& spec);
/// Per-t estimates are not included, only the kernel and clip count.
[[nodiscard]] Json summary_json(const ProbabilityEstimate& estimate);
[[nodiscard]] Json to_json(const CusumTrajectory& trajectory);

// CSV emitters. Numbers use %.10g, rows in index order.
void write_profile_csv(std::ostream& out, const DependenceProfile& profile);  // lag,component,lower_bound,upper_bound
void write_estimate_csv(std::ostream& out, const ProbabilityEstimate& estimate);  // t,p_hat,clipped
void write_cusum_csv(std::ostream& out, const CusumTrajectory& trajectory);  // u,value

/// Reads a simulation config. Throws InvalidInput naming the offending field.
[[nodiscard]] StudySpec study_from_json(const Json& j);
[[nodiscard]] Json to_json(const StudySpec& study);
[[nodiscard]] Json to_json(const SimulationResult& result, bool include_runtime = false);
/// Config echo plus one result object per sample size.
[[nodiscard]] Json study_result_json(const StudySpec& study,
                                     const std::vector<SimulationResult>& results,
                                     bool include_runtime = false);

}  // namespace illiqdep
