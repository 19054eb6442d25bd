#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "illiqdep/binarize.hpp"
#include "illiqdep/dependence.hpp"
#include "illiqdep/kernel.hpp"
#include "illiqdep/rng.hpp"

namespace illiqdep {

/// Deterministic trade-probability path g on (0, 1], strictly inside (0, 1)
/// and piecewise Lipschitz by construction of each kind.
class ProbabilityPath {
public:
    enum class Kind { Constant, PiecewiseLinear, Tabulated };
    using Knot = std::pair<double, double>;  // (u, g(u))

    [[nodiscard]] static ProbabilityPath constant(double level);
    /// Linear interpolation between knots sorted by u, with u from 0 to 1
    /// inclusive. Two knots may share a u to encode a jump; the left piece
    /// owns the break point, matching intervals closed on the right.
    [[nodiscard]] static ProbabilityPath piecewise_linear(std::vector<Knot> knots);
    /// Step function: values[k] on (k / G, (k + 1) / G], G = values.size().
    [[nodiscard]] static ProbabilityPath tabulated(std::vector<double> values);

    [[nodiscard]] double operator()(double u) const;
    /// g(t / n) for t = 1..n.
    [[nodiscard]] std::vector<double> sample(std::size_t n) const;

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<Knot>& knots() const noexcept { return knots_; }
    [[nodiscard]] const std::vector<double>& table() const noexcept { return table_; }

private:
    ProbabilityPath(Kind kind, std::vector<Knot> knots, std::vector<double> table)
        : kind_(kind), knots_(std::move(knots)), table_(std::move(table)) {}

    Kind kind_;
    std::vector<Knot> knots_;
    std::vector<double> table_;
};

[[nodiscard]] std::string_view to_string(ProbabilityPath::Kind kind) noexcept;

/// g = 0.4 on (0, 0.4], 2u - 0.4 on (0.4, 0.6], 0.8 on (0.6, 1].
[[nodiscard]] ProbabilityPath case2_path();

namespace dgp {
/// Independent a_t ~ Bernoulli(p).
struct IndepConstant {
    double p = 0.6;
};
/// Independent a_t ~ Bernoulli(g(t / n)).
struct IndepPath {
    ProbabilityPath path;
};
/// a_t = b_t b_{t-1} with b_t iid Bernoulli(p_dot): 1-dependent, P(a_t = 1) = p_dot^2.
struct ProductOneDependent {
    double p_dot = 0.6;
};
}  // namespace dgp

using Dgp = std::variant<dgp::IndepConstant, dgp::IndepPath, dgp::ProductOneDependent>;

/// Throws InvalidInput if a level lies outside (0, 1).
void validate(const Dgp& model);

/// Marginal P(a_t = 1), t = 1..n, of the process (used by oracle statistics).
[[nodiscard]] std::vector<double> marginal_probabilities(const Dgp& model, std::size_t n);

[[nodiscard]] BinarySeries simulate_series(const Dgp& model, std::size_t n, CounterRng& rng);

enum class TestKind { Q, QOracle, QFeasible };

[[nodiscard]] std::string_view to_string(TestKind kind) noexcept;
[[nodiscard]] TestKind test_kind_from_string(std::string_view name);
/// Profile variant the test is built on.
[[nodiscard]] Variant variant_of(TestKind kind) noexcept;

struct KernelChoice {
    KernelFamily family = KernelFamily::Epanechnikov;
    double bandwidth_constant = kDefaultBandwidthConstant;  // b = c n^{-1/3} ...
    std::optional<double> bandwidth;  // ... unless fixed here

    [[nodiscard]] KernelSpec resolve(std::size_t n) const;
};

struct SimulationSpec {
    Dgp model = dgp::IndepConstant{0.6};
    std::size_t n = 800;
    std::size_t replications = 1000;
    std::size_t m = 5;
    double alpha = 0.05;
    std::uint64_t seed = 1;
    std::set<TestKind> tests = {TestKind::Q, TestKind::QFeasible};
    std::vector<std::size_t> lag_report;
    KernelChoice kernel;

    /// Field-level validation; throws InvalidInput naming the field.
    void validate() const;
};

struct SimulationResult {
    std::size_t n = 0;
    std::size_t replications = 0;
    std::uint64_t seed = 0;
    std::map<TestKind, double> rejection_percent;
    std::vector<std::size_t> lag_report;
    /// Per variant, aligned with lag_report: % of replications with the
    /// component outside its 95% band.
    std::map<Variant, std::vector<double>> exceedance_percent;
    /// Median over replications of sqrt(n) max_{h<=m} |oracle - feasible
    /// component|, present when both adaptive tests are requested.
    std::optional<double> oracle_feasible_gap_median;
    double runtime_seconds = 0.0;
};

/// Worker count: `requested` (0 = hardware concurrency), capped by the
/// ILLIQDEP_THREADS environment variable when set; at least 1.
[[nodiscard]] std::size_t resolve_workers(std::size_t requested = 0);

/// Replication r draws from CounterRng::substream(seed, r) and results are
/// aggregated as counts, so output does not depend on `workers`. A failing
/// replication aborts the run with an Error naming it.
[[nodiscard]] SimulationResult run_experiment(const SimulationSpec& spec,
                                              std::size_t workers = 1);

/// A grid of experiments over sample sizes sharing every other setting.
struct StudySpec {
    std::string name;
    SimulationSpec base;
    std::vector<std::size_t> sample_sizes;
};

[[nodiscard]] std::vector<SimulationResult> run_study(const StudySpec& study,
                                                      std::size_t workers = 1);

/// Plain-text tables: tests as rows and sample sizes as columns, then one
/// row per (n, variant) with the reported lags as columns.
[[nodiscard]] std::string render_table(const StudySpec& study,
                                       const std::vector<SimulationResult>& results);

}  // namespace illiqdep
