#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "illiqdep/error.hpp"
#include "illiqdep/montecarlo.hpp"
#include "illiqdep/serialize.hpp"
#include "illiqdep/stationary.hpp"

using namespace illiqdep;

TEST(Rng, ReproducibleAndIndependentStreams) {
    auto a = CounterRng::substream(5, 3);
    auto b = CounterRng::substream(5, 3);
    auto c = CounterRng::substream(5, 4);
    int same = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a();
        EXPECT_EQ(x, b());
        same += x == c();
    }
    EXPECT_EQ(same, 0);

    CounterRng u(9);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        const double v = u.uniform();
        ASSERT_GE(v, 0.0);
        ASSERT_LT(v, 1.0);
        sum += v;
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Path, Case2Values) {
    const auto g = case2_path();
    EXPECT_DOUBLE_EQ(g(0.2), 0.4);
    EXPECT_DOUBLE_EQ(g(0.4), 0.4);
    EXPECT_NEAR(g(0.5), 0.6, 1e-15);
    EXPECT_NEAR(g(0.6), 0.8, 1e-15);
    EXPECT_DOUBLE_EQ(g(0.9), 0.8);
    EXPECT_DOUBLE_EQ(g(1.0), 0.8);
    const auto s = g.sample(10);
    ASSERT_EQ(s.size(), 10u);
    EXPECT_DOUBLE_EQ(s[0], 0.4);
    EXPECT_DOUBLE_EQ(s[9], 0.8);
}

TEST(Path, JumpsAndTables) {
    const auto jump = ProbabilityPath::piecewise_linear({{0, 0.2}, {0.5, 0.2}, {0.5, 0.7}, {1, 0.7}});
    EXPECT_DOUBLE_EQ(jump(0.5), 0.2);
    EXPECT_DOUBLE_EQ(jump(0.5000001), 0.7);
    const auto table = ProbabilityPath::tabulated({0.1, 0.9});
    EXPECT_DOUBLE_EQ(table(0.5), 0.1);
    EXPECT_DOUBLE_EQ(table(0.51), 0.9);
    EXPECT_DOUBLE_EQ(ProbabilityPath::constant(0.3)(0.77), 0.3);
}

TEST(Path, LevelGuards) {
    EXPECT_THROW((void)ProbabilityPath::constant(0.0), Error);
    EXPECT_THROW((void)ProbabilityPath::constant(1.0), Error);
    EXPECT_THROW((void)ProbabilityPath::tabulated({0.5, 1.2}), Error);
    EXPECT_THROW((void)ProbabilityPath::tabulated({}), Error);
    EXPECT_THROW((void)ProbabilityPath::piecewise_linear({{0, 0.5}}), Error);
    EXPECT_THROW((void)ProbabilityPath::piecewise_linear({{0, 0.5}, {0.9, 0.5}}), Error);
    EXPECT_THROW((void)ProbabilityPath::piecewise_linear({{0, 0.5}, {0.7, 0.5}, {0.6, 0.5}, {1, 0.5}}),
                 Error);
    EXPECT_THROW(validate(dgp::IndepConstant{1.0}), Error);
    EXPECT_THROW(validate(dgp::ProductOneDependent{0.0}), Error);
}

TEST(Dgp, IndependentConstantMean) {
    CounterRng rng = CounterRng::substream(1, 0);
    const auto s = simulate_series(dgp::IndepConstant{0.6}, 20000, rng);
    // 4 standard errors of a Bernoulli(0.6) mean at n = 20000.
    EXPECT_NEAR(sample_mean(s), 0.6, 4 * std::sqrt(0.24 / 20000));
}

TEST(Dgp, ProductIsOneDependent) {
    CounterRng rng = CounterRng::substream(2, 0);
    const std::size_t n = 10000;
    const auto s = simulate_series(dgp::ProductOneDependent{0.6}, n, rng);
    EXPECT_NEAR(sample_mean(s), 0.36, 0.02);
    const auto profile = dependence_profile_stationary(s, 3);
    // Lag-1 autocorrelation of b_t b_{t-1}: p^3 (1 - p) / (p^2 (1 - p^2)) = 0.375.
    EXPECT_NEAR(profile.components[0], 0.375, 4 / std::sqrt(static_cast<double>(n)));
    EXPECT_LT(std::abs(profile.components[1]), 4 / std::sqrt(static_cast<double>(n)));
    EXPECT_LT(std::abs(profile.components[2]), 4 / std::sqrt(static_cast<double>(n)));
    const auto p = marginal_probabilities(dgp::ProductOneDependent{0.6}, 5);
    for (double v : p) EXPECT_NEAR(v, 0.36, 1e-15);
}

TEST(Dgp, PathMarginals) {
    const auto p = marginal_probabilities(dgp::IndepPath{case2_path()}, 100);
    EXPECT_EQ(p, case2_path().sample(100));
}

TEST(Spec, FieldValidation) {
    auto message = [](const SimulationSpec& spec) -> std::string {
        try {
            spec.validate();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
            return e.what();
        }
        return "";
    };
    SimulationSpec spec;
    EXPECT_EQ(message(spec), "");
    spec.replications = 0;
    EXPECT_NE(message(spec).find("field 'replications'"), std::string::npos);
    spec = {};
    spec.m = spec.n;
    EXPECT_NE(message(spec).find("field 'max_lag'"), std::string::npos);
    spec = {};
    spec.alpha = 1.0;
    EXPECT_NE(message(spec).find("field 'alpha'"), std::string::npos);
    spec = {};
    spec.model = dgp::IndepConstant{1.5};
    EXPECT_NE(message(spec).find("field 'dgp'"), std::string::npos);
    spec = {};
    spec.lag_report = {0};
    EXPECT_NE(message(spec).find("field 'lag_report'"), std::string::npos);
    spec = {};
    spec.kernel.bandwidth = 2.0;
    EXPECT_NE(message(spec).find("field 'kernel'"), std::string::npos);
    spec = {};
    spec.tests.clear();
    EXPECT_NE(message(spec).find("field 'tests'"), std::string::npos);
}

TEST(Experiment, IndependentOfWorkerCount) {
    SimulationSpec spec;
    spec.model = dgp::IndepPath{case2_path()};
    spec.n = 200;
    spec.replications = 60;
    spec.seed = 17;
    spec.tests = {TestKind::Q, TestKind::QOracle, TestKind::QFeasible};
    spec.lag_report = {1, 5, 20};
    const auto one = run_experiment(spec, 1);
    const auto four = run_experiment(spec, 4);
    EXPECT_EQ(to_json(one).dump(), to_json(four).dump());
    EXPECT_TRUE(one.oracle_feasible_gap_median.has_value());
    EXPECT_EQ(one.exceedance_percent.at(Variant::OracleAdaptive).size(), 3u);

    spec.seed = 18;
    EXPECT_NE(to_json(run_experiment(spec, 1)).dump(), to_json(one).dump());
}

TEST(Experiment, RejectionPercentMatchesManualLoop) {
    SimulationSpec spec;
    spec.n = 100;
    spec.replications = 40;
    spec.seed = 23;
    spec.tests = {TestKind::Q};
    const auto result = run_experiment(spec, 2);
    int rejected = 0;
    for (std::size_t r = 0; r < spec.replications; ++r) {
        CounterRng rng = CounterRng::substream(spec.seed, r);
        const auto s = simulate_series(spec.model, spec.n, rng);
        rejected += portmanteau_stationary(s, spec.m, spec.alpha).reject;
    }
    EXPECT_DOUBLE_EQ(result.rejection_percent.at(TestKind::Q), 100.0 * rejected / 40.0);
}

TEST(Experiment, ThreadCapFromEnvironment) {
    ::setenv("ILLIQDEP_THREADS", "2", 1);
    EXPECT_EQ(resolve_workers(8), 2u);
    EXPECT_EQ(resolve_workers(1), 1u);
    ::unsetenv("ILLIQDEP_THREADS");
    EXPECT_EQ(resolve_workers(3), 3u);
    EXPECT_GE(resolve_workers(0), 1u);
}

TEST(Study, TableLayout) {
    StudySpec study;
    study.name = "demo";
    study.base.replications = 20;
    study.base.lag_report = {1, 2};
    study.base.tests = {TestKind::Q, TestKind::QFeasible};
    study.sample_sizes = {100, 200};
    const auto results = run_study(study);
    ASSERT_EQ(results.size(), 2u);
    const auto table = render_table(study, results);
    EXPECT_NE(table.find("Q_m"), std::string::npos);
    EXPECT_NE(table.find("Qcheck_m"), std::string::npos);
    EXPECT_EQ(table.find("Qbar_m"), std::string::npos);
    EXPECT_NE(table.find("Acheck_m"), std::string::npos);
    EXPECT_EQ(table, render_table(study, run_study(study, 3)));
}
