#include <gtest/gtest.h>

#include <cmath>

#include "illiqdep/error.hpp"
#include "illiqdep/kernel.hpp"
#include "illiqdep/montecarlo.hpp"
#include "support/oracles.hpp"

using namespace illiqdep;

TEST(DefaultBandwidth, Values) {
    EXPECT_NEAR(default_bandwidth(1000, 1.0), 0.1, 1e-15);
    EXPECT_NEAR(default_bandwidth(800, 1.0), std::pow(800.0, -1.0 / 3.0), 1e-15);
    EXPECT_NEAR(default_bandwidth(800, 1.0), 0.10772, 1e-5);
    EXPECT_NEAR(default_bandwidth(800, 2.0), 2.0 * std::pow(800.0, -1.0 / 3.0), 1e-15);
}

TEST(DefaultBandwidth, Guards) {
    try {
        (void)default_bandwidth(8, 1.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SampleTooSmall);
    }
    EXPECT_THROW((void)default_bandwidth(100, 0.0), Error);
    EXPECT_THROW((void)default_bandwidth(10, 5.0), Error);  // b >= 1
}

TEST(DefaultBandwidth, RateConditionsShrink) {
    // n b^4 and 1 / (n b^2) both decay like n^{-1/3}.
    double prev_a = INFINITY, prev_b = INFINITY;
    for (std::size_t n : {100u, 1000u, 10000u, 100000u}) {
        const double b = default_bandwidth(n, 1.0);
        const double a = n * std::pow(b, 4), c = 1.0 / (n * b * b);
        EXPECT_LT(a, prev_a);
        EXPECT_LT(c, prev_b);
        prev_a = a;
        prev_b = c;
    }
}

TEST(KernelValue, IntegratesToOne) {
    for (auto family : {KernelFamily::Epanechnikov, KernelFamily::Triangular,
                        KernelFamily::Uniform}) {
        const long double area = oracle::simpson(
            [&](long double z) { return kernel_value(family, static_cast<double>(z)); }, -1.0L,
            1.0L, 1e-12L);
        EXPECT_NEAR(static_cast<double>(area), 1.0, 1e-9) << to_string(family);
        EXPECT_EQ(kernel_value(family, 1.5), 0.0);
        EXPECT_EQ(kernel_value(family, -1.0001), 0.0);
    }
    EXPECT_DOUBLE_EQ(kernel_value(KernelFamily::Epanechnikov, 0.0), 0.75);
}

TEST(KernelSpec, Validation) {
    EXPECT_THROW((void)KernelSpec::explicit_bandwidth(0.0), Error);
    EXPECT_THROW((void)KernelSpec::explicit_bandwidth(1.0), Error);
    EXPECT_EQ(KernelSpec::rate_default(1000).rule, BandwidthRule::RateDefault);
    EXPECT_EQ(kernel_family_from_string("triangular"), KernelFamily::Triangular);
    EXPECT_THROW((void)kernel_family_from_string("gauss"), Error);
}

TEST(EstimateProbability, AllOnesIsClippedOne) {
    const BinarySeries ones(std::vector<std::uint8_t>(50, 1));
    const auto est = estimate_probability(ones, KernelSpec::explicit_bandwidth(0.2));
    ASSERT_EQ(est.size(), 50u);
    for (std::size_t t = 0; t < 50; ++t) {
        EXPECT_DOUBLE_EQ(est.raw[t], 1.0);
        EXPECT_DOUBLE_EQ(est.p_hat[t], 1.0 - kClipEpsilon);
        EXPECT_EQ(est.clipped[t], 1);
    }
    EXPECT_EQ(est.clip_count(), 50u);
}

TEST(EstimateProbability, AlternatingInterior) {
    const std::size_t n = 400;
    std::vector<std::uint8_t> bits(n);
    for (std::size_t t = 0; t < n; ++t) bits[t] = t % 2;
    const double b = 0.2;
    const auto est = estimate_probability(BinarySeries(bits), KernelSpec::explicit_bandwidth(b));
    const double nb = n * b;
    const auto reach = static_cast<std::size_t>(nb);
    for (std::size_t t = reach; t + reach < n; ++t) {
        EXPECT_NEAR(est.p_hat[t], 0.5, 2.0 / nb) << t;
    }
}

TEST(EstimateProbability, MatchesFullSampleBruteForce) {
    CounterRng rng(5);
    for (std::size_t n : {12u, 57u, 300u}) {
        std::vector<std::uint8_t> bits(n);
        for (auto& v : bits) v = rng.bernoulli(0.4);
        for (double b : {0.15, 0.3, 0.7}) {
            if (n * b < 2) continue;
            const auto est =
                estimate_probability(BinarySeries(bits), KernelSpec::explicit_bandwidth(b));
            const auto ref = oracle::loo_epanechnikov(bits, b);
            for (std::size_t t = 0; t < n; ++t) EXPECT_NEAR(est.raw[t], ref[t], 1e-12);
        }
    }
}

TEST(EstimateProbability, ComplementSymmetryAndRange) {
    CounterRng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::uint8_t> bits(40 + rng() % 200);
        for (auto& v : bits) v = rng.bernoulli(0.7);
        const BinarySeries s(bits);
        for (auto family : {KernelFamily::Epanechnikov, KernelFamily::Triangular,
                            KernelFamily::Uniform}) {
            const auto spec = KernelSpec{family, 0.25, BandwidthRule::Explicit};
            const auto est = estimate_probability(s, spec);
            const auto comp = estimate_probability(s.complement(), spec);
            for (std::size_t t = 0; t < s.size(); ++t) {
                EXPECT_NEAR(comp.raw[t], 1.0 - est.raw[t], 1e-12);
                EXPECT_GE(est.p_hat[t], kClipEpsilon);
                EXPECT_LE(est.p_hat[t], 1.0 - kClipEpsilon);
            }
        }
    }
}

TEST(EstimateProbability, LeaveOneOut) {
    // A lone 1 is invisible to its own estimate.
    std::vector<std::uint8_t> bits(30, 0);
    bits[15] = 1;
    const auto est = estimate_probability(BinarySeries(bits), KernelSpec::explicit_bandwidth(0.2));
    EXPECT_EQ(est.raw[15], 0.0);
    EXPECT_GT(est.raw[14], 0.0);
}

TEST(EstimateProbability, BandwidthTooSmall) {
    const BinarySeries s({1, 0, 1, 0, 1, 1, 0, 0, 1, 0});
    try {
        (void)estimate_probability(s, KernelSpec::explicit_bandwidth(0.05));  // n b = 0.5
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BandwidthTooSmall);
    }
}

TEST(EstimateProbability, Case2ConsistencyOverReplications) {
    const auto g = case2_path();
    const std::size_t n = 800;
    const auto truth = g.sample(n);
    double mae_total = 0;
    constexpr int reps = 100;
    for (int r = 0; r < reps; ++r) {
        CounterRng rng = CounterRng::substream(31337, r);
        const auto s = simulate_series(dgp::IndepPath{g}, n, rng);
        const auto est = estimate_probability(s, KernelSpec::rate_default(n, 1.0));
        double mae = 0;
        for (std::size_t t = 0; t < n; ++t) mae += std::abs(est.p_hat[t] - truth[t]);
        mae_total += mae / n;
    }
    EXPECT_LT(mae_total / reps, 0.05);
}
