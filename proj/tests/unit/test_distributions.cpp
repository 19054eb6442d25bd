#include <gtest/gtest.h>

#include <cmath>

#include "illiqdep/distributions.hpp"
#include "illiqdep/error.hpp"
#include "support/oracles.hpp"

using namespace illiqdep;

TEST(Chi2Cdf, ZeroIsZero) {
    for (int k = 1; k <= 100; ++k) EXPECT_EQ(dist::chi2_cdf(0.0, k), 0.0);
}

TEST(Chi2Cdf, TwoDegreesClosedForm) {
    for (double x : {1.0, 2.0, 5.0}) {
        EXPECT_NEAR(dist::chi2_cdf(x, 2), 1.0 - std::exp(-x / 2), 1e-14);
    }
}

TEST(Chi2Cdf, AgreesWithQuadrature) {
    EXPECT_NEAR(dist::chi2_cdf(11.0705, 5), 0.95, 1e-4);
    EXPECT_NEAR(oracle::chi2_cdf_quadrature(11.0705, 5), 0.95, 1e-4);
    for (int k : {1, 2, 3, 5, 10, 30, 60}) {
        for (double x : {0.1, 0.5, 1.0, 3.0, 7.5, 20.0, 45.0, 80.0}) {
            EXPECT_NEAR(dist::chi2_cdf(x, k), oracle::chi2_cdf_quadrature(x, k), 1e-10)
                << "k=" << k << " x=" << x;
        }
    }
}

TEST(Chi2Cdf, MonotoneAndComplementary) {
    for (int k = 1; k <= 100; k += 7) {
        double prev = 0.0;
        for (double x = 0.0; x < 3.0 * k + 30; x += 0.25) {
            const double c = dist::chi2_cdf(x, k);
            EXPECT_GE(c, prev);
            EXPECT_NEAR(c + dist::chi2_sf(x, k), 1.0, 1e-14);
            prev = c;
        }
    }
}

TEST(Chi2Cdf, Errors) {
    EXPECT_THROW((void)dist::chi2_cdf(-1.0, 3), Error);
    EXPECT_THROW((void)dist::chi2_cdf(1.0, 0), Error);
}

TEST(Chi2Quantile, RoundTrips) {
    for (int k : {1, 5, 60}) {
        for (double x : {0.5, 3.0, 20.0}) {
            EXPECT_NEAR(dist::chi2_quantile(k, dist::chi2_cdf(x, k)), x, 1e-8);
        }
    }
    for (int k = 1; k <= 100; ++k) {
        for (double q : {0.01, 0.05, 0.5, 0.95, 0.99}) {
            const double x = dist::chi2_quantile(k, q);
            EXPECT_NEAR(dist::chi2_cdf(x, k), q, 1e-9);
        }
    }
}

TEST(Chi2Quantile, KnownValues) {
    EXPECT_NEAR(dist::chi2_quantile(5, 0.95), 11.0705, 1e-4);
    const double z = dist::gaussian_quantile(0.975);
    EXPECT_NEAR(dist::chi2_quantile(1, 0.95), z * z, 1e-8);
    EXPECT_NEAR(dist::chi2_quantile(1, 0.95), 3.8415, 1e-4);
}

TEST(Chi2Quantile, Errors) {
    EXPECT_THROW((void)dist::chi2_quantile(5, 0.0), Error);
    EXPECT_THROW((void)dist::chi2_quantile(5, 1.0), Error);
    EXPECT_THROW((void)dist::chi2_quantile(0, 0.5), Error);
}

TEST(GaussianQuantile, Values) {
    EXPECT_NEAR(dist::gaussian_quantile(0.5), 0.0, 1e-15);
    EXPECT_NEAR(dist::gaussian_quantile(0.975), 1.95996, 1e-5);
    for (double q : {0.01, 0.3}) {
        EXPECT_NEAR(dist::gaussian_quantile(q), -dist::gaussian_quantile(1 - q), 1e-12);
    }
    // erf-based oracle: Phi(x) = (1 + erf(x / sqrt 2)) / 2.
    for (double q : {1e-10, 1e-4, 0.02, 0.1, 0.4, 0.6, 0.9, 0.98, 0.9999}) {
        const double x = dist::gaussian_quantile(q);
        const double back = 0.5 * (1.0 + std::erf(x / std::sqrt(2.0)));
        EXPECT_NEAR(back, q, 1e-9) << q;
    }
    EXPECT_THROW((void)dist::gaussian_quantile(0.0), Error);
    EXPECT_THROW((void)dist::gaussian_quantile(1.5), Error);
}
