#include "illiqdep/stationary.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "illiqdep/error.hpp"

namespace illiqdep {

namespace {

std::vector<double> centered(const BinarySeries& series) {
    const double mean = sample_mean(series);
    const auto bits = series.bits();
    std::vector<double> out(bits.size());
    for (std::size_t t = 0; t < bits.size(); ++t) out[t] = bits[t] - mean;
    return out;
}

double lagged_sum(const std::vector<double>& x, std::size_t h) {
    double sum = 0.0;
    for (std::size_t t = h; t < x.size(); ++t) sum += x[t] * x[t - h];
    return sum;
}

void check_lag_count(std::size_t m, std::size_t n) {
    if (m == 0 || m >= n) {
        throw Error(ErrorKind::InvalidLag, "max lag " + std::to_string(m) +
                                               " must satisfy 1 <= m < n = " +
                                               std::to_string(n));
    }
}

}  // namespace

double gamma_hat(const BinarySeries& series, std::size_t h) {
    const std::size_t n = series.size();
    if (h >= n) {
        throw Error(ErrorKind::InvalidLag,
                    "lag " + std::to_string(h) + " must be < n = " + std::to_string(n));
    }
    return lagged_sum(centered(series), h) / static_cast<double>(n);
}

DependenceProfile dependence_profile_stationary(const BinarySeries& series, std::size_t m) {
    const std::size_t n = series.size();
    check_lag_count(m, n);
    const auto x = centered(series);
    const double variance = lagged_sum(x, 0);
    if (!(variance > 0.0)) {
        throw Error(ErrorKind::DegenerateSeries, "constant binary series has zero variance");
    }

    DependenceProfile profile;
    profile.variant = Variant::Stationary;
    profile.n = n;
    profile.omega = 1.0;
    profile.scale = std::sqrt(static_cast<double>(n));
    profile.lags.resize(m);
    profile.components.resize(m);
    for (std::size_t h = 1; h <= m; ++h) {
        profile.lags[h - 1] = h;
        // The common 1/n cancels in the ratio.
        profile.components[h - 1] = lagged_sum(x, h) / variance;
    }
    return profile;
}

TestReport portmanteau_stationary(const BinarySeries& series, std::size_t m, double alpha) {
    return chi2_decision(dependence_profile_stationary(series, m), m, alpha);
}

}  // namespace illiqdep
