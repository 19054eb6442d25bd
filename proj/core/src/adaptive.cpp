#include "illiqdep/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "illiqdep/error.hpp"

namespace illiqdep {

namespace {

void check_probabilities(std::span<const double> p, std::size_t n) {
    if (p.size() != n) {
        throw Error(ErrorKind::InvalidInput, "probability path has length " +
                                                 std::to_string(p.size()) + ", series has " +
                                                 std::to_string(n));
    }
    for (std::size_t t = 0; t < p.size(); ++t) {
        if (!(p[t] > 0.0 && p[t] < 1.0)) {
            throw Error(ErrorKind::InvalidInput,
                        "probability at index " + std::to_string(t) + " outside (0, 1)", t);
        }
    }
}

void check_lag(std::size_t h, std::size_t n) {
    if (h >= n) {
        throw Error(ErrorKind::InvalidLag,
                    "lag " + std::to_string(h) + " must be < n = " + std::to_string(n));
    }
}

std::vector<double> residuals(const BinarySeries& series, std::span<const double> p) {
    const auto bits = series.bits();
    std::vector<double> e(bits.size());
    for (std::size_t t = 0; t < bits.size(); ++t) e[t] = bits[t] - p[t];
    return e;
}

double denominator(std::size_t n, std::size_t h) {
    return static_cast<double>(h == 0 ? n : n - h);
}

// Number of leading observations covered by u, i.e. [n u] clamped to [0, n].
std::size_t cut_index(std::size_t n, double u) {
    const double cut = std::floor(static_cast<double>(n) * u + 1e-9);
    return static_cast<std::size_t>(std::clamp(cut, 0.0, static_cast<double>(n)));
}

}  // namespace

OracleProbabilities::OracleProbabilities(std::vector<double> p) : p_(std::move(p)) {
    check_probabilities(p_, p_.size());
}

double gamma_tilde(const BinarySeries& series, std::span<const double> p, std::size_t h,
                   double u) {
    const std::size_t n = series.size();
    check_probabilities(p, n);
    check_lag(h, n);
    if (!(u > 0.0 && u <= 1.0)) throw Error(ErrorKind::InvalidInput, "u must lie in (0, 1]");
    const auto bits = series.bits();
    const std::size_t end = cut_index(n, u);
    double sum = 0.0;
    for (std::size_t t = h; t < end; ++t) sum += (bits[t] - p[t]) * (bits[t - h] - p[t - h]);
    return sum / denominator(n, h);
}

double omega_hat(const BinarySeries& series, std::span<const double> p) {
    const std::size_t n = series.size();
    check_probabilities(p, n);
    const auto e = residuals(series, p);
    double cross = 0.0;
    for (std::size_t t = 1; t < n; ++t) cross += e[t] * e[t] * e[t - 1] * e[t - 1];
    double sq = 0.0;
    for (double v : e) sq += v * v;
    const double nn = static_cast<double>(n);
    const double den = (sq / nn) * (sq / nn);
    if (!(den > 0.0)) throw Error(ErrorKind::DegenerateSeries, "omega denominator is zero");
    const double omega = (cross / nn) / den;
    if (!(omega > 0.0)) {
        throw Error(ErrorKind::DegenerateSeries, "omega numerator is zero");
    }
    return omega;
}

DependenceProfile adaptive_profile(const BinarySeries& series, std::span<const double> p,
                                   std::size_t m, Variant variant) {
    const std::size_t n = series.size();
    check_probabilities(p, n);
    if (m == 0 || m >= n) {
        throw Error(ErrorKind::InvalidLag, "max lag " + std::to_string(m) +
                                               " must satisfy 1 <= m < n = " +
                                               std::to_string(n));
    }
    const auto e = residuals(series, p);

    double sq = 0.0;
    for (double v : e) sq += v * v;
    const double gamma0 = sq / denominator(n, 0);
    if (!(gamma0 > 0.0)) {
        throw Error(ErrorKind::DegenerateSeries, "centered series has zero variance");
    }

    DependenceProfile profile;
    profile.variant = variant;
    profile.n = n;
    profile.omega = omega_hat(series, p);
    profile.scale = std::sqrt(static_cast<double>(n) / profile.omega);
    profile.lags.resize(m);
    profile.components.resize(m);
    for (std::size_t h = 1; h <= m; ++h) {
        double sum = 0.0;
        for (std::size_t t = h; t < n; ++t) sum += e[t] * e[t - h];
        profile.lags[h - 1] = h;
        profile.components[h - 1] = (sum / denominator(n, h)) / gamma0;
    }
    return profile;
}

DependenceProfile profile_oracle(const BinarySeries& series, const OracleProbabilities& p,
                                 std::size_t m) {
    return adaptive_profile(series, p.values(), m, Variant::OracleAdaptive);
}

DependenceProfile profile_feasible(const BinarySeries& series,
                                   const ProbabilityEstimate& estimate, std::size_t m) {
    return adaptive_profile(series, estimate.probabilities(), m, Variant::FeasibleAdaptive);
}

TestReport portmanteau_oracle(const BinarySeries& series, const OracleProbabilities& p,
                              std::size_t m, double alpha) {
    return chi2_decision(profile_oracle(series, p, m), m, alpha);
}

TestReport portmanteau_feasible(const BinarySeries& series, const ProbabilityEstimate& estimate,
                                std::size_t m, double alpha) {
    auto report = chi2_decision(profile_feasible(series, estimate, m), m, alpha);
    if (const auto clipped = estimate.clip_count(); clipped > 0) {
        report.warnings.push_back(std::to_string(clipped) +
                                  " probability estimates clipped to [1e-6, 1 - 1e-6]");
    }
    return report;
}

CusumTrajectory cusum_trajectory(const BinarySeries& series, std::span<const double> p,
                                 std::size_t h, std::size_t grid_size) {
    const std::size_t n = series.size();
    check_probabilities(p, n);
    check_lag(h, n);
    if (grid_size < 2) throw Error(ErrorKind::InvalidInput, "grid_size must be >= 2");

    const auto e = residuals(series, p);
    const double den = denominator(n, h);

    // partial[k] = sum over the first k observations; zero while k <= h.
    std::vector<double> partial(n + 1, 0.0);
    double sup = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t t = k - 1;
        partial[k] = partial[k - 1] + (t >= h ? e[t] * e[t - h] : 0.0);
        sup = std::max(sup, std::abs(partial[k]) / den);
    }

    CusumTrajectory traj;
    traj.h = h;
    traj.sup_abs = sup;
    traj.u_grid.resize(grid_size);
    traj.values.resize(grid_size);
    for (std::size_t k = 1; k <= grid_size; ++k) {
        const double u = static_cast<double>(k) / static_cast<double>(grid_size);
        traj.u_grid[k - 1] = u;
        traj.values[k - 1] = partial[cut_index(n, u)] / den;
    }
    return traj;
}

CusumTrajectory cusum_trajectory(const BinarySeries& series, const OracleProbabilities& p,
                                 std::size_t h, std::size_t grid_size) {
    return cusum_trajectory(series, p.values(), h, grid_size);
}

CusumTrajectory cusum_trajectory(const BinarySeries& series,
                                 const ProbabilityEstimate& estimate, std::size_t h,
                                 std::size_t grid_size) {
    return cusum_trajectory(series, estimate.probabilities(), h, grid_size);
}

}  // namespace illiqdep
