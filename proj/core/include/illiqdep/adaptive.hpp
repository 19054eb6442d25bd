#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "illiqdep/binarize.hpp"
#include "illiqdep/dependence.hpp"
#include "illiqdep/kernel.hpp"

namespace illiqdep {

/// Known trade probabilities P(a_t = 1), one per observation, each strictly
/// inside (0, 1).
class OracleProbabilities {
public:
    explicit OracleProbabilities(std::vector<double> p);

    [[nodiscard]] std::span<const double> values() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }

private:
    std::vector<double> p_;
};

/// Partial-sum autocovariance of the probability-centered series over the
/// first [n u] observations:
///   (n - h)^{-1} sum_{t=h+1}^{[n u]} (a_t - p_t)(a_{t-h} - p_{t-h}).
/// For h = 0 the denominator is n. [n u] is the integer part of n u, taken
/// with a 1e-9 allowance for representation error in u.
/// Throws InvalidInput on length mismatch, probabilities outside (0, 1) or
/// u outside (0, 1]; InvalidLag for h >= n.
[[nodiscard]] double gamma_tilde(const BinarySeries& series, std::span<const double> p,
                                 std::size_t h, double u = 1.0);

/// Variance correction
///   [n^{-1} sum_{t=2}^{n} e_t^2 e_{t-1}^2] / [n^{-1} sum_{t=1}^{n} e_t^2]^2,
/// e_t = a_t - p_t. Throws DegenerateSeries when the denominator vanishes.
[[nodiscard]] double omega_hat(const BinarySeries& series, std::span<const double> p);

/// Shared routine behind the oracle and feasible profiles: components
/// gamma_tilde(h, 1) / gamma_tilde(0, 1) for h = 1..m, omega = omega_hat,
/// scale = sqrt(n / omega). `variant` only tags the result.
[[nodiscard]] DependenceProfile adaptive_profile(const BinarySeries& series,
                                                 std::span<const double> p, std::size_t m,
                                                 Variant variant);

[[nodiscard]] DependenceProfile profile_oracle(const BinarySeries& series,
                                               const OracleProbabilities& p, std::size_t m);
[[nodiscard]] DependenceProfile profile_feasible(const BinarySeries& series,
                                                 const ProbabilityEstimate& estimate,
                                                 std::size_t m);

/// Heteroskedasticity-corrected portmanteau test with known probabilities.
[[nodiscard]] TestReport portmanteau_oracle(const BinarySeries& series,
                                            const OracleProbabilities& p, std::size_t m,
                                            double alpha = 0.05);
/// Feasible version using the kernel estimate. Clipped estimates are reported
/// in TestReport::warnings.
[[nodiscard]] TestReport portmanteau_feasible(const BinarySeries& series,
                                              const ProbabilityEstimate& estimate,
                                              std::size_t m, double alpha = 0.05);

/// gamma_tilde(h, u) on the grid u_k = k / grid_size, k = 1..grid_size.
/// `sup_abs` is the supremum of |gamma_tilde(h, u)| over all u in (0, 1]
/// (every integer cut point, not only the grid). Diagnostic only.
struct CusumTrajectory {
    std::size_t h = 0;
    std::vector<double> u_grid;
    std::vector<double> values;
    double sup_abs = 0.0;
};

[[nodiscard]] CusumTrajectory cusum_trajectory(const BinarySeries& series,
                                               std::span<const double> p, std::size_t h,
                                               std::size_t grid_size);
[[nodiscard]] CusumTrajectory cusum_trajectory(const BinarySeries& series,
                                               const OracleProbabilities& p, std::size_t h,
                                               std::size_t grid_size);
[[nodiscard]] CusumTrajectory cusum_trajectory(const BinarySeries& series,
                                               const ProbabilityEstimate& estimate,
                                               std::size_t h, std::size_t grid_size);

}  // namespace illiqdep
