#pragma once

namespace illiqdep::dist {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
[[nodiscard]] double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed directly
/// so that small tail probabilities keep their relative accuracy.
[[nodiscard]] double regularized_gamma_q(double a, double x);

/// Chi-square CDF with `df` degrees of freedom. Throws InvalidInput for
/// x < 0 or df < 1.
[[nodiscard]] double chi2_cdf(double x, int df);
/// Upper tail 1 - chi2_cdf(x, df).
[[nodiscard]] double chi2_sf(double x, int df);
/// Inverse of chi2_cdf; q must lie strictly inside (0, 1).
[[nodiscard]] double chi2_quantile(int df, double q);

[[nodiscard]] double gaussian_cdf(double x) noexcept;
/// Inverse standard normal CDF; q must lie strictly inside (0, 1).
[[nodiscard]] double gaussian_quantile(double q);

}  // namespace illiqdep::dist
