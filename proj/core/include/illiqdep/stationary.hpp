#pragma once

#include <cstddef>

#include "illiqdep/binarize.hpp"
#include "illiqdep/dependence.hpp"

namespace illiqdep {

/// Mean-centered lag-h autocovariance with 1/n normalization:
/// (1/n) * sum_{t=h+1}^{n} (a_t - abar)(a_{t-h} - abar).
/// gamma_hat(s, 0) = abar (1 - abar). Throws InvalidLag for h >= n.
[[nodiscard]] double gamma_hat(const BinarySeries& series, std::size_t h);

/// Components gamma_hat(h) / gamma_hat(0), h = 1..m, with scale sqrt(n) and
/// omega = 1. Throws InvalidLag unless 1 <= m < n and DegenerateSeries for a
/// constant series.
[[nodiscard]] DependenceProfile dependence_profile_stationary(const BinarySeries& series,
                                                              std::size_t m);

/// The Q_m test: n * |components|^2 against the chi-square(m) quantile.
[[nodiscard]] TestReport portmanteau_stationary(const BinarySeries& series, std::size_t m,
                                                double alpha = 0.05);

}  // namespace illiqdep
