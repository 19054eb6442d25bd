#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace illiqdep {

enum class Variant { Stationary, OracleAdaptive, FeasibleAdaptive };

[[nodiscard]] std::string_view to_string(Variant v) noexcept;
/// Inverse of to_string; throws InvalidInput on unknown names.
[[nodiscard]] Variant variant_from_string(std::string_view name);

/// Per-lag normalized dependence statistics ("dependence plot" data).
///
/// components[k] belongs to lag k+1. `scale` is the multiplier that makes
/// each component asymptotically standard normal under independence:
/// sqrt(n) for the stationary variant, sqrt(n / omega) for the adaptive ones.
/// The portmanteau statistic of the first m lags is scale^2 * sum of squares.
struct DependenceProfile {
    std::vector<std::size_t> lags;
    std::vector<double> components;
    double scale = 1.0;
    Variant variant = Variant::Stationary;
    std::size_t n = 0;
    double omega = 1.0;

    [[nodiscard]] std::size_t max_lag() const noexcept { return lags.size(); }
    /// Half-width of the confidence band, z / scale.
    [[nodiscard]] double bound(double z = 1.96) const noexcept { return z / scale; }
    /// |component at lag| > bound(z). Lags are 1-based.
    [[nodiscard]] bool exceeds(std::size_t lag, double z = 1.96) const;
    /// scale^2 * sum of the first m squared components.
    [[nodiscard]] double portmanteau(std::size_t m) const;
};

struct TestReport {
    double statistic = 0.0;
    int df = 0;
    double alpha = 0.05;
    double critical_value = 0.0;
    double p_value = 1.0;
    bool reject = false;
    Variant variant = Variant::Stationary;
    std::vector<std::string> warnings;
};

/// Chi-square decision on the first m lags of `profile` at level alpha.
/// Throws InvalidLag if m is 0 or exceeds the profile, InvalidInput for
/// alpha outside (0, 1).
[[nodiscard]] TestReport chi2_decision(const DependenceProfile& profile, std::size_t m,
                                       double alpha);

/// Decision only, against a precomputed critical value. Used by the Monte
/// Carlo loop where (m, alpha) are fixed across replications.
[[nodiscard]] bool chi2_reject(const DependenceProfile& profile, std::size_t m,
                               double critical_value);

}  // namespace illiqdep
