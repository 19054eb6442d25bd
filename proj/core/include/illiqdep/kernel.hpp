#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "illiqdep/binarize.hpp"

namespace illiqdep {

/// Kernels are supported on [-1, 1] and integrate to one there.
/// Uniform is discontinuous at the support edge; it is offered for
/// comparison only, the continuity requirement holds for the other two.
enum class KernelFamily { Epanechnikov, Triangular, Uniform };

enum class BandwidthRule { Explicit, RateDefault };

[[nodiscard]] std::string_view to_string(KernelFamily family) noexcept;
[[nodiscard]] KernelFamily kernel_family_from_string(std::string_view name);
[[nodiscard]] std::string_view to_string(BandwidthRule rule) noexcept;

/// Kernel value at z; zero outside [-1, 1].
[[nodiscard]] double kernel_value(KernelFamily family, double z) noexcept;

/// Constant used by the analysis pipeline and the simulations. With c = 1
/// the leave-one-out term biases each adaptive component by about
/// -0.9 / (sqrt(n) b) standard errors, which inflates the size at n <= 400.
inline constexpr double kDefaultBandwidthConstant = 2.0;

/// Rate bandwidth b = c n^{-1/3}. Throws SampleTooSmall for n < 10 and
/// InvalidInput for c <= 0 or a result outside (0, 1).
[[nodiscard]] double default_bandwidth(std::size_t n, double c = 1.0);

struct KernelSpec {
    KernelFamily family = KernelFamily::Epanechnikov;
    double bandwidth = 0.1;
    BandwidthRule rule = BandwidthRule::Explicit;

    /// Throws InvalidInput unless 0 < bandwidth < 1.
    void validate() const;

    [[nodiscard]] static KernelSpec explicit_bandwidth(double b,
                                                       KernelFamily family =
                                                           KernelFamily::Epanechnikov);
    [[nodiscard]] static KernelSpec rate_default(std::size_t n, double c = 1.0,
                                                 KernelFamily family =
                                                     KernelFamily::Epanechnikov);
};

inline constexpr double kClipEpsilon = 1e-6;

/// Leave-one-out kernel estimate of P(a_t = 1) for every t.
struct ProbabilityEstimate {
    std::vector<double> p_hat;    // clipped to [kClipEpsilon, 1 - kClipEpsilon]
    std::vector<double> raw;      // before clipping
    std::vector<std::uint8_t> clipped;
    KernelSpec spec;

    [[nodiscard]] std::size_t size() const noexcept { return p_hat.size(); }
    [[nodiscard]] std::size_t clip_count() const noexcept;
    [[nodiscard]] std::span<const double> probabilities() const noexcept { return p_hat; }
};

/// p_hat_t = sum_i w_ti a_i with w_ti proportional to K((t - i) / (n b)) for
/// i != t and w_tt = 0. Weights renormalize near the sample edges. Throws
/// BandwidthTooSmall when some t has no positive weight.
[[nodiscard]] ProbabilityEstimate estimate_probability(const BinarySeries& series,
                                                       const KernelSpec& spec);

}  // namespace illiqdep
