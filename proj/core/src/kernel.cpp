#include "illiqdep/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "illiqdep/error.hpp"

namespace illiqdep {

std::string_view to_string(KernelFamily family) noexcept {
    switch (family) {
        case KernelFamily::Epanechnikov: return "epanechnikov";
        case KernelFamily::Triangular: return "triangular";
        case KernelFamily::Uniform: return "uniform";
    }
    return "unknown";
}

KernelFamily kernel_family_from_string(std::string_view name) {
    if (name == "epanechnikov") return KernelFamily::Epanechnikov;
    if (name == "triangular") return KernelFamily::Triangular;
    if (name == "uniform") return KernelFamily::Uniform;
    throw Error(ErrorKind::InvalidInput, "unknown kernel '" + std::string(name) +
                                             "' (expected epanechnikov, triangular, uniform)");
}

std::string_view to_string(BandwidthRule rule) noexcept {
    return rule == BandwidthRule::Explicit ? "explicit" : "rate_default";
}

double kernel_value(KernelFamily family, double z) noexcept {
    const double az = std::abs(z);
    if (az > 1.0) return 0.0;
    switch (family) {
        case KernelFamily::Epanechnikov: return 0.75 * (1.0 - z * z);
        case KernelFamily::Triangular: return 1.0 - az;
        case KernelFamily::Uniform: return 0.5;
    }
    return 0.0;
}

double default_bandwidth(std::size_t n, double c) {
    if (n < 10) {
        throw Error(ErrorKind::SampleTooSmall,
                    "rate bandwidth needs n >= 10, got " + std::to_string(n));
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw Error(ErrorKind::InvalidInput, "bandwidth constant must be positive");
    }
    const double b = c * std::cbrt(1.0 / static_cast<double>(n));
    if (!(b < 1.0)) {
        throw Error(ErrorKind::InvalidInput, "bandwidth constant gives b >= 1");
    }
    return b;
}

void KernelSpec::validate() const {
    if (!(bandwidth > 0.0 && bandwidth < 1.0)) {
        throw Error(ErrorKind::InvalidInput, "bandwidth must lie in (0, 1)");
    }
}

KernelSpec KernelSpec::explicit_bandwidth(double b, KernelFamily family) {
    KernelSpec spec{family, b, BandwidthRule::Explicit};
    spec.validate();
    return spec;
}

KernelSpec KernelSpec::rate_default(std::size_t n, double c, KernelFamily family) {
    return KernelSpec{family, default_bandwidth(n, c), BandwidthRule::RateDefault};
}

std::size_t ProbabilityEstimate::clip_count() const noexcept {
    return static_cast<std::size_t>(std::count(clipped.begin(), clipped.end(), std::uint8_t{1}));
}

ProbabilityEstimate estimate_probability(const BinarySeries& series, const KernelSpec& spec) {
    spec.validate();
    const auto bits = series.bits();
    const std::size_t n = bits.size();
    const double width = static_cast<double>(n) * spec.bandwidth;

    // Offsets d with |d| / (n b) <= 1; beyond that K vanishes.
    const auto reach = std::min<std::size_t>(n - 1, static_cast<std::size_t>(std::floor(width)));
    std::vector<double> weight(reach + 1, 0.0);
    for (std::size_t d = 1; d <= reach; ++d) {
        weight[d] = kernel_value(spec.family, static_cast<double>(d) / width);
    }

    ProbabilityEstimate est;
    est.spec = spec;
    est.p_hat.resize(n);
    est.raw.resize(n);
    est.clipped.assign(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        double num = 0.0;
        double den = 0.0;
        const std::size_t left = std::min(reach, t);
        const std::size_t right = std::min(reach, n - 1 - t);
        for (std::size_t d = 1; d <= left; ++d) {
            num += weight[d] * bits[t - d];
            den += weight[d];
        }
        for (std::size_t d = 1; d <= right; ++d) {
            num += weight[d] * bits[t + d];
            den += weight[d];
        }
        if (!(den > 0.0)) {
            throw Error(ErrorKind::BandwidthTooSmall,
                        "kernel window is empty at t = " + std::to_string(t + 1) +
                            " (n b = " + std::to_string(width) + ")",
                        t);
        }
        const double p = num / den;
        est.raw[t] = p;
        const double clipped = std::clamp(p, kClipEpsilon, 1.0 - kClipEpsilon);
        est.p_hat[t] = clipped;
        est.clipped[t] = clipped != p ? 1 : 0;
    }
    return est;
}

}  // namespace illiqdep
