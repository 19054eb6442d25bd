#include "illiqdep/dependence.hpp"

#include <cmath>

#include "illiqdep/distributions.hpp"
#include "illiqdep/error.hpp"

namespace illiqdep {

std::string_view to_string(Variant v) noexcept {
    switch (v) {
        case Variant::Stationary: return "stationary";
        case Variant::OracleAdaptive: return "oracle_adaptive";
        case Variant::FeasibleAdaptive: return "feasible_adaptive";
    }
    return "unknown";
}

Variant variant_from_string(std::string_view name) {
    if (name == "stationary") return Variant::Stationary;
    if (name == "oracle_adaptive") return Variant::OracleAdaptive;
    if (name == "feasible_adaptive") return Variant::FeasibleAdaptive;
    throw Error(ErrorKind::InvalidInput, "unknown variant '" + std::string(name) + "'");
}

bool DependenceProfile::exceeds(std::size_t lag, double z) const {
    if (lag == 0 || lag > components.size()) {
        throw Error(ErrorKind::InvalidLag, "lag " + std::to_string(lag) + " outside profile");
    }
    return std::abs(components[lag - 1]) > bound(z);
}

double DependenceProfile::portmanteau(std::size_t m) const {
    if (m == 0 || m > components.size()) {
        throw Error(ErrorKind::InvalidLag, "portmanteau lag count " + std::to_string(m) +
                                               " outside profile of " +
                                               std::to_string(components.size()));
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) sum += components[k] * components[k];
    return scale * scale * sum;
}

TestReport chi2_decision(const DependenceProfile& profile, std::size_t m, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorKind::InvalidInput, "alpha must lie in (0, 1)");
    }
    TestReport report;
    report.statistic = profile.portmanteau(m);
    report.df = static_cast<int>(m);
    report.alpha = alpha;
    report.critical_value = dist::chi2_quantile(report.df, 1.0 - alpha);
    report.p_value = dist::chi2_sf(report.statistic, report.df);
    report.reject = report.statistic > report.critical_value;
    report.variant = profile.variant;
    return report;
}

bool chi2_reject(const DependenceProfile& profile, std::size_t m, double critical_value) {
    return profile.portmanteau(m) > critical_value;
}

}  // namespace illiqdep
