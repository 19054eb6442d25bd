#include "illiqdep/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "illiqdep/adaptive.hpp"
#include "illiqdep/distributions.hpp"
#include "illiqdep/error.hpp"
#include "illiqdep/stationary.hpp"

namespace illiqdep {

namespace {

void check_level(double v, const char* what) {
    if (!(v > 0.0 && v < 1.0)) {
        throw Error(ErrorKind::InvalidInput, std::string(what) + " must lie in (0, 1)");
    }
}

constexpr double kBandZ = 1.96;

}  // namespace

// ---------------------------------------------------------------------------
// ProbabilityPath

ProbabilityPath ProbabilityPath::constant(double level) {
    check_level(level, "constant path level");
    return ProbabilityPath(Kind::Constant, {{0.0, level}, {1.0, level}}, {});
}

ProbabilityPath ProbabilityPath::piecewise_linear(std::vector<Knot> knots) {
    if (knots.size() < 2) {
        throw Error(ErrorKind::InvalidInput, "piecewise-linear path needs at least 2 knots");
    }
    if (knots.front().first != 0.0 || knots.back().first != 1.0) {
        throw Error(ErrorKind::InvalidInput, "path knots must span u = 0 to u = 1");
    }
    for (std::size_t k = 0; k < knots.size(); ++k) {
        check_level(knots[k].second, "path knot value");
        if (k > 0 && knots[k].first < knots[k - 1].first) {
            throw Error(ErrorKind::InvalidInput, "path knots must be sorted by u");
        }
        if (k > 1 && knots[k].first == knots[k - 2].first) {
            throw Error(ErrorKind::InvalidInput, "at most two knots may share a u");
        }
    }
    return ProbabilityPath(Kind::PiecewiseLinear, std::move(knots), {});
}

ProbabilityPath ProbabilityPath::tabulated(std::vector<double> values) {
    if (values.empty()) throw Error(ErrorKind::InvalidInput, "tabulated path is empty");
    for (double v : values) check_level(v, "tabulated path value");
    return ProbabilityPath(Kind::Tabulated, {}, std::move(values));
}

double ProbabilityPath::operator()(double u) const {
    // Below the domain the path is held at its limit from the right.
    u = std::clamp(u, 0.0, 1.0);
    if (kind_ == Kind::Tabulated) {
        const auto g = static_cast<double>(table_.size());
        auto idx = static_cast<std::size_t>(std::ceil(u * g));
        idx = std::clamp<std::size_t>(idx, 1, table_.size());
        return table_[idx - 1];
    }
    // First segment whose right end reaches u; zero-width segments (jumps)
    // are skipped so the left piece owns the break point.
    for (std::size_t k = 1; k < knots_.size(); ++k) {
        const auto [u0, g0] = knots_[k - 1];
        const auto [u1, g1] = knots_[k];
        if (u1 == u0) continue;
        if (u <= u1) {
            if (u <= u0) return g0;
            return g0 + (g1 - g0) * (u - u0) / (u1 - u0);
        }
    }
    return knots_.back().second;
}

std::vector<double> ProbabilityPath::sample(std::size_t n) const {
    std::vector<double> out(n);
    for (std::size_t t = 1; t <= n; ++t) {
        out[t - 1] = (*this)(static_cast<double>(t) / static_cast<double>(n));
    }
    return out;
}

std::string_view to_string(ProbabilityPath::Kind kind) noexcept {
    switch (kind) {
        case ProbabilityPath::Kind::Constant: return "constant";
        case ProbabilityPath::Kind::PiecewiseLinear: return "piecewise_linear";
        case ProbabilityPath::Kind::Tabulated: return "tabulated";
    }
    return "unknown";
}

ProbabilityPath case2_path() {
    return ProbabilityPath::piecewise_linear({{0.0, 0.4}, {0.4, 0.4}, {0.6, 0.8}, {1.0, 0.8}});
}

// ---------------------------------------------------------------------------
// DGPs

void validate(const Dgp& model) {
    std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, dgp::IndepConstant>) {
                check_level(m.p, "IndepConstant p");
            } else if constexpr (std::is_same_v<T, dgp::ProductOneDependent>) {
                check_level(m.p_dot, "ProductOneDependent p_dot");
            }
        },
        model);
}

std::vector<double> marginal_probabilities(const Dgp& model, std::size_t n) {
    return std::visit(
        [n](const auto& m) -> std::vector<double> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, dgp::IndepConstant>) {
                return std::vector<double>(n, m.p);
            } else if constexpr (std::is_same_v<T, dgp::IndepPath>) {
                return m.path.sample(n);
            } else {
                return std::vector<double>(n, m.p_dot * m.p_dot);
            }
        },
        model);
}

BinarySeries simulate_series(const Dgp& model, std::size_t n, CounterRng& rng) {
    validate(model);
    std::vector<std::uint8_t> bits(n);
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, dgp::IndepConstant>) {
                for (auto& b : bits) b = rng.bernoulli(m.p) ? 1 : 0;
            } else if constexpr (std::is_same_v<T, dgp::IndepPath>) {
                for (std::size_t t = 1; t <= n; ++t) {
                    const double g = m.path(static_cast<double>(t) / static_cast<double>(n));
                    bits[t - 1] = rng.bernoulli(g) ? 1 : 0;
                }
            } else {
                std::uint8_t prev = rng.bernoulli(m.p_dot) ? 1 : 0;  // b_0
                for (auto& b : bits) {
                    const std::uint8_t cur = rng.bernoulli(m.p_dot) ? 1 : 0;
                    b = static_cast<std::uint8_t>(cur & prev);
                    prev = cur;
                }
            }
        },
        model);
    return BinarySeries(std::move(bits));
}

// ---------------------------------------------------------------------------
// Experiment runner

std::string_view to_string(TestKind kind) noexcept {
    switch (kind) {
        case TestKind::Q: return "Q";
        case TestKind::QOracle: return "QOracle";
        case TestKind::QFeasible: return "QFeasible";
    }
    return "unknown";
}

TestKind test_kind_from_string(std::string_view name) {
    if (name == "Q") return TestKind::Q;
    if (name == "QOracle") return TestKind::QOracle;
    if (name == "QFeasible") return TestKind::QFeasible;
    throw Error(ErrorKind::InvalidInput,
                "unknown test '" + std::string(name) + "' (expected Q, QOracle, QFeasible)");
}

Variant variant_of(TestKind kind) noexcept {
    switch (kind) {
        case TestKind::Q: return Variant::Stationary;
        case TestKind::QOracle: return Variant::OracleAdaptive;
        case TestKind::QFeasible: return Variant::FeasibleAdaptive;
    }
    return Variant::Stationary;
}

KernelSpec KernelChoice::resolve(std::size_t n) const {
    if (bandwidth) return KernelSpec::explicit_bandwidth(*bandwidth, family);
    return KernelSpec::rate_default(n, bandwidth_constant, family);
}

void SimulationSpec::validate() const {
    auto fail = [](const std::string& field, const std::string& msg) {
        throw Error(ErrorKind::InvalidInput, "field '" + field + "': " + msg);
    };
    try {
        illiqdep::validate(model);
    } catch (const Error& e) {
        fail("dgp", e.what());
    }
    if (replications < 1) fail("replications", "must be >= 1");
    if (n < 2) fail("n", "must be >= 2");
    if (m < 1) fail("max_lag", "must be >= 1");
    if (m >= n) fail("max_lag", "must be < n");
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha", "must lie in (0, 1)");
    if (tests.empty()) fail("tests", "at least one test is required");
    for (std::size_t lag : lag_report) {
        if (lag < 1 || lag >= n) fail("lag_report", "lags must satisfy 1 <= lag < n");
    }
    if (tests.contains(TestKind::QFeasible)) {
        try {
            (void)kernel.resolve(n);
        } catch (const Error& e) {
            fail("kernel", e.what());
        }
    }
}

std::size_t resolve_workers(std::size_t requested) {
    std::size_t workers = requested;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("ILLIQDEP_THREADS"); cap != nullptr) {
        char* end = nullptr;
        const long value = std::strtol(cap, &end, 10);
        if (end != cap && value >= 1) {
            workers = std::min(workers, static_cast<std::size_t>(value));
        }
    }
    return std::max<std::size_t>(1, workers);
}

namespace {

struct ReplicationOutcome {
    std::vector<std::uint8_t> rejected;  // per test, in spec.tests order
    std::vector<std::uint8_t> exceeded;  // per (variant, lag), variant-major
    double gap = 0.0;
    std::string error;
};

}  // namespace

SimulationResult run_experiment(const SimulationSpec& spec, std::size_t workers) {
    spec.validate();
    const auto start = std::chrono::steady_clock::now();

    const std::size_t n = spec.n;
    const std::size_t profile_lags =
        std::max(spec.m, spec.lag_report.empty()
                             ? std::size_t{0}
                             : *std::max_element(spec.lag_report.begin(), spec.lag_report.end()));
    const double critical = dist::chi2_quantile(static_cast<int>(spec.m), 1.0 - spec.alpha);
    const std::vector<TestKind> tests(spec.tests.begin(), spec.tests.end());
    const bool want_gap =
        spec.tests.contains(TestKind::QOracle) && spec.tests.contains(TestKind::QFeasible);

    std::optional<OracleProbabilities> oracle;
    if (spec.tests.contains(TestKind::QOracle)) {
        oracle.emplace(marginal_probabilities(spec.model, n));
    }
    std::optional<KernelSpec> kernel;
    if (spec.tests.contains(TestKind::QFeasible)) kernel = spec.kernel.resolve(n);

    auto replicate = [&](std::size_t r) {
        ReplicationOutcome out;
        CounterRng rng = CounterRng::substream(spec.seed, r);
        const BinarySeries series = simulate_series(spec.model, n, rng);

        std::vector<DependenceProfile> profiles;
        profiles.reserve(tests.size());
        for (TestKind kind : tests) {
            switch (kind) {
                case TestKind::Q:
                    profiles.push_back(dependence_profile_stationary(series, profile_lags));
                    break;
                case TestKind::QOracle:
                    profiles.push_back(profile_oracle(series, *oracle, profile_lags));
                    break;
                case TestKind::QFeasible:
                    profiles.push_back(profile_feasible(
                        series, estimate_probability(series, *kernel), profile_lags));
                    break;
            }
        }
        for (const auto& profile : profiles) {
            out.rejected.push_back(chi2_reject(profile, spec.m, critical) ? 1 : 0);
            for (std::size_t lag : spec.lag_report) {
                out.exceeded.push_back(profile.exceeds(lag, kBandZ) ? 1 : 0);
            }
        }
        if (want_gap) {
            const auto& oracle_profile =
                profiles[std::distance(tests.begin(),
                                       std::find(tests.begin(), tests.end(), TestKind::QOracle))];
            const auto& feasible_profile = profiles[std::distance(
                tests.begin(), std::find(tests.begin(), tests.end(), TestKind::QFeasible))];
            double worst = 0.0;
            for (std::size_t k = 0; k < spec.m; ++k) {
                worst = std::max(worst, std::abs(oracle_profile.components[k] -
                                                 feasible_profile.components[k]));
            }
            out.gap = std::sqrt(static_cast<double>(n)) * worst;
        }
        return out;
    };

    std::vector<ReplicationOutcome> outcomes(spec.replications);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t r = next.fetch_add(1); r < spec.replications; r = next.fetch_add(1)) {
            try {
                outcomes[r] = replicate(r);
            } catch (const std::exception& e) {
                outcomes[r].error = e.what();
            }
        }
    };
    workers = std::clamp<std::size_t>(workers, 1, spec.replications);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    for (std::size_t r = 0; r < spec.replications; ++r) {
        if (!outcomes[r].error.empty()) {
            throw Error(ErrorKind::DegenerateSeries,
                        "replication " + std::to_string(r) + " failed: " + outcomes[r].error, r);
        }
    }

    SimulationResult result;
    result.n = n;
    result.replications = spec.replications;
    result.seed = spec.seed;
    result.lag_report = spec.lag_report;
    const double scale = 100.0 / static_cast<double>(spec.replications);
    const std::size_t lags = spec.lag_report.size();
    for (std::size_t i = 0; i < tests.size(); ++i) {
        std::size_t rejections = 0;
        std::vector<std::size_t> exceed(lags, 0);
        for (const auto& o : outcomes) {
            rejections += o.rejected[i];
            for (std::size_t j = 0; j < lags; ++j) exceed[j] += o.exceeded[i * lags + j];
        }
        result.rejection_percent[tests[i]] = scale * static_cast<double>(rejections);
        if (lags > 0) {
            auto& row = result.exceedance_percent[variant_of(tests[i])];
            for (std::size_t count : exceed) row.push_back(scale * static_cast<double>(count));
        }
    }
    if (want_gap) {
        std::vector<double> gaps;
        gaps.reserve(outcomes.size());
        for (const auto& o : outcomes) gaps.push_back(o.gap);
        std::sort(gaps.begin(), gaps.end());
        const std::size_t mid = gaps.size() / 2;
        result.oracle_feasible_gap_median =
            gaps.size() % 2 == 1 ? gaps[mid] : 0.5 * (gaps[mid - 1] + gaps[mid]);
    }
    result.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<SimulationResult> run_study(const StudySpec& study, std::size_t workers) {
    if (study.sample_sizes.empty()) {
        throw Error(ErrorKind::InvalidInput, "field 'n': at least one sample size is required");
    }
    std::vector<SimulationResult> results;
    results.reserve(study.sample_sizes.size());
    for (std::size_t n : study.sample_sizes) {
        SimulationSpec spec = study.base;
        spec.n = n;
        results.push_back(run_experiment(spec, workers));
    }
    return results;
}

namespace {

std::string format_cell(double v, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%*.2f", width, v);
    return buf;
}

std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::string test_label(TestKind kind) {
    switch (kind) {
        case TestKind::Q: return "Q_m";
        case TestKind::QOracle: return "Qbar_m";
        case TestKind::QFeasible: return "Qcheck_m";
    }
    return "?";
}

std::string variant_label(Variant v) {
    switch (v) {
        case Variant::Stationary: return "Ahat_m";
        case Variant::OracleAdaptive: return "Abar_m";
        case Variant::FeasibleAdaptive: return "Acheck_m";
    }
    return "?";
}

}  // namespace

std::string render_table(const StudySpec& study, const std::vector<SimulationResult>& results) {
    constexpr int cell = 9;
    constexpr std::size_t label = 12;
    std::string out;
    if (!study.name.empty()) out += study.name + "\n";
    char head[128];
    std::snprintf(head, sizeof head, "rejection frequency (%%), m=%zu, alpha=%.3g, N=%zu\n",
                  study.base.m, study.base.alpha, study.base.replications);
    out += head;
    out += pad("n", label);
    for (const auto& r : results) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%*zu", cell, r.n);
        out += buf;
    }
    out += "\n";
    for (TestKind kind : study.base.tests) {
        out += pad(test_label(kind), label);
        for (const auto& r : results) out += format_cell(r.rejection_percent.at(kind), cell);
        out += "\n";
    }

    if (!study.base.lag_report.empty()) {
        out += "\nband exceedance frequency (%), 95% bounds\n";
        out += pad("n", 8) + pad("h", label);
        for (std::size_t lag : study.base.lag_report) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%*zu", cell, lag);
            out += buf;
        }
        out += "\n";
        for (const auto& r : results) {
            for (const auto& [variant, row] : r.exceedance_percent) {
                out += pad(std::to_string(r.n), 8) + pad(variant_label(variant), label);
                for (double v : row) out += format_cell(v, cell);
                out += "\n";
            }
        }
    }
    return out;
}

}  // namespace illiqdep
