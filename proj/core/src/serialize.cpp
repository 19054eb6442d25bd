#include "illiqdep/serialize.hpp"

#include <cstdio>
#include <string>

#include "illiqdep/error.hpp"

namespace illiqdep {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

[[noreturn]] void field_error(const std::string& field, const std::string& msg) {
    throw Error(ErrorKind::InvalidInput, "field '" + field + "': " + msg);
}

const Json& require(const Json& j, const std::string& field) {
    if (!j.is_object() || !j.contains(field)) field_error(field, "is required");
    return j.at(field);
}

double number(const Json& v, const std::string& field) {
    if (!v.is_number()) field_error(field, "expected a number");
    return v.get<double>();
}

std::int64_t integer(const Json& v, const std::string& field) {
    if (!v.is_number_integer()) field_error(field, "expected an integer");
    return v.get<std::int64_t>();
}

std::size_t positive_size(const Json& v, const std::string& field) {
    const auto value = integer(v, field);
    if (value < 1) field_error(field, "must be >= 1");
    return static_cast<std::size_t>(value);
}

std::string text(const Json& v, const std::string& field) {
    if (!v.is_string()) field_error(field, "expected a string");
    return v.get<std::string>();
}

template <typename Fn>
auto rethrow_as_field(const std::string& field, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        const std::string what = e.what();
        if (what.rfind("field '", 0) == 0) throw;
        field_error(field, what);
    }
}

ProbabilityPath path_from_json(const Json& j) {
    const std::string field = "dgp.path";
    if (j.is_string()) {
        if (j.get<std::string>() == "case2") return case2_path();
        field_error(field, "unknown named path '" + j.get<std::string>() + "'");
    }
    const auto kind = text(require(j, "kind"), field + ".kind");
    return rethrow_as_field(field, [&] {
        if (kind == "constant") {
            return ProbabilityPath::constant(number(require(j, "level"), field + ".level"));
        }
        if (kind == "piecewise_linear") {
            const auto& knots = require(j, "knots");
            if (!knots.is_array()) field_error(field + ".knots", "expected an array");
            std::vector<ProbabilityPath::Knot> out;
            for (const auto& k : knots) {
                if (!k.is_array() || k.size() != 2) {
                    field_error(field + ".knots", "each knot is [u, value]");
                }
                out.emplace_back(number(k[0], field + ".knots"), number(k[1], field + ".knots"));
            }
            return ProbabilityPath::piecewise_linear(std::move(out));
        }
        if (kind == "tabulated") {
            const auto& values = require(j, "values");
            if (!values.is_array()) field_error(field + ".values", "expected an array");
            std::vector<double> out;
            for (const auto& v : values) out.push_back(number(v, field + ".values"));
            return ProbabilityPath::tabulated(std::move(out));
        }
        field_error(field + ".kind", "unknown path kind '" + kind + "'");
    });
}

Json path_to_json(const ProbabilityPath& path) {
    Json j;
    j["kind"] = std::string(to_string(path.kind()));
    switch (path.kind()) {
        case ProbabilityPath::Kind::Constant: j["level"] = path.knots().front().second; break;
        case ProbabilityPath::Kind::PiecewiseLinear: {
            Json knots = Json::array();
            for (const auto& [u, g] : path.knots()) knots.push_back({u, g});
            j["knots"] = knots;
            break;
        }
        case ProbabilityPath::Kind::Tabulated: j["values"] = path.table(); break;
    }
    return j;
}

Dgp dgp_from_json(const Json& j) {
    const auto type = text(require(j, "type"), "dgp.type");
    if (type == "indep_constant") {
        return dgp::IndepConstant{number(require(j, "p"), "dgp.p")};
    }
    if (type == "indep_path") return dgp::IndepPath{path_from_json(require(j, "path"))};
    if (type == "product_one_dependent") {
        return dgp::ProductOneDependent{number(require(j, "p_dot"), "dgp.p_dot")};
    }
    field_error("dgp.type", "unknown dgp '" + type +
                                "' (expected indep_constant, indep_path, product_one_dependent)");
}

Json dgp_to_json(const Dgp& model) {
    return std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            Json j;
            if constexpr (std::is_same_v<T, dgp::IndepConstant>) {
                j["type"] = "indep_constant";
                j["p"] = m.p;
            } else if constexpr (std::is_same_v<T, dgp::IndepPath>) {
                j["type"] = "indep_path";
                j["path"] = path_to_json(m.path);
            } else {
                j["type"] = "product_one_dependent";
                j["p_dot"] = m.p_dot;
            }
            return j;
        },
        model);
}

}  // namespace

Json to_json(const DependenceProfile& profile) {
    Json j;
    j["variant"] = std::string(to_string(profile.variant));
    j["n"] = profile.n;
    j["omega"] = profile.omega;
    j["scale"] = profile.scale;
    j["bound"] = profile.bound();
    j["lags"] = profile.lags;
    j["components"] = profile.components;
    return j;
}

DependenceProfile profile_from_json(const Json& j) {
    DependenceProfile p;
    p.variant = variant_from_string(text(require(j, "variant"), "variant"));
    p.n = positive_size(require(j, "n"), "n");
    p.omega = number(require(j, "omega"), "omega");
    p.scale = number(require(j, "scale"), "scale");
    const auto& lags = require(j, "lags");
    const auto& comps = require(j, "components");
    if (!lags.is_array() || !comps.is_array() || lags.size() != comps.size()) {
        field_error("components", "lags and components must be arrays of equal length");
    }
    for (const auto& v : lags) p.lags.push_back(positive_size(v, "lags"));
    for (const auto& v : comps) p.components.push_back(number(v, "components"));
    if (!(p.omega > 0.0)) field_error("omega", "must be positive");
    if (!(p.scale > 0.0)) field_error("scale", "must be positive");
    return p;
}

Json to_json(const TestReport& report) {
    Json j;
    j["variant"] = std::string(to_string(report.variant));
    j["statistic"] = report.statistic;
    j["df"] = report.df;
    j["alpha"] = report.alpha;
    j["critical_value"] = report.critical_value;
    j["p_value"] = report.p_value;
    j["reject"] = report.reject;
    j["warnings"] = report.warnings;
    return j;
}

TestReport test_report_from_json(const Json& j) {
    TestReport r;
    r.variant = variant_from_string(text(require(j, "variant"), "variant"));
    r.statistic = number(require(j, "statistic"), "statistic");
    r.df = static_cast<int>(positive_size(require(j, "df"), "df"));
    r.alpha = number(require(j, "alpha"), "alpha");
    r.critical_value = number(require(j, "critical_value"), "critical_value");
    r.p_value = number(require(j, "p_value"), "p_value");
    const auto& reject = require(j, "reject");
    if (!reject.is_boolean()) field_error("reject", "expected a boolean");
    r.reject = reject.get<bool>();
    if (j.contains("warnings")) {
        for (const auto& w : j.at("warnings")) r.warnings.push_back(text(w, "warnings"));
    }
    return r;
}

Json to_json(const KernelSpec& spec) {
    Json j;
    j["family"] = std::string(to_string(spec.family));
    j["bandwidth"] = spec.bandwidth;
    j["bandwidth_rule"] = std::string(to_string(spec.rule));
    return j;
}

Json summary_json(const ProbabilityEstimate& estimate) {
    Json j = to_json(estimate.spec);
    j["clip_count"] = estimate.clip_count();
    return j;
}

Json to_json(const CusumTrajectory& trajectory) {
    Json j;
    j["h"] = trajectory.h;
    j["sup_abs"] = trajectory.sup_abs;
    j["u"] = trajectory.u_grid;
    j["values"] = trajectory.values;
    return j;
}

void write_profile_csv(std::ostream& out, const DependenceProfile& profile) {
    const double b = profile.bound();
    out << "lag,component,lower_bound,upper_bound\n";
    for (std::size_t k = 0; k < profile.lags.size(); ++k) {
        out << profile.lags[k] << ',' << fmt(profile.components[k]) << ',' << fmt(-b) << ','
            << fmt(b) << '\n';
    }
}

void write_estimate_csv(std::ostream& out, const ProbabilityEstimate& estimate) {
    out << "t,p_hat,clipped\n";
    for (std::size_t t = 0; t < estimate.size(); ++t) {
        out << (t + 1) << ',' << fmt(estimate.p_hat[t]) << ','
            << static_cast<int>(estimate.clipped[t]) << '\n';
    }
}

void write_cusum_csv(std::ostream& out, const CusumTrajectory& trajectory) {
    out << "u,value\n";
    for (std::size_t k = 0; k < trajectory.u_grid.size(); ++k) {
        out << fmt(trajectory.u_grid[k]) << ',' << fmt(trajectory.values[k]) << '\n';
    }
}

StudySpec study_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "config must be a JSON object");
    StudySpec study;
    if (j.contains("name")) study.name = text(j.at("name"), "name");
    SimulationSpec& spec = study.base;
    spec.model = dgp_from_json(require(j, "dgp"));

    const auto& n = require(j, "n");
    if (n.is_array()) {
        if (n.empty()) field_error("n", "at least one sample size is required");
        for (const auto& v : n) study.sample_sizes.push_back(positive_size(v, "n"));
    } else {
        study.sample_sizes.push_back(positive_size(n, "n"));
    }
    if (j.contains("replications")) {
        spec.replications = positive_size(j.at("replications"), "replications");
    }
    if (j.contains("max_lag")) spec.m = positive_size(j.at("max_lag"), "max_lag");
    if (j.contains("alpha")) spec.alpha = number(j.at("alpha"), "alpha");
    if (j.contains("seed")) {
        const auto& seed = j.at("seed");
        if (!seed.is_number_integer()) field_error("seed", "expected an integer");
        spec.seed = seed.is_number_unsigned() ? seed.get<std::uint64_t>()
                                              : static_cast<std::uint64_t>(seed.get<std::int64_t>());
    }
    if (j.contains("tests")) {
        const auto& tests = j.at("tests");
        if (!tests.is_array()) field_error("tests", "expected an array");
        spec.tests.clear();
        for (const auto& t : tests) {
            const auto name = text(t, "tests");
            rethrow_as_field("tests", [&] { return spec.tests.insert(test_kind_from_string(name)); });
        }
    }
    if (j.contains("lag_report")) {
        const auto& lags = j.at("lag_report");
        if (!lags.is_array()) field_error("lag_report", "expected an array");
        for (const auto& v : lags) spec.lag_report.push_back(positive_size(v, "lag_report"));
    }
    if (j.contains("kernel")) {
        const auto& k = j.at("kernel");
        if (!k.is_object()) field_error("kernel", "expected an object");
        if (k.contains("family")) {
            const auto name = text(k.at("family"), "kernel.family");
            spec.kernel.family =
                rethrow_as_field("kernel.family", [&] { return kernel_family_from_string(name); });
        }
        if (k.contains("bandwidth_constant")) {
            spec.kernel.bandwidth_constant =
                number(k.at("bandwidth_constant"), "kernel.bandwidth_constant");
        }
        if (k.contains("bandwidth")) spec.kernel.bandwidth = number(k.at("bandwidth"), "kernel.bandwidth");
    }

    for (std::size_t size : study.sample_sizes) {
        SimulationSpec check = spec;
        check.n = size;
        check.validate();
    }
    return study;
}

Json to_json(const StudySpec& study) {
    const auto& spec = study.base;
    Json j;
    j["name"] = study.name;
    j["dgp"] = dgp_to_json(spec.model);
    j["n"] = study.sample_sizes;
    j["replications"] = spec.replications;
    j["max_lag"] = spec.m;
    j["alpha"] = spec.alpha;
    j["seed"] = spec.seed;
    Json tests = Json::array();
    for (TestKind t : spec.tests) tests.push_back(std::string(to_string(t)));
    j["tests"] = tests;
    j["lag_report"] = spec.lag_report;
    Json kernel;
    kernel["family"] = std::string(to_string(spec.kernel.family));
    kernel["bandwidth_constant"] = spec.kernel.bandwidth_constant;
    if (spec.kernel.bandwidth) kernel["bandwidth"] = *spec.kernel.bandwidth;
    j["kernel"] = kernel;
    return j;
}

Json to_json(const SimulationResult& result, bool include_runtime) {
    Json j;
    j["n"] = result.n;
    j["replications"] = result.replications;
    j["seed"] = result.seed;
    Json rejection;
    for (const auto& [kind, pct] : result.rejection_percent) {
        rejection[std::string(to_string(kind))] = pct;
    }
    j["rejection_percent"] = rejection;
    j["lag_report"] = result.lag_report;
    Json exceed = Json::object();
    for (const auto& [variant, row] : result.exceedance_percent) {
        exceed[std::string(to_string(variant))] = row;
    }
    j["exceedance_percent"] = exceed;
    if (result.oracle_feasible_gap_median) {
        j["oracle_feasible_gap_median"] = *result.oracle_feasible_gap_median;
    }
    if (include_runtime) j["runtime_seconds"] = result.runtime_seconds;
    return j;
}

Json study_result_json(const StudySpec& study, const std::vector<SimulationResult>& results,
                       bool include_runtime) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["spec"] = to_json(study);
    Json rows = Json::array();
    for (const auto& r : results) rows.push_back(to_json(r, include_runtime));
    j["results"] = rows;
    return j;
}

}  // namespace illiqdep
