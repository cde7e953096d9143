#include "revtri/scenario.hpp"

#include "revtri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

namespace revtri {

using nlohmann::json;

namespace {

// ---- strict JSON helpers ---------------------------------------------------

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw InputError(where + ": unknown field '" + key + "'");
        }
    }
}

const json& required(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
    return *it;
}

double as_double(const json& v, const std::string& where) {
    if (!v.is_number()) throw InputError(where + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw InputError(where + ": expected a finite number");
    return x;
}

double get_double(const json& obj, const char* key, const std::string& where) {
    return as_double(required(obj, key, where), where + "." + key);
}

std::optional<double> opt_double(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    return as_double(*it, where + "." + key);
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
    const auto& v = required(obj, key, where);
    if (!v.is_string()) throw InputError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

std::size_t as_count(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError(where + ": expected a nonnegative integer");
    }
    return v.get<std::size_t>();
}

// ---- value parsers ---------------------------------------------------------

ComplexVector parse_vector(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw InputError(where + ": expected a nonempty array");
    std::vector<Scalar> coords;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& c = v[k];
        const auto at = where + "[" + std::to_string(k) + "]";
        if (c.is_number()) {
            coords.emplace_back(as_double(c, at), 0.0);
        } else if (c.is_array() && c.size() == 2) {
            coords.emplace_back(as_double(c[0], at), as_double(c[1], at));
        } else {
            throw InputError(at + ": expected a number or a [re, im] pair");
        }
    }
    return ComplexVector(std::move(coords));
}

ProfileTerm parse_term(const json& v, const std::string& where) {
    if (v.is_number()) return Profile::constant(as_double(v, where)).terms().front();
    const auto kind = profile_kind_from_string(get_string(v, "kind", where));
    ProfileTerm t;
    t.kind = kind;
    using K = ProfileTerm::Kind;
    switch (kind) {
    case K::zero: check_keys(v, {"kind"}, where); break;
    case K::constant:
        check_keys(v, {"kind", "value"}, where);
        t.c0 = get_double(v, "value", where);
        break;
    case K::linear:
        check_keys(v, {"kind", "intercept", "slope"}, where);
        t.c0 = opt_double(v, "intercept", where).value_or(0.0);
        t.slope = get_double(v, "slope", where);
        break;
    case K::sine:
    case K::cosine:
        check_keys(v, {"kind", "amplitude", "frequency", "phase"}, where);
        t.amplitude = opt_double(v, "amplitude", where).value_or(1.0);
        t.frequency = opt_double(v, "frequency", where).value_or(1.0);
        t.phase = opt_double(v, "phase", where).value_or(0.0);
        break;
    case K::polynomial: {
        check_keys(v, {"kind", "coefficients"}, where);
        const auto& c = required(v, "coefficients", where);
        if (!c.is_array()) throw InputError(where + ".coefficients: expected an array");
        for (const auto& x : c) t.coefficients.push_back(as_double(x, where + ".coefficients"));
        break;
    }
    case K::exp:
        check_keys(v, {"kind", "amplitude", "rate"}, where);
        t.amplitude = opt_double(v, "amplitude", where).value_or(1.0);
        t.rate = get_double(v, "rate", where);
        break;
    case K::step:
        check_keys(v, {"kind", "at", "left", "right"}, where);
        t.at = get_double(v, "at", where);
        t.left = get_double(v, "left", where);
        t.right = get_double(v, "right", where);
        break;
    }
    return t;
}

/// A profile is a term object, a number (constant), or an array of terms summed.
Profile parse_profile(const json& v, const std::string& where) {
    if (v.is_array()) {
        if (v.empty()) throw InputError(where + ": empty profile");
        std::vector<ProfileTerm> terms;
        for (std::size_t k = 0; k < v.size(); ++k) terms.push_back(parse_term(v[k], where + "[" + std::to_string(k) + "]"));
        return Profile(std::move(terms));
    }
    return Profile({parse_term(v, where)});
}

FamilySpec parse_family(const json& v) {
    const std::string where = "family";
    const auto kind = get_string(v, "kind", where);
    if (kind == "constant") {
        check_keys(v, {"kind", "value"}, where);
        return ConstantFamily{parse_vector(required(v, "value", where), where + ".value")};
    }
    if (kind == "vector") {
        check_keys(v, {"kind", "components"}, where);
        const auto& comps = required(v, "components", where);
        if (!comps.is_array() || comps.empty()) throw InputError(where + ".components: expected a nonempty array");
        VectorFamily fam;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            const auto at = where + ".components[" + std::to_string(k) + "]";
            const auto& c = comps[k];
            if (c.is_object() && !c.contains("kind")) {
                check_keys(c, {"re", "im"}, at);
                ComponentProfiles cp{parse_profile(required(c, "re", at), at + ".re")};
                if (c.contains("im")) cp.im = parse_profile(c["im"], at + ".im");
                fam.components.push_back(std::move(cp));
            } else {
                fam.components.push_back({parse_profile(c, at)});
            }
        }
        return fam;
    }
    if (kind == "scalar-multiple") {
        check_keys(v, {"kind", "phi", "e"}, where);
        return ScalarMultipleFamily{parse_profile(required(v, "phi", where), where + ".phi"),
                                    parse_vector(required(v, "e", where), where + ".e")};
    }
    if (kind == "ball") {
        check_keys(v, {"kind", "e", "rho", "u", "modulation"}, where);
        BallFamilySpec spec{parse_vector(required(v, "e", where), where + ".e"), get_double(v, "rho", where),
                            parse_vector(required(v, "u", where), where + ".u"),
                            v.contains("modulation") ? parse_profile(v["modulation"], where + ".modulation")
                                                     : Profile::zero()};
        return BallFamily{std::move(spec)};
    }
    if (kind == "lagrange") {
        check_keys(v, {"kind", "psi", "theta", "Theta", "direction"}, where);
        LagrangeFamilyDecl decl{parse_profile(required(v, "psi", where), where + ".psi"),
                                get_double(v, "theta", where), get_double(v, "Theta", where)};
        if (v.contains("direction")) decl.direction = parse_vector(v["direction"], where + ".direction");
        return decl;
    }
    throw InputError(where + ": unknown family kind '" + kind + "'");
}

HypothesisDecl parse_hypothesis(const json& v, const std::string& where) {
    check_keys(v, {"kind", "K", "rho", "m", "M", "gamma", "Gamma", "theta", "e", "k", "r"}, where);
    HypothesisDecl d;
    d.kind = hypothesis_kind_from_string(get_string(v, "kind", where));
    if (d.kind == HypothesisKind::kernel_upper || d.kind == HypothesisKind::kernel_lower) {
        throw InputError(where + ": kernel domination is checked through the quadratic-kernel inequality");
    }
    d.K = opt_double(v, "K", where);
    d.rho = opt_double(v, "rho", where);
    d.m = opt_double(v, "m", where);
    d.M = opt_double(v, "M", where);
    d.gamma = opt_double(v, "gamma", where);
    d.Gamma = opt_double(v, "Gamma", where);
    d.theta = opt_double(v, "theta", where);
    if (v.contains("e")) d.e = parse_vector(v["e"], where + ".e");
    if (v.contains("k")) d.profile = parse_profile(v["k"], where + ".k");
    if (v.contains("r")) d.profile = parse_profile(v["r"], where + ".r");
    return d;
}

KernelSpec parse_kernel(const json& v, const std::string& where) {
    check_keys(v, {"kind", "scale", "m", "M", "value", "profile"}, where);
    KernelSpec k;
    k.kind = kernel_kind_from_string(get_string(v, "kind", where));
    k.scale = opt_double(v, "scale", where).value_or(1.0);
    k.m = opt_double(v, "m", where).value_or(1.0);
    k.M = opt_double(v, "M", where).value_or(1.0);
    k.value = opt_double(v, "value", where).value_or(0.0);
    if (k.kind == KernelSpec::Kind::difference_profile) {
        k.profile = parse_profile(required(v, "profile", where), where + ".profile");
    }
    return k;
}

InequalityDecl parse_inequality(const json& v, const std::string& where) {
    check_keys(v, {"id", "K", "rho", "m", "M", "gamma", "Gamma", "theta", "e", "k", "r", "kernel", "mode"}, where);
    InequalityDecl d;
    d.id = get_string(v, "id", where);
    const auto& ids = inequality_ids();
    if (std::find(ids.begin(), ids.end(), d.id) == ids.end()) {
        throw InputError(where + ": unknown inequality id '" + d.id + "'");
    }
    auto& p = d.overrides;
    p.K = opt_double(v, "K", where);
    p.rho = opt_double(v, "rho", where);
    p.m = opt_double(v, "m", where);
    p.M = opt_double(v, "M", where);
    p.gamma = opt_double(v, "gamma", where);
    p.Gamma = opt_double(v, "Gamma", where);
    p.theta = opt_double(v, "theta", where);
    if (v.contains("e")) p.e = parse_vector(v["e"], where + ".e");
    if (v.contains("k")) d.k = parse_profile(v["k"], where + ".k");
    if (v.contains("r")) d.r = parse_profile(v["r"], where + ".r");
    if (v.contains("kernel")) p.kernel = parse_kernel(v["kernel"], where + ".kernel");
    if (v.contains("mode")) {
        const auto mode = get_string(v, "mode", where);
        if (mode == "upper") p.mode = KernelMode::upper;
        else if (mode == "lower") p.mode = KernelMode::lower;
        else throw InputError(where + ".mode: expected 'upper' or 'lower'");
    }
    return d;
}

SearchSpec parse_search(const json& v, double a, double b) {
    const std::string where = "search";
    check_keys(v, {"family", "free", "fixed", "inequality", "budget", "seed", "restarts", "shrinks"}, where);
    SearchSpec s;
    s.family = search_family_from_string(get_string(v, "family", where));
    s.inequality_id = get_string(v, "inequality", where);
    s.a = a;
    s.b = b;
    if (v.contains("free")) {
        const auto& free = v["free"];
        if (!free.is_object()) throw InputError(where + ".free: expected an object");
        for (const auto& [name, range] : free.items()) {
            const auto at = where + ".free." + name;
            if (!range.is_array() || range.size() != 2) throw InputError(at + ": expected [lo, hi]");
            s.free_params[name] = ParamRange{as_double(range[0], at), as_double(range[1], at)};
        }
    }
    if (v.contains("fixed")) {
        const auto& fixed = v["fixed"];
        if (!fixed.is_object()) throw InputError(where + ".fixed: expected an object");
        for (const auto& [name, value] : fixed.items()) s.fixed_params[name] = as_double(value, where + ".fixed." + name);
    }
    if (v.contains("budget")) s.budget = as_count(v["budget"], where + ".budget");
    if (v.contains("seed")) s.seed = as_count(v["seed"], where + ".seed");
    if (v.contains("restarts")) s.restarts = as_count(v["restarts"], where + ".restarts");
    if (v.contains("shrinks")) s.shrinks = as_count(v["shrinks"], where + ".shrinks");
    s.validate();
    return s;
}

// ---- running ----------------------------------------------------------------

template <class T>
void fill(std::optional<T>& slot, const std::optional<T>& value) {
    if (value) slot = value;
}

HypothesisSpec resolve_hypothesis(const HypothesisDecl& d, const FamilyInstance& fam) {
    HypothesisSpec s;
    s.kind = d.kind;
    s.K = d.K;
    s.rho = d.rho;
    s.m = d.m;
    s.M = d.M;
    s.gamma = d.gamma;
    s.Gamma = d.Gamma;
    s.theta = d.theta;
    s.e = d.e;
    // Parameters the family implies fill the gaps.
    const auto& p = fam.params;
    if (!s.e) s.e = p.e;
    if (!s.rho) s.rho = p.rho;
    if (!s.m) s.m = p.m;
    if (!s.M) s.M = p.M;
    if (!s.gamma) s.gamma = p.gamma;
    if (!s.Gamma) s.Gamma = p.Gamma;
    if (d.profile) s.profile = sample_profile(*d.profile, fam.f.grid());
    if ((s.kind == HypothesisKind::ball_r_of_t || s.kind == HypothesisKind::additive_k_of_t) && !d.profile) {
        throw InputError(std::string(to_string(s.kind)) + ": missing profile");
    }
    return s;
}

InequalityParams resolve_inequality(const InequalityDecl& d, const FamilyInstance& fam) {
    InequalityParams p = fam.params;
    const auto& o = d.overrides;
    fill(p.K, o.K);
    fill(p.rho, o.rho);
    fill(p.m, o.m);
    fill(p.M, o.M);
    fill(p.gamma, o.gamma);
    fill(p.Gamma, o.Gamma);
    fill(p.theta, o.theta);
    fill(p.e, o.e);
    fill(p.kernel, o.kernel);
    p.mode = o.mode;
    if (d.k) p.k_nodes = sample_profile(*d.k, fam.f.grid());
    if (d.r) p.r_nodes = sample_profile(*d.r, fam.f.grid());
    return p;
}

int code_for(Status s) {
    switch (s) {
    case Status::satisfied: return kExitOk;
    case Status::violated: return kExitViolated;
    case Status::hypothesis_unmet: return kExitHypothesisUnmet;
    }
    return kExitOk;
}

} // namespace

std::string_view to_string(Status status) {
    switch (status) {
    case Status::satisfied: return "satisfied";
    case Status::violated: return "violated";
    case Status::hypothesis_unmet: return "hypothesis-unmet";
    }
    return "satisfied";
}

FamilyInstance build_family(const FamilySpec& family, const Grid& grid) {
    InequalityParams derived;
    if (const auto* c = std::get_if<ConstantFamily>(&family)) {
        return {sample([&](double) { return c->value; }, grid), derived};
    }
    if (const auto* v = std::get_if<VectorFamily>(&family)) {
        return {sample(component_evaluator(v->components), grid), derived};
    }
    if (const auto* s = std::get_if<ScalarMultipleFamily>(&family)) {
        derived.e = s->e;
        return {sample(scalar_multiple_evaluator(s->phi, s->e), grid), derived};
    }
    if (const auto* ball = std::get_if<BallFamily>(&family)) {
        derived.e = ball->spec.e;
        derived.rho = ball->spec.rho;
        return {make_ball_family(ball->spec, grid.a(), grid.b(), grid.intervals()), derived};
    }
    const auto& l = std::get<LagrangeFamilyDecl>(family);
    auto fam = make_lagrange_family({l.psi, l.theta, l.Theta, grid.a(), grid.b(), l.direction}, grid.intervals());
    derived.gamma = fam.gamma;
    derived.Gamma = fam.Gamma;
    derived.m = fam.gamma;
    derived.M = fam.Gamma;
    return {std::move(fam.f), derived};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

Scenario parse_scenario(const json& doc) {
    check_keys(doc, {"schema_version", "name", "description", "interval", "grid", "family", "hypotheses",
                     "inequalities", "tolerances", "search", "sweep", "output"},
               "scenario");
    Scenario s;
    const auto& version = required(doc, "schema_version", "scenario");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
        throw InputError("scenario: schema_version must be 1");
    }
    if (doc.contains("name")) s.name = get_string(doc, "name", "scenario");

    const auto& interval = required(doc, "interval", "scenario");
    check_keys(interval, {"a", "b"}, "interval");
    s.a = get_double(interval, "a", "interval");
    s.b = get_double(interval, "b", "interval");
    if (!(s.a < s.b)) throw InputError("interval: require a < b");

    if (doc.contains("grid")) {
        const auto& g = doc["grid"];
        check_keys(g, {"N", "rule"}, "grid");
        if (g.contains("N")) s.quad.intervals = as_count(g["N"], "grid.N");
        if (g.contains("rule")) s.quad.rule = quadrature_rule_from_string(get_string(g, "rule", "grid"));
    }
    if (s.quad.intervals < 2 || s.quad.intervals % 2 != 0) throw InputError("grid.N must be even and >= 2");

    if (doc.contains("family")) s.family = parse_family(doc["family"]);
    if (doc.contains("hypotheses")) {
        const auto& hs = doc["hypotheses"];
        if (!hs.is_array()) throw InputError("hypotheses: expected an array");
        for (std::size_t k = 0; k < hs.size(); ++k) {
            s.hypotheses.push_back(parse_hypothesis(hs[k], "hypotheses[" + std::to_string(k) + "]"));
        }
    }
    if (doc.contains("inequalities")) {
        const auto& is = doc["inequalities"];
        if (!is.is_array()) throw InputError("inequalities: expected an array");
        for (std::size_t k = 0; k < is.size(); ++k) {
            s.inequalities.push_back(parse_inequality(is[k], "inequalities[" + std::to_string(k) + "]"));
        }
    }
    if (doc.contains("tolerances")) {
        const auto& t = doc["tolerances"];
        check_keys(t, {"tol_hyp", "tol_ineq"}, "tolerances");
        if (auto v = opt_double(t, "tol_hyp", "tolerances")) s.tol.hyp = *v;
        if (auto v = opt_double(t, "tol_ineq", "tolerances")) s.tol.ineq_abs = s.tol.ineq_rel = *v;
        if (s.tol.hyp < 0.0 || s.tol.ineq_abs < 0.0) throw InputError("tolerances must be nonnegative");
    }
    if (doc.contains("search")) s.search = parse_search(doc["search"], s.a, s.b);
    if (doc.contains("output")) {
        const auto& o = doc["output"];
        check_keys(o, {"format", "path"}, "output");
        if (o.contains("format")) {
            const auto f = get_string(o, "format", "output");
            if (f == "json") s.format = OutputFormat::json;
            else if (f == "csv") s.format = OutputFormat::csv;
            else throw InputError("output.format: expected 'json' or 'csv'");
        }
        if (o.contains("path")) s.output_path = get_string(o, "path", "output");
    }
    if (s.inequalities.empty() && !s.search) {
        throw InputError("scenario: at least one inequality or a search entry is required");
    }
    if ((!s.inequalities.empty() || !s.hypotheses.empty()) && !s.family) {
        throw InputError("scenario: inequalities and hypotheses need a family");
    }
    return s;
}

SweepDecl parse_sweep(const json& doc) {
    if (!doc.is_object() || !doc.contains("sweep")) throw InputError("sweep: scenario declares no sweep");
    const auto& v = doc["sweep"];
    check_keys(v, {"parameter", "values", "range"}, "sweep");
    const auto& param = required(v, "parameter", "sweep");
    if (!param.is_string()) throw InputError("sweep.parameter: exactly one parameter name is allowed");
    SweepDecl d;
    std::stringstream names(param.get<std::string>());
    for (std::string part; std::getline(names, part, '=');) {
        if (part.empty()) throw InputError("sweep.parameter: empty name");
        d.targets.push_back(part);
    }
    if (d.targets.empty()) throw InputError("sweep.parameter: empty name");
    if (v.contains("values") == v.contains("range")) throw InputError("sweep: give exactly one of values, range");
    if (v.contains("values")) {
        const auto& vals = v["values"];
        if (!vals.is_array()) throw InputError("sweep.values: expected an array");
        for (const auto& x : vals) d.values.push_back(as_double(x, "sweep.values"));
    } else {
        const auto& r = v["range"];
        check_keys(r, {"from", "to", "count"}, "sweep.range");
        const double from = get_double(r, "from", "sweep.range"), to = get_double(r, "to", "sweep.range");
        const auto count = as_count(required(r, "count", "sweep.range"), "sweep.range.count");
        for (std::size_t k = 0; k < count; ++k) {
            d.values.push_back(count == 1 ? from : from + (to - from) * static_cast<double>(k) / static_cast<double>(count - 1));
        }
    }
    if (d.values.empty()) throw InputError("sweep: empty range");
    std::sort(d.values.begin(), d.values.end());
    return d;
}

json substitute_sweep_value(const json& doc, const SweepDecl& sweep, double value) {
    json out = doc;
    out.erase("sweep");
    std::set<std::string> hit;
    const auto patch = [&](json& obj) {
        if (!obj.is_object()) return;
        for (const auto& name : sweep.targets) {
            if (obj.contains(name)) {
                obj[name] = value;
                hit.insert(name);
            }
        }
    };
    if (out.contains("family")) patch(out["family"]);
    for (const char* list : {"hypotheses", "inequalities"}) {
        if (out.contains(list) && out[list].is_array()) {
            for (auto& item : out[list]) patch(item);
        }
    }
    if (out.contains("search") && out["search"].contains("fixed")) patch(out["search"]["fixed"]);
    for (const auto& name : sweep.targets) {
        if (!hit.count(name)) throw InputError("sweep: parameter '" + name + "' does not occur in the scenario");
    }
    return out;
}

RunResult run_scenario(const Scenario& scenario) {
    RunResult result;
    const EvalContext ctx{scenario.quad, scenario.tol};

    if (scenario.family) {
        const Grid grid(scenario.a, scenario.b, scenario.quad.intervals);
        const auto fam = build_family(*scenario.family, grid);

        for (const auto& d : scenario.hypotheses) {
            auto report = check_hypothesis(fam.f, resolve_hypothesis(d, fam), scenario.tol.hyp);
            if (!report.holds) result.exit_code = std::max<int>(result.exit_code, kExitHypothesisUnmet);
            result.hypotheses.push_back({report});
        }

        for (const auto& d : scenario.inequalities) {
            const auto params = resolve_inequality(d, fam);
            try {
                for (auto& r : evaluate_inequality(d.id, fam.f, params, ctx)) {
                    InequalityOutcome o;
                    o.id = r.id;
                    o.status = r.satisfied ? Status::satisfied : Status::violated;
                    o.report = std::move(r);
                    result.exit_code = std::max(result.exit_code, code_for(o.status));
                    result.inequalities.push_back(std::move(o));
                }
            } catch (const HypothesisUnmet& e) {
                InequalityOutcome o;
                o.id = d.id;
                o.status = Status::hypothesis_unmet;
                o.hypothesis = e.report();
                result.exit_code = std::max<int>(result.exit_code, kExitHypothesisUnmet);
                result.inequalities.push_back(std::move(o));
            }
        }
    }

    if (scenario.search) {
        try {
            result.search = maximize_relative_gap(*scenario.search, ctx);
        } catch (const SearchError& e) {
            // Nothing admissible was found; the search claims nothing.
            result.search_error = e.what();
            result.exit_code = std::max<int>(result.exit_code, kExitHypothesisUnmet);
        }
    }
    return result;
}

void apply_overrides(Scenario& s, const Overrides& o) {
    if (o.grid) {
        if (*o.grid < 2 || *o.grid % 2 != 0) throw InputError("--grid must be even and >= 2");
        s.quad.intervals = *o.grid;
    }
    if (o.tol_ineq) s.tol.ineq_abs = s.tol.ineq_rel = *o.tol_ineq;
    if (o.tol_hyp) s.tol.hyp = *o.tol_hyp;
    if (o.seed && s.search) s.search->seed = *o.seed;
    if (o.format) s.format = *o.format;
    if (o.out) s.output_path = *o.out;
}

SweepResult run_sweep(const json& doc, const Overrides& overrides) {
    SweepResult out;
    out.sweep = parse_sweep(doc);
    for (double value : out.sweep.values) {
        auto scenario = parse_scenario(substitute_sweep_value(doc, out.sweep, value));
        apply_overrides(scenario, overrides);
        auto result = run_scenario(scenario);
        out.exit_code = std::max(out.exit_code, result.exit_code);
        out.rows.push_back({value, std::move(result)});
    }
    return out;
}

Scenario demo_scenario(std::size_t intervals) {
    Scenario s;
    s.name = "demo: phi(t) = exp(-t) (1 + i) on [0, 1]";
    s.a = 0.0;
    s.b = 1.0;
    s.quad.intervals = intervals;
    // psi(u) = u, so theta = 0 <= psi' <= Theta = 1: gamma = 1, Gamma = e.
    s.family = LagrangeFamilyDecl{Profile::linear(0.0, 1.0), 0.0, 1.0, ComplexVector{Scalar{1.0, 1.0}}};
    HypothesisDecl componentwise;
    componentwise.kind = HypothesisKind::complex_componentwise;
    s.hypotheses.push_back(componentwise);
    HypothesisDecl pairwise;
    pairwise.kind = HypothesisKind::pairwise_gammaGamma;
    s.hypotheses.push_back(pairwise);
    s.inequalities.push_back({"complex-suite", {}, std::nullopt, std::nullopt});
    return s;
}

} // namespace revtri
