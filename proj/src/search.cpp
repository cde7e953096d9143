#include "revtri/search.hpp"

#include "revtri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace revtri {

namespace {

constexpr double kMinusInfinity = -std::numeric_limits<double>::infinity();

double param_or(const std::map<std::string, double>& p, const std::string& name, double fallback) {
    const auto it = p.find(name);
    return it == p.end() ? fallback : it->second;
}

void apply_overrides(InequalityParams& out, const std::map<std::string, double>& p) {
    const auto set = [&](const char* name, std::optional<double>& slot) {
        if (const auto it = p.find(name); it != p.end()) slot = it->second;
    };
    set("K", out.K);
    set("rho", out.rho);
    set("m", out.m);
    set("M", out.M);
    set("gamma", out.gamma);
    set("Gamma", out.Gamma);
    set("theta", out.theta);
}

/// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool better(double score, const std::vector<double>& x, double best_score, const std::vector<double>& best_x) {
    if (score != best_score) return score > best_score;
    return x < best_x;
}

const ComplexVector kE2{Scalar{1.0, 0.0}, Scalar{0.0, 0.0}};
const ComplexVector kU2{Scalar{0.0, 0.0}, Scalar{1.0, 0.0}};

} // namespace

std::string_view to_string(SearchFamily family) {
    switch (family) {
    case SearchFamily::ball: return "ball";
    case SearchFamily::lagrange: return "lagrange";
    case SearchFamily::constant_direction: return "constant-direction";
    }
    return "ball";
}

SearchFamily search_family_from_string(std::string_view name) {
    for (auto f : {SearchFamily::ball, SearchFamily::lagrange, SearchFamily::constant_direction}) {
        if (to_string(f) == name) return f;
    }
    throw InputError("unknown search family '" + std::string(name) + "'");
}

FamilyInstance build_search_family(SearchFamily family, const std::map<std::string, double>& params,
                                   const Grid& grid) {
    InequalityParams derived;
    switch (family) {
    case SearchFamily::ball: {
        BallFamilySpec spec{kE2, param_or(params, "rho", 0.5), kU2,
                            Profile::cosine(1.0, param_or(params, "freq", 1.0), param_or(params, "phase", 0.0))};
        auto f = make_ball_family(spec, grid.a(), grid.b(), grid.intervals());
        derived.rho = spec.rho;
        derived.e = kE2;
        apply_overrides(derived, params);
        return {std::move(f), std::move(derived)};
    }
    case SearchFamily::lagrange: {
        const double slope = param_or(params, "slope", 1.0);
        const double amp = param_or(params, "amp", 0.0);
        const double freq = param_or(params, "freq", 1.0);
        const double swing = std::abs(amp * freq);
        LagrangeFamilySpec spec{Profile::linear(0.0, slope) + Profile::sine(amp, freq),
                                std::min(0.0, slope - swing), std::max(0.0, slope + swing), grid.a(), grid.b()};
        auto fam = make_lagrange_family(spec, grid.intervals());
        derived.gamma = fam.gamma;
        derived.Gamma = fam.Gamma;
        derived.m = fam.gamma;
        derived.M = fam.Gamma;
        derived.e = ComplexVector{Scalar{1.0, 0.0}};
        apply_overrides(derived, params);
        return {std::move(fam.f), std::move(derived)};
    }
    case SearchFamily::constant_direction: {
        const double level = param_or(params, "level", 1.0);
        const double tilt = param_or(params, "tilt", 0.0);
        const double a = grid.a(), width = grid.b() - grid.a();
        auto f = sample([&](double t) { return (level + tilt * (t - a) / width) * kE2; }, grid);
        derived.e = kE2;
        derived.K = 1.0;
        apply_overrides(derived, params);
        return {std::move(f), std::move(derived)};
    }
    }
    throw InputError("unknown search family");
}

void SearchSpec::validate() const {
    for (const auto& [name, r] : free_params) {
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
            throw InputError("search: empty or invalid range for '" + name + "'");
        }
    }
    if (inequality_id.empty()) throw InputError("search: missing inequality id");
    if (!(a < b)) throw InputError("search: require a < b");
}

SearchResult maximize_relative_gap(const SearchSpec& spec, const EvalContext& ctx) {
    spec.validate();
    const Grid grid(spec.a, spec.b, ctx.quad.intervals);

    std::vector<std::string> names;
    std::vector<ParamRange> ranges;
    for (const auto& [name, r] : spec.free_params) {
        names.push_back(name);
        ranges.push_back(r);
    }

    const auto to_map = [&](const std::vector<double>& x) {
        auto p = spec.fixed_params;
        for (std::size_t k = 0; k < names.size(); ++k) p[names[k]] = x[k];
        return p;
    };

    struct Scored {
        double score = kMinusInfinity;
        std::optional<InequalityReport> report;
    };
    std::string last_failure;
    const auto score_of = [&](const std::vector<double>& x) -> Scored {
        try {
            auto inst = build_search_family(spec.family, to_map(x), grid);
            auto reports = evaluate_inequality(spec.inequality_id, inst.f, inst.params, ctx);
            return {reports.front().rel_gap, reports.front()};
        } catch (const HypothesisUnmet& e) {
            last_failure = e.what();
        } catch (const InputError& e) {
            last_failure = e.what();
        }
        return {};
    };

    std::vector<double> midpoint(names.size());
    for (std::size_t k = 0; k < names.size(); ++k) midpoint[k] = 0.5 * (ranges[k].lo + ranges[k].hi);

    SearchResult result;
    if (spec.budget == 0) {
        auto s = score_of(midpoint);
        if (!s.report) throw SearchError("search: initial point infeasible: " + last_failure);
        result.params = to_map(midpoint);
        result.report = *s.report;
        return result;
    }

    std::mt19937_64 rng(spec.seed);
    double best_score = kMinusInfinity;
    std::vector<double> best_x;
    std::optional<InequalityReport> best_report;

    const auto evaluate = [&](const std::vector<double>& x) -> std::optional<Scored> {
        if (result.evaluations >= spec.budget) return std::nullopt;
        ++result.evaluations;
        auto s = score_of(x);
        result.probes.push_back({x, s.score});
        if (s.report && (!best_report || better(s.score, x, best_score, best_x))) {
            best_score = s.score;
            best_x = x;
            best_report = s.report;
        }
        return s;
    };

    for (std::size_t restart = 0; restart < std::max<std::size_t>(spec.restarts, 1); ++restart) {
        std::vector<double> x = midpoint;
        if (restart > 0) {
            for (std::size_t k = 0; k < x.size(); ++k) {
                x[k] = ranges[k].lo + (ranges[k].hi - ranges[k].lo) * unit_uniform(rng);
            }
        }
        auto current = evaluate(x);
        if (!current) break;
        double score = current->score;

        std::vector<double> step(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) step[k] = 0.25 * (ranges[k].hi - ranges[k].lo);

        bool exhausted = false;
        for (std::size_t level = 0; level <= spec.shrinks && !exhausted; ++level) {
            bool improved = true;
            while (improved && !exhausted) {
                improved = false;
                for (std::size_t k = 0; k < x.size() && !exhausted; ++k) {
                    for (double dir : {1.0, -1.0}) {
                        auto cand = x;
                        cand[k] = std::clamp(x[k] + dir * step[k], ranges[k].lo, ranges[k].hi);
                        if (cand[k] == x[k]) continue;
                        auto s = evaluate(cand);
                        if (!s) {
                            exhausted = true;
                            break;
                        }
                        if (better(s->score, cand, score, x)) {
                            x = std::move(cand);
                            score = s->score;
                            improved = true;
                            break;
                        }
                    }
                }
            }
            for (double& h : step) h *= 0.5;
        }
        if (exhausted) break;
    }

    if (!best_report) throw SearchError("search: no admissible candidate found: " + last_failure);
    result.params = to_map(best_x);
    result.report = *best_report;
    return result;
}

std::vector<double> saturating_bound(const GridFunction& f, const ComplexVector& e) {
    std::vector<double> k(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) k[i] = std::max(0.0, f.norms()[i] - re_inner(f[i], e));
    return k;
}

Witness equality_witness(std::string_view id, const std::map<std::string, double>& params, double a, double b,
                         std::size_t intervals) {
    const Grid grid(a, b, intervals);
    const auto unit = [](double v) { return std::abs(v - 1.0) <= 1e-15; };
    const double level = param_or(params, "level", 1.0);
    if (!(level > 0.0)) throw InputError("witness: level must be positive");

    InequalityParams p;
    p.e = kE2;
    const auto constant = [&] { return sample([&](double) { return level * kE2; }, grid); };

    if (id == "multiplicative-K") {
        if (!unit(param_or(params, "K", 1.0))) throw UnsupportedError("witness: multiplicative-K needs K = 1");
        const double tilt = param_or(params, "tilt", 0.0);
        if (level + std::min(tilt, 0.0) < 0.0) throw InputError("witness: phi must stay nonnegative");
        p.K = 1.0;
        return {sample([&](double t) { return (level + tilt * (t - a) / (b - a)) * kE2; }, grid), p};
    }
    if (id == "quadratic-mM" || id == "quadratic-ratio") {
        if (!unit(param_or(params, "m", 1.0)) || !unit(param_or(params, "M", 1.0))) {
            throw UnsupportedError("witness: " + std::string(id) + " needs m = M = 1");
        }
        p.m = 1.0;
        p.M = 1.0;
        return {constant(), p};
    }
    if (id == "weighted-gamma") {
        if (!unit(param_or(params, "gamma", 1.0)) || !unit(param_or(params, "Gamma", 1.0))) {
            throw UnsupportedError("witness: weighted-gamma needs gamma = Gamma = 1");
        }
        p.gamma = 1.0;
        p.Gamma = 1.0;
        return {constant(), p};
    }
    if (id == "additive-k") {
        // cos(pi (t - a)/(b - a)) integrates to zero, so int f is a positive multiple of e.
        BallFamilySpec spec{kE2, param_or(params, "rho", 0.5), kU2,
                            Profile::cosine(1.0, std::numbers::pi / (b - a), -std::numbers::pi * a / (b - a))};
        auto f = make_ball_family(spec, a, b, intervals);
        p.k_nodes = saturating_bound(f, kE2);
        return {std::move(f), p};
    }
    throw UnsupportedError("witness: no constructive equality witness for '" + std::string(id) + "'");
}

} // namespace revtri
