#include "revtri/inequality.hpp"

#include "revtri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace revtri {

namespace {

constexpr double kRelGapFloor = 1e-300;

void require_hypothesis(const std::string& id, const HypothesisReport& report) {
    if (!report.holds) throw HypothesisUnmet(id, report);
}

double max_over_pairs(const GridFunction& f, const PairKernel& g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i; j < f.size(); ++j) worst = std::max(worst, std::abs(g(i, j)));
    }
    return worst;
}

double residual_to_direction(const ComplexVector& integral, double coefficient, const ComplexVector& e) {
    return norm(integral - coefficient * e);
}

void require_e(const ComplexVector& e, const GridFunction& f) {
    if (!is_unit(e)) throw InputError("e must be a unit vector");
    if (e.dim() != f.dim()) throw InputError("e has the wrong dimension");
}

void require_mM(double m, double M) {
    if (!std::isfinite(m) || !std::isfinite(M) || !(M >= 1.0 && 1.0 >= m && m >= 0.0)) {
        throw InputError("require M >= 1 >= m >= 0");
    }
}

double need(const std::optional<double>& v, const char* name, std::string_view id) {
    if (!v) throw InputError(std::string(id) + ": missing parameter " + name);
    return *v;
}

const ComplexVector& need_e(const InequalityParams& p, std::string_view id) {
    if (!p.e) throw InputError(std::string(id) + ": missing unit vector e");
    return *p.e;
}

} // namespace

HypothesisUnmet::HypothesisUnmet(std::string inequality_id, HypothesisReport report)
    : std::runtime_error(inequality_id + ": hypothesis " + std::string(to_string(report.kind)) +
                         " unmet (worst margin " + std::to_string(report.worst_margin) + ")"),
      id_(std::move(inequality_id)),
      report_(report) {}

InequalityReport make_report(std::string id, double lhs, double rhs, const Tolerances& tol) {
    InequalityReport r;
    r.id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_gap = rhs - lhs;
    r.rel_gap = r.abs_gap / std::max(std::abs(rhs), kRelGapFloor);
    r.satisfied = r.abs_gap >= -(tol.ineq_abs + tol.ineq_rel * std::max(std::abs(lhs), std::abs(rhs)));
    return r;
}

std::string_view to_string(KernelSpec::Kind kind) {
    switch (kind) {
    case KernelSpec::Kind::schwarz_gap: return "schwarz-gap";
    case KernelSpec::Kind::mM_bound: return "mM-bound";
    case KernelSpec::Kind::difference_profile: return "difference-profile";
    case KernelSpec::Kind::constant: return "constant";
    }
    return "constant";
}

KernelSpec::Kind kernel_kind_from_string(std::string_view name) {
    for (auto k : {KernelSpec::Kind::schwarz_gap, KernelSpec::Kind::mM_bound,
                   KernelSpec::Kind::difference_profile, KernelSpec::Kind::constant}) {
        if (to_string(k) == name) return k;
    }
    throw InputError("unknown kernel kind '" + std::string(name) + "'");
}

PairKernel KernelSpec::bind(const GridFunction& f) const {
    switch (kind) {
    case Kind::schwarz_gap:
        return [&f, c = scale](std::size_t i, std::size_t j) { return c * schwarz_gap(f[i], f[j]); };
    case Kind::mM_bound: {
        require_mM(m, M);
        const double c = 0.25 * (M - m) * (M - m) / (M + m);
        return [&f, c](std::size_t, std::size_t j) { return c * f.norms()[j] * f.norms()[j]; };
    }
    case Kind::difference_profile:
        return [&f, p = profile](std::size_t i, std::size_t j) {
            return p.value(f.grid().node(j) - f.grid().node(i));
        };
    case Kind::constant:
        return [v = value](std::size_t, std::size_t) { return v; };
    }
    throw InputError("unknown kernel");
}

InequalityReport eval_triangle(const GridFunction& f, const EvalContext& ctx) {
    return make_report("triangle", norm(bochner_integral(f, ctx.quad)), integral_norm(f, ctx.quad), ctx.tol);
}

InequalityReport eval_karamata(const GridFunction& f, double theta, const EvalContext& ctx) {
    const auto hyp = check_karamata(f, theta, ctx.tol.hyp);
    require_hypothesis("karamata", hyp);
    auto r = make_report("karamata", std::cos(theta) * integral_norm(f, ctx.quad),
                         norm(bochner_integral(f, ctx.quad)), ctx.tol);
    r.hypothesis = hyp;
    return r;
}

std::vector<InequalityReport> eval_multiplicative_reverse(const GridFunction& f, const ComplexVector& e,
                                                          const MultiplicativeVariant& variant,
                                                          const EvalContext& ctx) {
    require_e(e, f);
    const auto integral = bochner_integral(f, ctx.quad);
    const double int_norm = integral_norm(f, ctx.quad);
    const double norm_int = norm(integral);

    std::vector<InequalityReport> out;
    if (const auto* v = std::get_if<ConstantK>(&variant)) {
        const auto spec = HypothesisSpec::diaz_metcalf(v->K, e);
        const auto hyp = check_pointwise_e(f, spec, ctx.tol.hyp);
        require_hypothesis("multiplicative-K", hyp);
        auto r = make_report("multiplicative-K", int_norm, v->K * norm_int, ctx.tol);
        r.equality_residual = residual_to_direction(integral, int_norm / v->K, e);
        r.hypothesis = hyp;
        out.push_back(std::move(r));
    } else if (const auto* v = std::get_if<BallRadius>(&variant)) {
        const auto hyp = check_pointwise_e(f, HypothesisSpec::ball(v->rho, e), ctx.tol.hyp);
        require_hypothesis("multiplicative-ball", hyp);
        const double c = std::sqrt(1.0 - v->rho * v->rho);
        auto r = make_report("multiplicative-ball", c * int_norm, norm_int, ctx.tol);
        r.equality_residual = residual_to_direction(integral, c * int_norm, e);
        r.hypothesis = hyp;
        out.push_back(std::move(r));
    } else {
        const auto& b = std::get<RatioBounds>(variant);
        const auto hyp = check_pointwise_e(f, HypothesisSpec::mM_with_e(b.m, b.M, e), ctx.tol.hyp);
        require_hypothesis("multiplicative-mM", hyp);
        const double c = 2.0 * std::sqrt(b.m * b.M) / (b.M + b.m);
        auto r = make_report("multiplicative-mM", c * int_norm, norm_int, ctx.tol);
        r.equality_residual = residual_to_direction(integral, c * int_norm, e);
        r.hypothesis = hyp;
        out.push_back(r);

        const double root_gap = std::sqrt(b.M) - std::sqrt(b.m);
        auto additive = make_report("multiplicative-mM-additive", int_norm - norm_int,
                                    root_gap * root_gap / (b.M + b.m) * norm_int, ctx.tol);
        additive.equality_residual = r.equality_residual;
        additive.hypothesis = hyp;
        out.push_back(std::move(additive));
    }
    return out;
}

InequalityReport eval_additive_reverse(const GridFunction& f, const ComplexVector& e,
                                       const AdditiveVariant& variant, const EvalContext& ctx) {
    require_e(e, f);
    const auto integral = bochner_integral(f, ctx.quad);
    const double int_norm = integral_norm(f, ctx.quad);
    const double lhs = int_norm - norm(integral);
    const double re_int_e = re_inner(integral, e);

    if (const auto* v = std::get_if<NodeBound>(&variant)) {
        const auto hyp = check_pointwise_e(f, HypothesisSpec::additive_profile(v->k, e), ctx.tol.hyp);
        require_hypothesis("additive-k", hyp);
        const double int_k = integrate_nodes(v->k, f.grid(), ctx.quad);
        auto r = make_report("additive-k", lhs, int_k, ctx.tol);
        // Equality needs int ||f|| >= int k and int f = (int ||f|| - int k) e.
        r.equality_residual =
            residual_to_direction(integral, int_norm - int_k, e) + std::max(0.0, int_k - int_norm);
        r.hypothesis = hyp;
        return r;
    }
    if (const auto* v = std::get_if<BallRadius>(&variant)) {
        const auto hyp = check_pointwise_e(f, HypothesisSpec::ball(v->rho, e), ctx.tol.hyp);
        require_hypothesis("additive-ball", hyp);
        const double c = std::sqrt(1.0 - v->rho * v->rho);
        auto r = make_report("additive-ball", lhs, v->rho * v->rho / (c * (1.0 + c)) * re_int_e, ctx.tol);
        r.hypothesis = hyp;
        return r;
    }
    if (const auto* v = std::get_if<RatioBounds>(&variant)) {
        const auto hyp = check_pointwise_e(f, HypothesisSpec::mM_with_e(v->m, v->M, e), ctx.tol.hyp);
        require_hypothesis("additive-mM", hyp);
        const double root_gap = std::sqrt(v->M) - std::sqrt(v->m);
        auto r = make_report("additive-mM", lhs, root_gap * root_gap / (2.0 * std::sqrt(v->m * v->M)) * re_int_e,
                             ctx.tol);
        r.hypothesis = hyp;
        return r;
    }
    const auto& v = std::get<RadiusProfile>(variant);
    const auto hyp = check_pointwise_e(f, HypothesisSpec::ball_profile(v.r, e), ctx.tol.hyp);
    require_hypothesis("additive-r", hyp);
    std::vector<double> r_squared(v.r.size());
    std::transform(v.r.begin(), v.r.end(), r_squared.begin(), [](double x) { return x * x; });
    auto r = make_report("additive-r", lhs, 0.5 * integrate_nodes(r_squared, f.grid(), ctx.quad), ctx.tol);
    r.hypothesis = hyp;
    return r;
}

std::vector<InequalityReport> eval_quadratic_kernel(const GridFunction& f, const PairKernel& kernel,
                                                    KernelMode mode, const EvalContext& ctx) {
    HypothesisReport hyp;
    hyp.kind = mode == KernelMode::upper ? HypothesisKind::kernel_upper : HypothesisKind::kernel_lower;
    double residual = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i; j < f.size(); ++j) {
            const double gap = schwarz_gap(f[i], f[j]);
            const double k = kernel(i, j);
            const double slack = mode == KernelMode::upper ? k - gap : gap - k;
            if (hyp.points_checked == 0 || slack < hyp.worst_margin) {
                hyp.worst_margin = slack;
                hyp.worst_i = i;
                hyp.worst_j = j;
            }
            ++hyp.points_checked;
            residual = std::max(residual, std::abs(gap - k));
        }
    }
    hyp.holds = hyp.worst_margin >= -ctx.tol.hyp;
    require_hypothesis("quadratic-kernel", hyp);

    const double int_norm = integral_norm(f, ctx.quad);
    const double norm_int_sq = norm_squared(bochner_integral(f, ctx.quad));
    const double double_int = triangle_integral(kernel, f.grid(), ctx.quad);

    std::vector<InequalityReport> out;
    if (mode == KernelMode::upper) {
        auto main = make_report("quadratic-kernel", int_norm * int_norm, norm_int_sq + 2.0 * double_int, ctx.tol);
        main.equality_residual = residual;
        main.hypothesis = hyp;
        out.push_back(std::move(main));
        auto coarse = make_report("quadratic-kernel-coarse", int_norm - std::sqrt(norm_int_sq),
                                  std::sqrt(2.0 * std::max(double_int, 0.0)), ctx.tol);
        coarse.hypothesis = hyp;
        out.push_back(std::move(coarse));
    } else {
        auto main = make_report("quadratic-kernel", norm_int_sq + 2.0 * double_int, int_norm * int_norm, ctx.tol);
        main.equality_residual = residual;
        main.hypothesis = hyp;
        out.push_back(std::move(main));
        auto chain = make_report("quadratic-kernel-chain", norm_int_sq, norm_int_sq + 2.0 * double_int, ctx.tol);
        chain.hypothesis = hyp;
        out.push_back(std::move(chain));
    }
    return out;
}

InequalityReport eval_quadratic_mM(const GridFunction& f, double m, double M, const EvalContext& ctx) {
    require_mM(m, M);
    const auto hyp = check_pairwise(f, HypothesisSpec::pairwise_mM(m, M), ctx.tol.hyp);
    require_hypothesis("quadratic-mM", hyp);

    const double int_norm = integral_norm(f, ctx.quad);
    const double norm_int_sq = norm_squared(bochner_integral(f, ctx.quad));
    const double a = f.grid().a();
    const double weighted = weighted_norm_integral(f, [a](double s) { return s - a; }, ctx.quad);
    const double c = (M - m) * (M - m) / (M + m);

    auto r = make_report("quadratic-mM", int_norm * int_norm, norm_int_sq + 0.5 * c * weighted, ctx.tol);
    r.equality_residual = max_over_pairs(f, [&](std::size_t i, std::size_t j) {
        return schwarz_gap(f[i], f[j]) - 0.25 * c * f.norms()[j] * f.norms()[j];
    });
    r.hypothesis = hyp;
    return r;
}

std::vector<InequalityReport> eval_quadratic_ratio(const GridFunction& f, double m, double M,
                                                   const EvalContext& ctx) {
    require_mM(m, M);
    if (m <= 0.0) throw InputError("quadratic-ratio: m must be positive");
    const auto hyp = check_pairwise(f, HypothesisSpec::pairwise_mM(m, M), ctx.tol.hyp);
    require_hypothesis("quadratic-ratio", hyp);

    const double int_norm = integral_norm(f, ctx.quad);
    const double norm_int = norm(bochner_integral(f, ctx.quad));
    const double factor = (M + m) / (2.0 * std::sqrt(M * m));

    auto ratio = make_report("quadratic-ratio", int_norm, std::sqrt(factor) * norm_int, ctx.tol);
    ratio.equality_residual = max_over_pairs(f, [&](std::size_t i, std::size_t j) {
        return f.norms()[i] * f.norms()[j] - factor * re_inner(f[i], f[j]);
    });
    ratio.hypothesis = hyp;

    const double root_gap = std::sqrt(M) - std::sqrt(m);
    auto gap = make_report("quadratic-ratio-gap", int_norm * int_norm - norm_int * norm_int,
                           root_gap * root_gap / (2.0 * std::sqrt(M * m)) * norm_int * norm_int, ctx.tol);
    gap.equality_residual = ratio.equality_residual;
    gap.hypothesis = hyp;
    return {ratio, gap};
}

std::vector<InequalityReport> eval_weighted_gamma(const GridFunction& f, double gamma, double Gamma,
                                                  const EvalContext& ctx) {
    if (!std::isfinite(gamma) || !std::isfinite(Gamma) || !(Gamma + gamma > 0.0)) {
        throw InputError("weighted-gamma: require finite gamma, Gamma with Gamma + gamma > 0");
    }
    const auto hyp = check_pairwise(f, HypothesisSpec::pairwise_gamma(gamma, Gamma), ctx.tol.hyp);
    require_hypothesis("weighted-gamma", hyp);

    const double a = f.grid().a(), b = f.grid().b();
    const double product = gamma * Gamma;
    const double lhs = weighted_norm_integral(
        f, [=](double s) { return (b - s) + product * (s - a); }, ctx.quad);
    const double rhs = 0.5 * (Gamma + gamma) * norm_squared(bochner_integral(f, ctx.quad));

    std::vector<InequalityReport> out;
    auto main = make_report("weighted-gamma", lhs, rhs, ctx.tol);
    main.equality_residual = max_over_pairs(f, [&](std::size_t i, std::size_t j) {
        return pair_form(f[i], f[j], gamma, Gamma);
    });
    main.hypothesis = hyp;
    out.push_back(main);

    if (product > 0.0) {
        const double sq = weighted_norm_integral(f, [](double) { return 1.0; }, ctx.quad);
        const double coeff = product >= 1.0 ? (b - a) : product * (b - a);
        auto cor = make_report("weighted-gamma-corollary", coeff * sq, rhs, ctx.tol);
        cor.hypothesis = hyp;
        cor.note = product >= 1.0 ? "gamma*Gamma >= 1: constant weight b - a"
                                  : "0 < gamma*Gamma < 1: constant weight gamma*Gamma*(b - a)";
        out.push_back(std::move(cor));
    }
    return out;
}

std::vector<InequalityReport> eval_complex_suite(const GridFunction& f, double m, double M,
                                                 const EvalContext& ctx) {
    const auto hyp = check_complex_componentwise(f, HypothesisSpec::complex_componentwise(m, M), ctx.tol.hyp);
    require_hypothesis("complex-suite", hyp);

    auto quadratic = eval_quadratic_mM(f, m, M, ctx);
    auto ratio = eval_quadratic_ratio(f, m, M, ctx).front();
    auto weighted = eval_weighted_gamma(f, m, M, ctx).front();

    quadratic.id = "complex-quadratic-mM";
    ratio.id = "complex-quadratic-ratio";
    weighted.id = "complex-weighted-gamma";
    weighted.note = "gamma := m, Gamma := M";
    for (auto* r : {&quadratic, &ratio, &weighted}) r->hypothesis = hyp;
    return {quadratic, ratio, weighted};
}

const std::vector<std::string>& inequality_ids() {
    static const std::vector<std::string> ids{
        "triangle",          "karamata",      "multiplicative-K", "multiplicative-ball", "multiplicative-mM",
        "additive-k",        "additive-ball", "additive-mM",      "additive-r",          "quadratic-kernel",
        "quadratic-mM",      "quadratic-ratio", "weighted-gamma", "complex-suite",
    };
    return ids;
}

std::vector<InequalityReport> evaluate_inequality(std::string_view id, const GridFunction& f,
                                                  const InequalityParams& p, const EvalContext& ctx) {
    if (id == "triangle") return {eval_triangle(f, ctx)};
    if (id == "karamata") return {eval_karamata(f, need(p.theta, "theta", id), ctx)};
    if (id == "multiplicative-K") {
        return eval_multiplicative_reverse(f, need_e(p, id), ConstantK{need(p.K, "K", id)}, ctx);
    }
    if (id == "multiplicative-ball") {
        return eval_multiplicative_reverse(f, need_e(p, id), BallRadius{need(p.rho, "rho", id)}, ctx);
    }
    if (id == "multiplicative-mM") {
        return eval_multiplicative_reverse(f, need_e(p, id), RatioBounds{need(p.m, "m", id), need(p.M, "M", id)},
                                           ctx);
    }
    if (id == "additive-k") {
        if (p.k_nodes.empty()) throw InputError("additive-k: missing k profile");
        return {eval_additive_reverse(f, need_e(p, id), NodeBound{p.k_nodes}, ctx)};
    }
    if (id == "additive-ball") {
        return {eval_additive_reverse(f, need_e(p, id), BallRadius{need(p.rho, "rho", id)}, ctx)};
    }
    if (id == "additive-mM") {
        return {eval_additive_reverse(f, need_e(p, id), RatioBounds{need(p.m, "m", id), need(p.M, "M", id)}, ctx)};
    }
    if (id == "additive-r") {
        if (p.r_nodes.empty()) throw InputError("additive-r: missing r profile");
        return {eval_additive_reverse(f, need_e(p, id), RadiusProfile{p.r_nodes}, ctx)};
    }
    if (id == "quadratic-kernel") {
        if (!p.kernel) throw InputError("quadratic-kernel: missing kernel");
        return eval_quadratic_kernel(f, p.kernel->bind(f), p.mode, ctx);
    }
    if (id == "quadratic-mM") return {eval_quadratic_mM(f, need(p.m, "m", id), need(p.M, "M", id), ctx)};
    if (id == "quadratic-ratio") return eval_quadratic_ratio(f, need(p.m, "m", id), need(p.M, "M", id), ctx);
    if (id == "weighted-gamma") {
        return eval_weighted_gamma(f, need(p.gamma, "gamma", id), need(p.Gamma, "Gamma", id), ctx);
    }
    if (id == "complex-suite") return eval_complex_suite(f, need(p.m, "m", id), need(p.M, "M", id), ctx);
    throw InputError("unknown inequality id '" + std::string(id) + "'");
}

} // namespace revtri
