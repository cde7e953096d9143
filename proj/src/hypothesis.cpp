#include "revtri/hypothesis.hpp"

#include "revtri/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace revtri {

namespace {

constexpr std::array<std::pair<HypothesisKind, std::string_view>, 11> kKindNames{{
    {HypothesisKind::diaz_metcalf_K, "diaz-metcalf-K"},
    {HypothesisKind::ball_rho, "ball-rho"},
    {HypothesisKind::ball_r_of_t, "ball-r-of-t"},
    {HypothesisKind::mM_with_e, "mM-with-e"},
    {HypothesisKind::additive_k_of_t, "additive-k-of-t"},
    {HypothesisKind::pairwise_mM, "pairwise-mM"},
    {HypothesisKind::pairwise_gammaGamma, "pairwise-gammaGamma"},
    {HypothesisKind::complex_componentwise, "complex-componentwise"},
    {HypothesisKind::karamata_theta, "karamata-theta"},
    {HypothesisKind::kernel_upper, "kernel-upper"},
    {HypothesisKind::kernel_lower, "kernel-lower"},
}};

double need(const std::optional<double>& v, const char* name, HypothesisKind kind) {
    if (!v) {
        throw InputError(std::string(to_string(kind)) + ": missing parameter " + name);
    }
    if (!std::isfinite(*v)) {
        throw InputError(std::string(to_string(kind)) + ": parameter " + name + " is not finite");
    }
    return *v;
}

/// Running minimum with ties kept at the first (lexicographically smallest) location.
class WorstTracker {
public:
    explicit WorstTracker(HypothesisKind kind) { report_.kind = kind; }

    void observe(double slack, std::size_t i, std::optional<std::size_t> j = std::nullopt) {
        if (report_.points_checked == 0 || slack < report_.worst_margin) {
            report_.worst_margin = slack;
            report_.worst_i = i;
            report_.worst_j = j;
        }
        ++report_.points_checked;
    }

    HypothesisReport finish(double tol) {
        report_.holds = report_.worst_margin >= -tol;
        return report_;
    }

    HypothesisReport& report() { return report_; }

private:
    HypothesisReport report_;
};

double distance_to_multiple(const ComplexVector& x, const ComplexVector& y, double c) {
    if (x.dim() != y.dim()) throw InputError("dimension mismatch");
    double acc = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) acc += std::norm(x[k] - c * y[k]);
    return std::sqrt(acc);
}

void require_profile(const HypothesisSpec& spec, const GridFunction& f) {
    if (spec.profile.size() != f.size()) {
        throw InputError(std::string(to_string(spec.kind)) + ": profile has " +
                         std::to_string(spec.profile.size()) + " node values, grid has " +
                         std::to_string(f.size()));
    }
}

const ComplexVector& require_e(const HypothesisSpec& spec, const GridFunction& f) {
    if (!spec.e) throw InputError(std::string(to_string(spec.kind)) + ": missing unit vector e");
    if (!is_unit(*spec.e)) throw InputError(std::string(to_string(spec.kind)) + ": e is not a unit vector");
    if (spec.e->dim() != f.dim()) throw InputError(std::string(to_string(spec.kind)) + ": e has wrong dimension");
    return *spec.e;
}

std::pair<double, double> pairwise_bounds(const HypothesisSpec& spec) {
    if (spec.kind == HypothesisKind::pairwise_gammaGamma) {
        return {need(spec.gamma, "gamma", spec.kind), need(spec.Gamma, "Gamma", spec.kind)};
    }
    return {need(spec.m, "m", spec.kind), need(spec.M, "M", spec.kind)};
}

} // namespace

std::string_view to_string(HypothesisKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

HypothesisKind hypothesis_kind_from_string(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    throw InputError("unknown hypothesis kind '" + std::string(name) + "'");
}

HypothesisSpec HypothesisSpec::diaz_metcalf(double K, ComplexVector e) {
    HypothesisSpec s;
    s.kind = HypothesisKind::diaz_metcalf_K;
    s.K = K;
    s.e = std::move(e);
    return s;
}

HypothesisSpec HypothesisSpec::ball(double rho, ComplexVector e) {
    HypothesisSpec s;
    s.kind = HypothesisKind::ball_rho;
    s.rho = rho;
    s.e = std::move(e);
    return s;
}

HypothesisSpec HypothesisSpec::ball_profile(std::vector<double> r, ComplexVector e) {
    HypothesisSpec s;
    s.kind = HypothesisKind::ball_r_of_t;
    s.profile = std::move(r);
    s.e = std::move(e);
    return s;
}

HypothesisSpec HypothesisSpec::mM_with_e(double m, double M, ComplexVector e) {
    HypothesisSpec s;
    s.kind = HypothesisKind::mM_with_e;
    s.m = m;
    s.M = M;
    s.e = std::move(e);
    return s;
}

HypothesisSpec HypothesisSpec::additive_profile(std::vector<double> k, ComplexVector e) {
    HypothesisSpec s;
    s.kind = HypothesisKind::additive_k_of_t;
    s.profile = std::move(k);
    s.e = std::move(e);
    return s;
}

HypothesisSpec HypothesisSpec::pairwise_mM(double m, double M) {
    HypothesisSpec s;
    s.kind = HypothesisKind::pairwise_mM;
    s.m = m;
    s.M = M;
    return s;
}

HypothesisSpec HypothesisSpec::pairwise_gamma(double gamma, double Gamma) {
    HypothesisSpec s;
    s.kind = HypothesisKind::pairwise_gammaGamma;
    s.gamma = gamma;
    s.Gamma = Gamma;
    return s;
}

HypothesisSpec HypothesisSpec::complex_componentwise(double m, double M) {
    HypothesisSpec s;
    s.kind = HypothesisKind::complex_componentwise;
    s.m = m;
    s.M = M;
    return s;
}

HypothesisSpec HypothesisSpec::karamata(double theta) {
    HypothesisSpec s;
    s.kind = HypothesisKind::karamata_theta;
    s.theta = theta;
    return s;
}

void HypothesisSpec::validate() const {
    const auto fail = [this](const std::string& what) {
        throw InputError(std::string(to_string(kind)) + ": " + what);
    };
    switch (kind) {
    case HypothesisKind::diaz_metcalf_K:
        if (need(K, "K", kind) < 1.0) fail("K must be >= 1");
        break;
    case HypothesisKind::ball_rho: {
        const double r = need(rho, "rho", kind);
        if (!(r > 0.0 && r < 1.0)) fail("rho must lie in (0, 1)");
        break;
    }
    case HypothesisKind::ball_r_of_t:
        for (double r : profile) {
            if (!std::isfinite(r)) fail("r(t) must be finite");
        }
        break;
    case HypothesisKind::mM_with_e: {
        const double lo = need(m, "m", kind), hi = need(M, "M", kind);
        if (!(hi >= lo && lo > 0.0)) fail("require M >= m > 0");
        break;
    }
    case HypothesisKind::additive_k_of_t:
        for (double k : profile) {
            if (!std::isfinite(k) || k < 0.0) fail("k(t) must be finite and nonnegative");
        }
        break;
    case HypothesisKind::pairwise_mM:
    case HypothesisKind::complex_componentwise: {
        const double lo = need(m, "m", kind), hi = need(M, "M", kind);
        if (!(hi >= 1.0 && 1.0 >= lo && lo >= 0.0)) fail("require M >= 1 >= m >= 0");
        break;
    }
    case HypothesisKind::pairwise_gammaGamma:
        need(gamma, "gamma", kind);
        need(Gamma, "Gamma", kind);
        break;
    case HypothesisKind::karamata_theta: {
        const double t = need(theta, "theta", kind);
        if (!(t > 0.0 && t < std::numbers::pi / 2)) fail("theta must lie in (0, pi/2)");
        break;
    }
    case HypothesisKind::kernel_upper:
    case HypothesisKind::kernel_lower:
        fail("kernel domination is checked by the quadratic-kernel evaluator");
    }
}

double pair_form(const ComplexVector& x, const ComplexVector& y, double lower, double upper) {
    if (x.dim() != y.dim()) throw InputError("dimension mismatch");
    double acc = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) {
        const Scalar big = upper * y[k] - x[k];
        const Scalar small = x[k] - lower * y[k];
        acc += big.real() * small.real() + big.imag() * small.imag();
    }
    return acc;
}

double pair_ball_slack(const ComplexVector& x, const ComplexVector& y, double lower, double upper) {
    const double centre = 0.5 * (upper + lower);
    return 0.5 * std::abs(upper - lower) * norm(y) - distance_to_multiple(x, y, centre);
}

FormIndicators equivalence_indicators(const ComplexVector& x, const ComplexVector& y, double lower,
                                      double upper, double tol) {
    return {pair_form(x, y, lower, upper) >= -tol, pair_ball_slack(x, y, lower, upper) >= -tol};
}

HypothesisReport check_pointwise_e(const GridFunction& f, const HypothesisSpec& spec, double tol) {
    spec.validate();
    const auto& e = require_e(spec, f);
    WorstTracker worst(spec.kind);
    switch (spec.kind) {
    case HypothesisKind::diaz_metcalf_K:
        for (std::size_t i = 0; i < f.size(); ++i) {
            worst.observe(*spec.K * re_inner(f[i], e) - f.norms()[i], i);
        }
        break;
    case HypothesisKind::ball_rho:
        for (std::size_t i = 0; i < f.size(); ++i) {
            worst.observe(*spec.rho - distance_to_multiple(f[i], e, 1.0), i);
        }
        break;
    case HypothesisKind::ball_r_of_t:
        require_profile(spec, f);
        for (std::size_t i = 0; i < f.size(); ++i) {
            worst.observe(spec.profile[i] - distance_to_multiple(f[i], e, 1.0), i);
        }
        break;
    case HypothesisKind::additive_k_of_t:
        require_profile(spec, f);
        for (std::size_t i = 0; i < f.size(); ++i) {
            worst.observe(spec.profile[i] - (f.norms()[i] - re_inner(f[i], e)), i);
        }
        break;
    case HypothesisKind::mM_with_e: {
        // The bilinear form is authoritative; the ball form must agree.
        std::size_t disagreements = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double bilinear = pair_form(f[i], e, *spec.m, *spec.M);
            const double ball = pair_ball_slack(f[i], e, *spec.m, *spec.M);
            if ((bilinear >= -tol) != (ball >= -tol)) ++disagreements;
            worst.observe(bilinear, i);
        }
        worst.report().consistency_violations = disagreements;
        break;
    }
    default:
        throw InputError("check_pointwise_e: '" + std::string(to_string(spec.kind)) +
                         "' is not an e-based hypothesis");
    }
    return worst.finish(tol);
}

HypothesisReport check_pairwise(const GridFunction& f, const HypothesisSpec& spec, double tol) {
    if (spec.kind != HypothesisKind::pairwise_mM && spec.kind != HypothesisKind::pairwise_gammaGamma) {
        throw InputError("check_pairwise: '" + std::string(to_string(spec.kind)) + "' is not a pairwise hypothesis");
    }
    spec.validate();
    const auto [lower, upper] = pairwise_bounds(spec);
    WorstTracker worst(spec.kind);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i; j < f.size(); ++j) worst.observe(pair_form(f[i], f[j], lower, upper), i, j);
    }
    return worst.finish(tol);
}

EquivalenceReport check_equivalence_forms(const GridFunction& f, const HypothesisSpec& spec, double tol) {
    if (spec.kind != HypothesisKind::pairwise_mM && spec.kind != HypothesisKind::pairwise_gammaGamma) {
        throw InputError("check_equivalence_forms: pairwise hypothesis required");
    }
    spec.validate();
    const auto [lower, upper] = pairwise_bounds(spec);
    EquivalenceReport out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i; j < f.size(); ++j) {
            const auto ind = equivalence_indicators(f[i], f[j], lower, upper, tol);
            ++out.pairs_checked;
            if (ind.bilinear_holds != ind.ball_holds) {
                if (!out.first_disagreement) out.first_disagreement = {i, j};
                ++out.disagreements;
            }
        }
    }
    return out;
}

HypothesisReport check_complex_componentwise(const GridFunction& f, const HypothesisSpec& spec, double tol) {
    if (f.dim() != 1) throw InputError("complex-componentwise: function must be scalar (dim 1)");
    if (spec.kind != HypothesisKind::complex_componentwise) {
        throw InputError("check_complex_componentwise: wrong hypothesis kind");
    }
    spec.validate();
    const double m = *spec.m, M = *spec.M;
    WorstTracker worst(spec.kind);
    std::size_t implication_failures = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Scalar x = f[i][0];
        for (std::size_t j = i; j < f.size(); ++j) {
            const Scalar y = f[j][0];
            const double chain = std::min({x.real() - m * y.real(), M * y.real() - x.real(),
                                           x.imag() - m * y.imag(), M * y.imag() - x.imag()});
            worst.observe(chain, i, j);
            // The chain is sufficient for the bilinear form; check the implication.
            if (chain >= 0.0) {
                const double form = ((M * y - x) * (std::conj(x) - m * std::conj(y))).real();
                const double scale = std::max(1.0, std::norm(x) + M * M * std::norm(y));
                if (form < -1e-12 * scale) ++implication_failures;
            }
        }
    }
    worst.report().consistency_violations = implication_failures;
    return worst.finish(tol);
}

HypothesisReport check_karamata(const GridFunction& f, double theta, double tol) {
    if (f.dim() != 1) throw InputError("karamata: function must be scalar (dim 1)");
    HypothesisSpec::karamata(theta).validate();
    WorstTracker worst(HypothesisKind::karamata_theta);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Scalar z = f[i][0];
        // arg 0 is undefined; a zero value admits no angle and fails by theta.
        const double slack = (z == Scalar{0.0, 0.0}) ? -theta : theta - std::abs(std::arg(z));
        worst.observe(slack, i);
    }
    return worst.finish(tol);
}

HypothesisReport check_hypothesis(const GridFunction& f, const HypothesisSpec& spec, double tol) {
    switch (spec.kind) {
    case HypothesisKind::pairwise_mM:
    case HypothesisKind::pairwise_gammaGamma: return check_pairwise(f, spec, tol);
    case HypothesisKind::complex_componentwise: return check_complex_componentwise(f, spec, tol);
    case HypothesisKind::karamata_theta: return check_karamata(f, need(spec.theta, "theta", spec.kind), tol);
    default: return check_pointwise_e(f, spec, tol);
    }
}

} // namespace revtri
