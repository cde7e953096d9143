#pragma once

#include "revtri/function_space.hpp"
#include "revtri/hypothesis.hpp"
#include "revtri/profile.hpp"
#include "revtri/quadrature.hpp"
#include "revtri/vector_core.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace revtri {

struct Tolerances {
    double hyp = kHypothesisTolerance;
    double ineq_abs = 1e-8;
    double ineq_rel = 1e-8;
};

struct EvalContext {
    QuadratureConfig quad;
    Tolerances tol;
};

/// One inequality written as lhs <= rhs.
///
/// abs_gap = rhs - lhs, rel_gap = abs_gap / max(|rhs|, 1e-300).
/// satisfied <=> abs_gap >= -(tol.ineq_abs + tol.ineq_rel * max(|lhs|, |rhs|)).
struct InequalityReport {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    bool satisfied = true;
    std::optional<double> equality_residual;
    std::optional<HypothesisReport> hypothesis;
    std::string note;
};

InequalityReport make_report(std::string id, double lhs, double rhs, const Tolerances& tol);

/// Raised when an inequality's hypothesis fails on the grid. The inequality
/// then claims nothing, which is distinct from being violated.
class HypothesisUnmet : public std::runtime_error {
public:
    HypothesisUnmet(std::string inequality_id, HypothesisReport report);

    const std::string& inequality_id() const noexcept { return id_; }
    const HypothesisReport& report() const noexcept { return report_; }

private:
    std::string id_;
    HypothesisReport report_;
};

// Variant selectors shared by the multiplicative and additive reverses.
struct ConstantK {
    double K;
};
struct BallRadius {
    double rho;
};
struct RatioBounds {
    double m;
    double M;
};
struct NodeBound {
    std::vector<double> k; // k(t) at the grid nodes
};
struct RadiusProfile {
    std::vector<double> r; // r(t) at the grid nodes
};

using MultiplicativeVariant = std::variant<ConstantK, BallRadius, RatioBounds>;
using AdditiveVariant = std::variant<NodeBound, BallRadius, RatioBounds, RadiusProfile>;

enum class KernelMode { upper, lower };

/// Catalog of kernels k(t, s) on the triangle t <= s.
struct KernelSpec {
    enum class Kind {
        schwarz_gap,         // scale * (||f(t)|| ||f(s)|| - Re<f(t), f(s)>)
        mM_bound,            // (M - m)^2 / (4 (M + m)) * ||f(s)||^2
        difference_profile,  // profile(s - t)
        constant,            // value
    };
    Kind kind = Kind::schwarz_gap;
    double scale = 1.0;
    double m = 1.0;
    double M = 1.0;
    double value = 0.0;
    Profile profile;

    PairKernel bind(const GridFunction& f) const;
};

std::string_view to_string(KernelSpec::Kind kind);
KernelSpec::Kind kernel_kind_from_string(std::string_view name);

/// ||int f|| <= int ||f||. Holds for every f.
InequalityReport eval_triangle(const GridFunction& f, const EvalContext& ctx);

/// cos(theta) int |f| <= |int f| under |arg f| <= theta; scalar f only.
InequalityReport eval_karamata(const GridFunction& f, double theta, const EvalContext& ctx);

/// Multiplicative reverses. ConstantK: int ||f|| <= K ||int f||. BallRadius:
/// sqrt(1 - rho^2) int ||f|| <= ||int f||. RatioBounds: 2 sqrt(mM)/(M + m)
/// int ||f|| <= ||int f||, followed by its additive companion
/// ("multiplicative-mM-additive"). Residuals measure the distance of int f
/// from the equality vector c (int ||f||) e.
std::vector<InequalityReport> eval_multiplicative_reverse(const GridFunction& f, const ComplexVector& e,
                                                          const MultiplicativeVariant& variant,
                                                          const EvalContext& ctx);

/// Additive reverses: int ||f|| - ||int f|| <= bound.
InequalityReport eval_additive_reverse(const GridFunction& f, const ComplexVector& e,
                                       const AdditiveVariant& variant, const EvalContext& ctx);

/// Quadratic reverse for a general kernel. Upper mode returns the quadratic
/// report and the coarser square-root form; lower mode returns the refinement
/// (int ||f||)^2 >= ||int f||^2 + 2 double-int k followed by
/// ||int f||^2 <= ||int f||^2 + 2 double-int k.
std::vector<InequalityReport> eval_quadratic_kernel(const GridFunction& f, const PairKernel& kernel,
                                                    KernelMode mode, const EvalContext& ctx);

/// (int ||f||)^2 <= ||int f||^2 + (M - m)^2 / (2 (M + m)) int (s - a) ||f(s)||^2 ds.
InequalityReport eval_quadratic_mM(const GridFunction& f, double m, double M, const EvalContext& ctx);

/// int ||f|| <= ((M + m) / (2 sqrt(Mm)))^{1/2} ||int f||, then the equivalent
/// gap form ("quadratic-ratio-gap").
std::vector<InequalityReport> eval_quadratic_ratio(const GridFunction& f, double m, double M,
                                                   const EvalContext& ctx);

/// int [(b - s) + gamma Gamma (s - a)] ||f(s)||^2 ds <= (Gamma + gamma)/2 ||int f||^2,
/// then the constant-weight corollary when gamma Gamma > 0.
std::vector<InequalityReport> eval_weighted_gamma(const GridFunction& f, double gamma, double Gamma,
                                                  const EvalContext& ctx);

/// The three quadratic reverses for scalar complex f under the componentwise
/// chain condition. The weighted form uses gamma := m, Gamma := M.
std::vector<InequalityReport> eval_complex_suite(const GridFunction& f, double m, double M,
                                                 const EvalContext& ctx);

/// Parameters for evaluate_inequality. Only those the id needs are read.
struct InequalityParams {
    std::optional<double> K, rho, m, M, gamma, Gamma, theta;
    std::optional<ComplexVector> e;
    std::vector<double> k_nodes;
    std::vector<double> r_nodes;
    std::optional<KernelSpec> kernel;
    KernelMode mode = KernelMode::upper;
};

/// Ids accepted by evaluate_inequality.
const std::vector<std::string>& inequality_ids();

/// Evaluates the inequality named by id; the first report carries that id.
std::vector<InequalityReport> evaluate_inequality(std::string_view id, const GridFunction& f,
                                                  const InequalityParams& params, const EvalContext& ctx);

} // namespace revtri
