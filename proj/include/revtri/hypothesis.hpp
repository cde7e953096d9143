#pragma once

#include "revtri/function_space.hpp"
#include "revtri/vector_core.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace revtri {

/// Absolute tolerance on hypothesis slacks. Constructed equality cases sit
/// exactly on the boundary, so rounding must not flip them.
constexpr double kHypothesisTolerance = 1e-9;

enum class HypothesisKind {
    diaz_metcalf_K,        // ||f(t)|| <= K Re<f(t), e>
    ball_rho,              // ||f(t) - e|| <= rho
    ball_r_of_t,           // ||f(t) - e|| <= r(t)
    mM_with_e,             // Re<M e - f(t), f(t) - m e> >= 0
    additive_k_of_t,       // ||f(t)|| - Re<f(t), e> <= k(t)
    pairwise_mM,           // Re<M f(s) - f(t), f(t) - m f(s)> >= 0 for t <= s
    pairwise_gammaGamma,   // same form with gamma, Gamma
    complex_componentwise, // m Re f(s) <= Re f(t) <= M Re f(s), same for Im, t <= s
    karamata_theta,        // |arg f(t)| <= theta
    kernel_upper,          // Schwarz gap <= k(t, s) for t <= s
    kernel_lower,          // k(t, s) <= Schwarz gap for t <= s
};

std::string_view to_string(HypothesisKind kind);
HypothesisKind hypothesis_kind_from_string(std::string_view name);

/// A named admissibility condition and its parameters. Profile-valued
/// parameters (k(t), r(t)) are carried as node values on the function's grid.
struct HypothesisSpec {
    HypothesisKind kind = HypothesisKind::diaz_metcalf_K;
    std::optional<double> K, rho, m, M, gamma, Gamma, theta;
    std::vector<double> profile;
    std::optional<ComplexVector> e;

    static HypothesisSpec diaz_metcalf(double K, ComplexVector e);
    static HypothesisSpec ball(double rho, ComplexVector e);
    static HypothesisSpec ball_profile(std::vector<double> r, ComplexVector e);
    static HypothesisSpec mM_with_e(double m, double M, ComplexVector e);
    static HypothesisSpec additive_profile(std::vector<double> k, ComplexVector e);
    static HypothesisSpec pairwise_mM(double m, double M);
    static HypothesisSpec pairwise_gamma(double gamma, double Gamma);
    static HypothesisSpec complex_componentwise(double m, double M);
    static HypothesisSpec karamata(double theta);

    /// Kind-specific parameter checks; throws InputError.
    void validate() const;
};

/// Grid-check outcome. holds <=> worst_margin >= -tol.
struct HypothesisReport {
    HypothesisKind kind = HypothesisKind::diaz_metcalf_K;
    bool holds = true;
    double worst_margin = 0.0;
    std::size_t worst_i = 0;
    std::optional<std::size_t> worst_j; // set for pairwise checks
    std::size_t points_checked = 0;
    // Dual-form checks: nodes or pairs where the two formulations disagree
    // (mM-with-e), or where the componentwise chain holds but the bilinear
    // form does not (complex-componentwise). Always 0 for a sound checker.
    std::size_t consistency_violations = 0;
};

HypothesisReport check_pointwise_e(const GridFunction& f, const HypothesisSpec& spec,
                                   double tol = kHypothesisTolerance);
HypothesisReport check_pairwise(const GridFunction& f, const HypothesisSpec& spec,
                                double tol = kHypothesisTolerance);
HypothesisReport check_complex_componentwise(const GridFunction& f, const HypothesisSpec& spec,
                                             double tol = kHypothesisTolerance);
HypothesisReport check_karamata(const GridFunction& f, double theta, double tol = kHypothesisTolerance);

/// Dispatches on spec.kind.
HypothesisReport check_hypothesis(const GridFunction& f, const HypothesisSpec& spec,
                                  double tol = kHypothesisTolerance);

/// Re<Z - x, x - z> with Z = upper * y, z = lower * y, computed coordinatewise.
double pair_form(const ComplexVector& x, const ComplexVector& y, double lower, double upper);

/// ||x - (Z + z)/2|| <= ||Z - z|| / 2 written as a slack: |upper - lower|/2 ||y|| - ||x - c y||.
double pair_ball_slack(const ComplexVector& x, const ComplexVector& y, double lower, double upper);

struct FormIndicators {
    bool bilinear_holds;
    bool ball_holds;
};
FormIndicators equivalence_indicators(const ComplexVector& x, const ComplexVector& y, double lower,
                                      double upper, double tol);

struct EquivalenceReport {
    std::size_t pairs_checked = 0;
    std::size_t disagreements = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_disagreement;
};

/// Compares the bilinear and the ball formulation of a pairwise hypothesis at
/// every node pair t <= s.
EquivalenceReport check_equivalence_forms(const GridFunction& f, const HypothesisSpec& spec,
                                          double tol = kHypothesisTolerance);

} // namespace revtri
