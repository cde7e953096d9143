#pragma once

#include "revtri/function_space.hpp"
#include "revtri/inequality.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace revtri {

enum class SearchFamily { ball, lagrange, constant_direction };

std::string_view to_string(SearchFamily family);
SearchFamily search_family_from_string(std::string_view name);

struct ParamRange {
    double lo;
    double hi;
};

/// Parametrized admissible families used by the search:
///   ball               f = e + rho cos(freq t + phase) u, e = (1, 0), u = (0, 1);
///                      derives rho, e.
///   lagrange           phi = exp(-(slope u + amp sin(freq u))); theta/Theta are
///                      the tightest bounds on psi' widened to contain 0;
///                      derives gamma, Gamma and m := gamma, M := Gamma, e = (1).
///   constant-direction f = (level + tilt (t - a)/(b - a)) e, e = (1, 0);
///                      derives e and K = 1.
/// Fixed parameters override derived ones.
struct FamilyInstance {
    GridFunction f;
    InequalityParams params;
};

FamilyInstance build_search_family(SearchFamily family, const std::map<std::string, double>& params,
                                   const Grid& grid);

struct SearchSpec {
    SearchFamily family = SearchFamily::ball;
    std::map<std::string, ParamRange> free_params;
    std::map<std::string, double> fixed_params;
    std::string inequality_id;
    std::size_t budget = 200;
    std::uint64_t seed = 0;
    std::size_t restarts = 8;
    std::size_t shrinks = 6;
    double a = 0.0;
    double b = 1.0;

    void validate() const;
};

struct SearchProbe {
    std::vector<double> point; // free parameters in name order
    double score;              // rel_gap, or -infinity when the hypothesis fails
};

struct SearchResult {
    std::map<std::string, double> params; // free and fixed
    InequalityReport report;
    std::size_t evaluations = 0;
    std::vector<SearchProbe> probes;
};

/// Derivative-free coordinate search with random restarts that maximizes the
/// relative gap of the target inequality. Restart 0 starts at the midpoint of
/// the ranges, the others at seeded uniform points. Each restart steps every
/// coordinate by +-step, halving the step `shrinks` times. Candidates whose
/// hypothesis fails score -infinity. Ties go to the lexicographically smaller
/// parameter vector. The result is exploratory: it says nothing about whether
/// the constants are best possible.
SearchResult maximize_relative_gap(const SearchSpec& spec, const EvalContext& ctx);

/// A function attaining equality in the target inequality, with the
/// parameters needed to evaluate it. Supported ids: multiplicative-K (K = 1),
/// quadratic-mM and quadratic-ratio (m = M = 1), weighted-gamma
/// (gamma = Gamma = 1), additive-k (ball family with the saturating bound
/// k(t) = ||f(t)|| - Re<f(t), e>). Anything else throws UnsupportedError.
struct Witness {
    GridFunction f;
    InequalityParams params;
};

Witness equality_witness(std::string_view inequality_id, const std::map<std::string, double>& params,
                         double a, double b, std::size_t intervals);

/// k(t) = ||f(t)|| - Re<f(t), e> at the nodes, clamped at 0 against rounding.
std::vector<double> saturating_bound(const GridFunction& f, const ComplexVector& e);

} // namespace revtri
