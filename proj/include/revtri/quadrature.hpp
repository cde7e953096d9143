#pragma once

#include "revtri/function_space.hpp"
#include "revtri/vector_core.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace revtri {

enum class QuadratureRule { simpson, trapezoid };

std::string_view to_string(QuadratureRule rule);
QuadratureRule quadrature_rule_from_string(std::string_view name);

struct QuadratureConfig {
    QuadratureRule rule = QuadratureRule::simpson;
    std::size_t intervals = kDefaultIntervals;
};

/// Composite weights w_0..w_N of the rule on the grid; they sum to b - a.
std::vector<double> rule_weights(const Grid& grid, QuadratureRule rule);

/// Quadrature of scalar node values.
double integrate_nodes(std::span<const double> values, const Grid& grid, const QuadratureConfig& cfg);

/// Componentwise quadrature of the node values of f.
ComplexVector bochner_integral(const GridFunction& f, const QuadratureConfig& cfg);

/// Quadrature of t -> ||f(t)||.
double integral_norm(const GridFunction& f, const QuadratureConfig& cfg);

/// Kernel on node pairs (i, j) with i <= j, i.e. t_i <= s_j.
using PairKernel = std::function<double(std::size_t i, std::size_t j)>;

/// Double integral over {(t, s) : a <= t <= s <= b}.
///
/// Uses the tensor product of the single-integral rule restricted to i <= j,
/// with weight 1/2 on the diagonal. For kernels symmetric in (t, s) this is
/// exactly half the full product rule, so (int ||f||)^2 - ||int f||^2 equals
/// twice the triangle integral of the Schwarz gap to rounding. Summation is
/// left to right within a row, rows in increasing i.
double triangle_integral(const PairKernel& kernel, const Grid& grid, const QuadratureConfig& cfg);

/// Quadrature of s -> weight(s) * ||f(s)||^2.
double weighted_norm_integral(const GridFunction& f, const std::function<double(double)>& weight,
                              const QuadratureConfig& cfg);

} // namespace revtri
