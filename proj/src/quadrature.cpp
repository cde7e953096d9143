#include "revtri/quadrature.hpp"

#include "revtri/errors.hpp"

#include <string>

namespace revtri {

namespace {

void require_matching(const Grid& grid, const QuadratureConfig& cfg) {
    if (grid.intervals() != cfg.intervals) {
        throw InputError("quadrature: grid has N = " + std::to_string(grid.intervals()) +
                         " but config expects N = " + std::to_string(cfg.intervals));
    }
}

} // namespace

std::string_view to_string(QuadratureRule rule) {
    return rule == QuadratureRule::simpson ? "simpson" : "trapezoid";
}

QuadratureRule quadrature_rule_from_string(std::string_view name) {
    if (name == "simpson" || name == "composite-simpson") return QuadratureRule::simpson;
    if (name == "trapezoid") return QuadratureRule::trapezoid;
    throw InputError("unknown quadrature rule '" + std::string(name) + "'");
}

std::vector<double> rule_weights(const Grid& grid, QuadratureRule rule) {
    const std::size_t n = grid.intervals();
    const double h = grid.step();
    std::vector<double> w(n + 1);
    if (rule == QuadratureRule::trapezoid) {
        for (std::size_t i = 0; i <= n; ++i) w[i] = h;
        w[0] = w[n] = 0.5 * h;
        return w;
    }
    // Grid guarantees even N.
    for (std::size_t i = 0; i <= n; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    w[0] = w[n] = h / 3.0;
    return w;
}

double integrate_nodes(std::span<const double> values, const Grid& grid, const QuadratureConfig& cfg) {
    require_matching(grid, cfg);
    if (values.size() != grid.size()) throw InputError("quadrature: node count does not match grid");
    const auto w = rule_weights(grid, cfg.rule);
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += w[i] * values[i];
    return acc;
}

ComplexVector bochner_integral(const GridFunction& f, const QuadratureConfig& cfg) {
    require_matching(f.grid(), cfg);
    const auto w = rule_weights(f.grid(), cfg.rule);
    std::vector<Scalar> acc(f.dim(), Scalar{0.0, 0.0});
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto c = f[i].coords();
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w[i] * c[k];
    }
    return ComplexVector(std::move(acc));
}

double integral_norm(const GridFunction& f, const QuadratureConfig& cfg) {
    return integrate_nodes(f.norms(), f.grid(), cfg);
}

double triangle_integral(const PairKernel& kernel, const Grid& grid, const QuadratureConfig& cfg) {
    require_matching(grid, cfg);
    const auto w = rule_weights(grid, cfg.rule);
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        double row = 0.5 * w[i] * kernel(i, i);
        for (std::size_t j = i + 1; j < w.size(); ++j) row += w[j] * kernel(i, j);
        total += w[i] * row;
    }
    return total;
}

double weighted_norm_integral(const GridFunction& f, const std::function<double(double)>& weight,
                              const QuadratureConfig& cfg) {
    std::vector<double> values(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double n = f.norms()[i];
        values[i] = weight(f.grid().node(i)) * n * n;
    }
    return integrate_nodes(values, f.grid(), cfg);
}

} // namespace revtri
