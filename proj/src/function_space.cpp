#include "revtri/function_space.hpp"

#include "revtri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace revtri {

Grid::Grid(double a, double b, std::size_t intervals) : a_(a), b_(b), n_(intervals) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw InputError("grid: require finite a < b");
    }
    if (intervals < 2 || intervals % 2 != 0) {
        throw InputError("grid: N must be even and >= 2, got " + std::to_string(intervals));
    }
}

double Grid::node(std::size_t i) const {
    if (i > n_) throw InputError("grid node index out of range");
    if (i == n_) return b_;
    return a_ + (b_ - a_) * (static_cast<double>(i) / static_cast<double>(n_));
}

GridFunction::GridFunction(Grid grid, std::vector<ComplexVector> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw InputError("grid function: expected " + std::to_string(grid_.size()) + " values, got " +
                         std::to_string(values_.size()));
    }
    const auto d = values_.front().dim();
    norms_.reserve(values_.size());
    for (const auto& v : values_) {
        if (v.dim() != d) throw InputError("grid function: values must share one dimension");
        norms_.push_back(norm(v));
    }
}

GridFunction GridFunction::scaled(double c) const {
    std::vector<ComplexVector> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(c * v);
    return GridFunction(grid_, std::move(out));
}

GridFunction sample(const Evaluator& f, const Grid& grid) {
    std::vector<ComplexVector> values;
    values.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values.push_back(f(grid.node(i)));
    return GridFunction(grid, std::move(values));
}

GridFunction sample(const Evaluator& f, double a, double b, std::size_t intervals) {
    return sample(f, Grid(a, b, intervals));
}

std::vector<double> sample_profile(const Profile& p, const Grid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = p.value(grid.node(i));
    return out;
}

Evaluator component_evaluator(std::vector<ComponentProfiles> components) {
    if (components.empty()) throw InputError("vector family needs at least one component");
    return [components = std::move(components)](double t) {
        std::vector<Scalar> c;
        c.reserve(components.size());
        for (const auto& comp : components) c.emplace_back(comp.re.value(t), comp.im.value(t));
        return ComplexVector(std::move(c));
    };
}

Evaluator scalar_multiple_evaluator(Profile phi, ComplexVector direction) {
    return [phi = std::move(phi), direction = std::move(direction)](double t) {
        return phi.value(t) * direction;
    };
}

bool is_unit(const ComplexVector& v) { return std::abs(norm(v) - 1.0) <= kUnitTolerance; }

LagrangeFamily make_lagrange_family(const LagrangeFamilySpec& spec, std::size_t intervals) {
    if (!(spec.Theta >= 0.0) || !(spec.theta <= 0.0)) {
        throw InputError("lagrange family: require Theta >= 0 >= theta");
    }
    for (const auto& term : spec.psi.terms()) {
        using K = ProfileTerm::Kind;
        if (term.kind != K::zero && term.kind != K::constant && term.kind != K::linear &&
            term.kind != K::sine && term.kind != K::polynomial) {
            throw InputError("lagrange family: psi term '" + std::string(to_string(term.kind)) +
                             "' is not in the psi catalog (zero, constant, linear, sine, polynomial)");
        }
    }
    const Grid grid(spec.a, spec.b, intervals);

    // psi' is checked on a validation grid 16x finer than the output grid.
    const std::size_t fine = std::max<std::size_t>(4096, 16 * intervals);
    const double scale = std::max({1.0, std::abs(spec.theta), std::abs(spec.Theta)});
    const double slack = 1e-12 * scale;
    for (std::size_t i = 0; i <= fine; ++i) {
        const double u = spec.a + (spec.b - spec.a) * (static_cast<double>(i) / static_cast<double>(fine));
        const double d = spec.psi.derivative(u);
        if (d < spec.theta - slack || d > spec.Theta + slack) {
            throw InputError("lagrange family: psi'(" + std::to_string(u) + ") = " + std::to_string(d) +
                             " outside [theta, Theta]");
        }
    }

    const double width = spec.b - spec.a;
    auto f = sample(
        [&](double t) { return std::exp(-spec.psi.value(t)) * spec.direction; }, grid);
    return LagrangeFamily{std::move(f), std::exp(spec.theta * width), std::exp(spec.Theta * width)};
}

GridFunction make_ball_family(const BallFamilySpec& spec, double a, double b, std::size_t intervals) {
    if (!is_unit(spec.e)) throw InputError("ball family: e must be a unit vector");
    if (!is_unit(spec.u)) throw InputError("ball family: u must be a unit vector");
    if (spec.e.dim() != spec.u.dim()) throw InputError("ball family: e and u dimensions differ");
    if (std::abs(re_inner(spec.u, spec.e)) > kUnitTolerance) {
        throw InputError("ball family: u must satisfy Re<u, e> = 0");
    }
    if (!(spec.rho > 0.0 && spec.rho < 1.0)) throw InputError("ball family: rho must lie in (0, 1)");

    const Grid grid(a, b, intervals);
    std::vector<ComplexVector> values;
    values.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double m = spec.modulation.value(grid.node(i));
        if (!(std::abs(m) <= 1.0)) {
            throw InputError("ball family: modulation leaves [-1, 1] at node " + std::to_string(i));
        }
        values.push_back(spec.e + (spec.rho * m) * spec.u);
    }
    return GridFunction(grid, std::move(values));
}

} // namespace revtri
