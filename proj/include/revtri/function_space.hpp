#pragma once

#include "revtri/profile.hpp"
#include "revtri/vector_core.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace revtri {

/// Uniform grid t_0 = a, ..., t_N = b with N >= 2 even.
class Grid {
public:
    Grid(double a, double b, std::size_t intervals);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    std::size_t intervals() const noexcept { return n_; }
    std::size_t size() const noexcept { return n_ + 1; }
    double step() const noexcept { return (b_ - a_) / static_cast<double>(n_); }
    /// The last node is exactly b.
    double node(std::size_t i) const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    double a_;
    double b_;
    std::size_t n_;
};

constexpr std::size_t kDefaultIntervals = 256;

/// A vector-valued function on [a, b] known only through its node values.
/// Immutable after construction.
class GridFunction {
public:
    GridFunction(Grid grid, std::vector<ComplexVector> values);

    const Grid& grid() const noexcept { return grid_; }
    std::size_t dim() const noexcept { return values_.front().dim(); }
    std::size_t size() const noexcept { return values_.size(); }
    const ComplexVector& operator[](std::size_t i) const { return values_[i]; }
    std::span<const ComplexVector> values() const noexcept { return values_; }
    /// ||f(t_i)|| for every node.
    std::span<const double> norms() const noexcept { return norms_; }

    /// c * f, c real.
    GridFunction scaled(double c) const;

private:
    Grid grid_;
    std::vector<ComplexVector> values_;
    std::vector<double> norms_;
};

using Evaluator = std::function<ComplexVector(double)>;

GridFunction sample(const Evaluator& f, double a, double b, std::size_t intervals);
GridFunction sample(const Evaluator& f, const Grid& grid);

/// Node values of a scalar profile.
std::vector<double> sample_profile(const Profile& p, const Grid& grid);

/// f(t) = sum_k (re_k(t) + i im_k(t)) e_k, one pair of profiles per coordinate.
struct ComponentProfiles {
    Profile re;
    Profile im = Profile::zero();
};
Evaluator component_evaluator(std::vector<ComponentProfiles> components);

/// f(t) = phi(t) * direction.
Evaluator scalar_multiple_evaluator(Profile phi, ComplexVector direction);

/// phi(t) = exp(-psi(t)) with theta <= psi' <= Theta on (a, b), theta <= 0 <= Theta.
struct LagrangeFamilySpec {
    Profile psi;
    double theta = 0.0;
    double Theta = 0.0;
    double a = 0.0;
    double b = 1.0;
    /// The scalar phi is multiplied by this vector; defaults to the scalar 1.
    ComplexVector direction{Scalar{1.0, 0.0}};
};

struct LagrangeFamily {
    GridFunction f;
    double gamma;
    double Gamma;
};

/// Builds phi = exp(-psi) and its ratio bounds gamma = exp(theta (b-a)),
/// Gamma = exp(Theta (b-a)). The derivative bound on psi is validated on a
/// grid much finer than the output grid; violations throw InputError.
LagrangeFamily make_lagrange_family(const LagrangeFamilySpec& spec, std::size_t intervals);

/// f(t) = e + rho * modulation(t) * u with ||e|| = ||u|| = 1, Re<u, e> = 0
/// and |modulation| <= 1, so ||f(t) - e|| <= rho.
struct BallFamilySpec {
    ComplexVector e;
    double rho = 0.5;
    ComplexVector u;
    Profile modulation = Profile::zero();
};

GridFunction make_ball_family(const BallFamilySpec& spec, double a, double b, std::size_t intervals);

/// Unit-vector tolerance used by every e-based construction and check.
constexpr double kUnitTolerance = 1e-12;
bool is_unit(const ComplexVector& v);

} // namespace revtri
