#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace revtri {

/// One term of a real scalar profile on [a, b]. The catalog is closed so
/// scenario files stay declarative.
struct ProfileTerm {
    enum class Kind { zero, constant, linear, sine, cosine, polynomial, exp, step };

    Kind kind = Kind::zero;
    // constant: value in c0. linear: c0 + slope * t.
    // sine/cosine: amplitude * sin(frequency * t + phase) (resp. cos).
    // polynomial: coefficients[k] * t^k. exp: amplitude * exp(rate * t).
    // step: left for t < at, right for t >= at.
    double c0 = 0.0;
    double slope = 0.0;
    double amplitude = 0.0;
    double frequency = 1.0;
    double phase = 0.0;
    double rate = 0.0;
    double at = 0.0;
    double left = 0.0;
    double right = 0.0;
    std::vector<double> coefficients;
};

/// A finite sum of catalog terms, t -> sum_k term_k(t).
class Profile {
public:
    Profile() = default;
    explicit Profile(std::vector<ProfileTerm> terms);

    static Profile zero();
    static Profile constant(double value);
    static Profile linear(double intercept, double slope);
    static Profile sine(double amplitude, double frequency, double phase = 0.0);
    static Profile cosine(double amplitude, double frequency, double phase = 0.0);
    static Profile polynomial(std::vector<double> coefficients);
    static Profile exponential(double amplitude, double rate);
    static Profile step(double at, double left, double right);

    Profile operator+(const Profile& other) const;

    double value(double t) const;
    /// Derivative; steps contribute zero (they are rejected where a derivative matters).
    double derivative(double t) const;
    /// True iff every term is differentiable everywhere.
    bool smooth() const;

    const std::vector<ProfileTerm>& terms() const noexcept { return terms_; }

private:
    std::vector<ProfileTerm> terms_;
};

std::string_view to_string(ProfileTerm::Kind kind);
ProfileTerm::Kind profile_kind_from_string(std::string_view name);

} // namespace revtri
