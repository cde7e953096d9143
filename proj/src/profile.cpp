#include "revtri/profile.hpp"

#include "revtri/errors.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace revtri {

namespace {

constexpr std::array<std::pair<ProfileTerm::Kind, std::string_view>, 8> kKindNames{{
    {ProfileTerm::Kind::zero, "zero"},
    {ProfileTerm::Kind::constant, "constant"},
    {ProfileTerm::Kind::linear, "linear"},
    {ProfileTerm::Kind::sine, "sine"},
    {ProfileTerm::Kind::cosine, "cosine"},
    {ProfileTerm::Kind::polynomial, "polynomial"},
    {ProfileTerm::Kind::exp, "exp"},
    {ProfileTerm::Kind::step, "step"},
}};

double term_value(const ProfileTerm& p, double t) {
    using K = ProfileTerm::Kind;
    switch (p.kind) {
    case K::zero: return 0.0;
    case K::constant: return p.c0;
    case K::linear: return p.c0 + p.slope * t;
    case K::sine: return p.amplitude * std::sin(p.frequency * t + p.phase);
    case K::cosine: return p.amplitude * std::cos(p.frequency * t + p.phase);
    case K::polynomial: {
        // Horner
        double acc = 0.0;
        for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) acc = acc * t + *it;
        return acc;
    }
    case K::exp: return p.amplitude * std::exp(p.rate * t);
    case K::step: return t < p.at ? p.left : p.right;
    }
    return 0.0;
}

double term_derivative(const ProfileTerm& p, double t) {
    using K = ProfileTerm::Kind;
    switch (p.kind) {
    case K::zero:
    case K::constant:
    case K::step: return 0.0;
    case K::linear: return p.slope;
    case K::sine: return p.amplitude * p.frequency * std::cos(p.frequency * t + p.phase);
    case K::cosine: return -p.amplitude * p.frequency * std::sin(p.frequency * t + p.phase);
    case K::polynomial: {
        double acc = 0.0;
        for (std::size_t k = p.coefficients.size(); k-- > 1;) acc = acc * t + static_cast<double>(k) * p.coefficients[k];
        return acc;
    }
    case K::exp: return p.amplitude * p.rate * std::exp(p.rate * t);
    }
    return 0.0;
}

ProfileTerm make(ProfileTerm::Kind kind) {
    ProfileTerm t;
    t.kind = kind;
    return t;
}

} // namespace

Profile::Profile(std::vector<ProfileTerm> terms) : terms_(std::move(terms)) {}

Profile Profile::zero() { return Profile({make(ProfileTerm::Kind::zero)}); }

Profile Profile::constant(double value) {
    auto t = make(ProfileTerm::Kind::constant);
    t.c0 = value;
    return Profile({t});
}

Profile Profile::linear(double intercept, double slope) {
    auto t = make(ProfileTerm::Kind::linear);
    t.c0 = intercept;
    t.slope = slope;
    return Profile({t});
}

Profile Profile::sine(double amplitude, double frequency, double phase) {
    auto t = make(ProfileTerm::Kind::sine);
    t.amplitude = amplitude;
    t.frequency = frequency;
    t.phase = phase;
    return Profile({t});
}

Profile Profile::cosine(double amplitude, double frequency, double phase) {
    auto t = make(ProfileTerm::Kind::cosine);
    t.amplitude = amplitude;
    t.frequency = frequency;
    t.phase = phase;
    return Profile({t});
}

Profile Profile::polynomial(std::vector<double> coefficients) {
    auto t = make(ProfileTerm::Kind::polynomial);
    t.coefficients = std::move(coefficients);
    return Profile({t});
}

Profile Profile::exponential(double amplitude, double rate) {
    auto t = make(ProfileTerm::Kind::exp);
    t.amplitude = amplitude;
    t.rate = rate;
    return Profile({t});
}

Profile Profile::step(double at, double left, double right) {
    auto t = make(ProfileTerm::Kind::step);
    t.at = at;
    t.left = left;
    t.right = right;
    return Profile({t});
}

Profile Profile::operator+(const Profile& other) const {
    auto terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return Profile(std::move(terms));
}

double Profile::value(double t) const {
    double acc = 0.0;
    for (const auto& term : terms_) acc += term_value(term, t);
    return acc;
}

double Profile::derivative(double t) const {
    double acc = 0.0;
    for (const auto& term : terms_) acc += term_derivative(term, t);
    return acc;
}

bool Profile::smooth() const {
    for (const auto& term : terms_) {
        if (term.kind == ProfileTerm::Kind::step) return false;
    }
    return true;
}

std::string_view to_string(ProfileTerm::Kind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "zero";
}

ProfileTerm::Kind profile_kind_from_string(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    throw InputError("unknown profile kind '" + std::string(name) + "'");
}

} // namespace revtri
