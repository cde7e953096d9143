#include "revtri/vector_core.hpp"

#include "revtri/errors.hpp"

#include <cmath>
#include <string>

namespace revtri {

namespace {

void require_finite(const std::vector<Scalar>& coords) {
    if (coords.empty()) {
        throw InputError("ComplexVector: dimension must be at least 1");
    }
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!std::isfinite(coords[k].real()) || !std::isfinite(coords[k].imag())) {
            throw InputError("ComplexVector: non-finite coordinate at index " + std::to_string(k));
        }
    }
}

void require_same_dim(const ComplexVector& x, const ComplexVector& y) {
    if (x.dim() != y.dim()) {
        throw InputError("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()));
    }
}

} // namespace

ComplexVector::ComplexVector(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    require_finite(coords_);
}

ComplexVector::ComplexVector(std::initializer_list<Scalar> coords) : coords_(coords) {
    require_finite(coords_);
}

ComplexVector ComplexVector::zeros(std::size_t dim) {
    return ComplexVector(std::vector<Scalar>(dim, Scalar{0.0, 0.0}));
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw InputError("basis index out of range");
    }
    std::vector<Scalar> c(dim, Scalar{0.0, 0.0});
    c[k] = 1.0;
    return ComplexVector(std::move(c));
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
    return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
    require_same_dim(*this, other);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
    return *this;
}

ComplexVector& ComplexVector::operator*=(Scalar c) {
    for (auto& z : coords_) z *= c;
    require_finite(coords_);
    return *this;
}

ComplexVector operator+(ComplexVector x, const ComplexVector& y) { return x += y; }
ComplexVector operator-(ComplexVector x, const ComplexVector& y) { return x -= y; }
ComplexVector operator*(Scalar c, ComplexVector x) { return x *= c; }
ComplexVector operator*(double c, ComplexVector x) { return x *= Scalar{c, 0.0}; }

Scalar inner(const ComplexVector& x, const ComplexVector& y) {
    require_same_dim(x, y);
    Scalar acc{0.0, 0.0};
    for (std::size_t k = 0; k < x.dim(); ++k) acc += x[k] * std::conj(y[k]);
    return acc;
}

double re_inner(const ComplexVector& x, const ComplexVector& y) {
    require_same_dim(x, y);
    double acc = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) {
        acc += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    }
    return acc;
}

double norm_squared(const ComplexVector& x) {
    double acc = 0.0;
    for (const auto& z : x.coords()) acc += std::norm(z);
    return acc;
}

double norm(const ComplexVector& x) { return std::sqrt(norm_squared(x)); }

double schwarz_gap(const ComplexVector& x, const ComplexVector& y) {
    return norm(x) * norm(y) - re_inner(x, y);
}

} // namespace revtri
