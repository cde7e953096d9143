#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace revtri {

using Scalar = std::complex<double>;

/// An element of C^n, the finite-dimensional model of the Hilbert space.
///
/// Coordinates are validated at construction: dim >= 1 and every component
/// finite. Real problems are embedded with zero imaginary parts.
class ComplexVector {
public:
    explicit ComplexVector(std::vector<Scalar> coords);
    ComplexVector(std::initializer_list<Scalar> coords);

    /// Zero vector of the given dimension.
    static ComplexVector zeros(std::size_t dim);
    /// k-th canonical basis vector.
    static ComplexVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const noexcept { return coords_.size(); }
    std::span<const Scalar> coords() const noexcept { return coords_; }
    const Scalar& operator[](std::size_t k) const { return coords_[k]; }

    ComplexVector& operator+=(const ComplexVector& other);
    ComplexVector& operator-=(const ComplexVector& other);
    ComplexVector& operator*=(Scalar c);

    friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

private:
    std::vector<Scalar> coords_;
};

ComplexVector operator+(ComplexVector x, const ComplexVector& y);
ComplexVector operator-(ComplexVector x, const ComplexVector& y);
ComplexVector operator*(Scalar c, ComplexVector x);
ComplexVector operator*(double c, ComplexVector x);

// The inner product is linear in the first argument and conjugate-linear in
// the second: <x, y> = sum_k x_k * conj(y_k).
Scalar inner(const ComplexVector& x, const ComplexVector& y);
double re_inner(const ComplexVector& x, const ComplexVector& y);
double norm(const ComplexVector& x);
double norm_squared(const ComplexVector& x);

/// ||x|| ||y|| - Re<x, y>, nonnegative by Cauchy-Schwarz.
double schwarz_gap(const ComplexVector& x, const ComplexVector& y);

} // namespace revtri
