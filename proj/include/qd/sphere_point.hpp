#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateTriple : public Error {
public:
    DegenerateTriple() : Error("degenerate triple: two points coincide") {}
};

class DegenerateMap : public Error {
public:
    DegenerateMap() : Error("degenerate Mobius map: ad - bc vanishes") {}
};

/// A point of the Riemann sphere: a finite complex value or the point at infinity.
template <typename Scalar>
class SpherePoint {
public:
    using Complex = std::complex<Scalar>;

    SpherePoint() = default;
    SpherePoint(Complex z) : z_(z) {  // NOLINT(google-explicit-constructor)
        if (std::isnan(z.real()) || std::isnan(z.imag()))
            throw Error("SpherePoint: NaN coordinate");
        if (std::isinf(z.real()) || std::isinf(z.imag())) {
            z_ = Complex(0);
            inf_ = true;
        }
    }
    SpherePoint(Scalar re, Scalar im = 0) : SpherePoint(Complex(re, im)) {}

    static SpherePoint infinity() {
        SpherePoint p;
        p.inf_ = true;
        return p;
    }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }

    /// The finite value; meaningless for infinity.
    const Complex& value() const { return z_; }

    /// Coordinate in the chart w = 1/z (0 at infinity).
    Complex inverted() const {
        if (inf_) return Complex(0);
        return Scalar(1) / z_;
    }

    SpherePoint conj() const { return inf_ ? *this : SpherePoint(std::conj(z_)); }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.z_ == b.z_;
    }

    friend std::ostream& operator<<(std::ostream& os, const SpherePoint& p) {
        if (p.inf_) return os << "inf";
        return os << p.z_;
    }

private:
    Complex z_{0};
    bool inf_ = false;
};

using SpherePointd = SpherePoint<double>;

/// Chordal metric 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)), extended to infinity.
template <typename Scalar>
Scalar spherical_distance(const SpherePoint<Scalar>& a, const SpherePoint<Scalar>& b) {
    if (a.is_infinite() && b.is_infinite()) return Scalar(0);
    if (a.is_infinite()) return Scalar(2) / std::sqrt(Scalar(1) + std::norm(b.value()));
    if (b.is_infinite()) return Scalar(2) / std::sqrt(Scalar(1) + std::norm(a.value()));
    const auto& z = a.value();
    const auto& w = b.value();
    // Large points are compared in the inverted chart, where the formula is symmetric.
    if (std::abs(z) > Scalar(1) && std::abs(w) > Scalar(1)) {
        const auto zi = Scalar(1) / z, wi = Scalar(1) / w;
        return Scalar(2) * std::abs(zi - wi) /
               std::sqrt((Scalar(1) + std::norm(zi)) * (Scalar(1) + std::norm(wi)));
    }
    return Scalar(2) * std::abs(z - w) /
           std::sqrt((Scalar(1) + std::norm(z)) * (Scalar(1) + std::norm(w)));
}

}  // namespace qd
