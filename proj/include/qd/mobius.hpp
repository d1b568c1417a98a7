#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>

#include "qd/sphere_point.hpp"

namespace qd {

/// z -> (a z + b) / (c z + d), stored as a 2x2 complex matrix whose largest
/// entry has modulus 1.
template <typename Scalar>
class Mobius {
public:
    using Complex = std::complex<Scalar>;
    using Matrix = Eigen::Matrix<Complex, 2, 2>;
    using Point = SpherePoint<Scalar>;

    static constexpr Scalar kDegeneracyTol = Scalar(1e-14);

    Mobius() : m_(Matrix::Identity()) {}
    Mobius(Complex a, Complex b, Complex c, Complex d) {
        m_ << a, b, c, d;
        normalize();
    }
    explicit Mobius(const Matrix& m) : m_(m) { normalize(); }

    static Mobius identity() { return Mobius(); }

    const Matrix& matrix() const { return m_; }
    Complex a() const { return m_(0, 0); }
    Complex b() const { return m_(0, 1); }
    Complex c() const { return m_(1, 0); }
    Complex d() const { return m_(1, 1); }
    Complex det() const { return m_.determinant(); }

    Point operator()(const Point& z) const {
        if (z.is_infinite()) {
            if (c() == Complex(0)) return Point::infinity();
            return Point(a() / c());
        }
        const Complex& x = z.value();
        Complex num, den;
        if (std::abs(x) > Scalar(1)) {
            const Complex w = Scalar(1) / x;
            num = a() + b() * w;
            den = c() + d() * w;
        } else {
            num = a() * x + b();
            den = c() * x + d();
        }
        if (den == Complex(0)) return Point::infinity();
        return Point(num / den);
    }

    /// Complex derivative at a finite point that is not the pole.
    Complex derivative(const Complex& z) const {
        const Complex den = c() * z + d();
        return det() / (den * den);
    }

    Mobius inverse() const { return Mobius(d(), -b(), -c(), a()); }

    /// Composition: (f * g)(z) = f(g(z)).
    friend Mobius operator*(const Mobius& f, const Mobius& g) { return Mobius(Matrix(f.m_ * g.m_)); }

    /// The unique map sending src[k] to dst[k], k = 0..2.
    static Mobius from_triple(const std::array<Point, 3>& src, const std::array<Point, 3>& dst) {
        try {
            return to_standard(dst).inverse() * to_standard(src);
        } catch (const DegenerateMap&) {
            throw DegenerateTriple();
        }
    }

    /// Map sending (z1, z2, z3) to (0, 1, infinity).
    static Mobius to_standard(const std::array<Point, 3>& z) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (spherical_distance(z[i], z[j]) <= kDegeneracyTol) throw DegenerateTriple();
        const Complex one(1), zero(0);
        if (z[0].is_infinite()) {
            const Complex z2 = z[1].value(), z3 = z[2].value();
            return Mobius(zero, z2 - z3, one, -z3);
        }
        if (z[1].is_infinite()) {
            const Complex z1 = z[0].value(), z3 = z[2].value();
            return Mobius(one, -z1, one, -z3);
        }
        if (z[2].is_infinite()) {
            const Complex z1 = z[0].value(), z2 = z[1].value();
            return Mobius(one, -z1, zero, z2 - z1);
        }
        const Complex z1 = z[0].value(), z2 = z[1].value(), z3 = z[2].value();
        return Mobius(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1));
    }

private:
    void normalize() {
        Scalar scale = 0;
        for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(m_(i)));
        if (scale == Scalar(0) || !std::isfinite(scale)) throw DegenerateMap();
        m_ /= Complex(scale);
        if (std::abs(m_.determinant()) <= kDegeneracyTol) throw DegenerateMap();
    }

    Matrix m_;
};

using Mobiusd = Mobius<double>;

template <typename Scalar>
Mobius<Scalar> mobius_from_triple(const std::array<SpherePoint<Scalar>, 3>& src,
                                  const std::array<SpherePoint<Scalar>, 3>& dst) {
    return Mobius<Scalar>::from_triple(src, dst);
}

template <typename Scalar>
SpherePoint<Scalar> apply_mobius(const Mobius<Scalar>& m, const SpherePoint<Scalar>& z) {
    return m(z);
}

}  // namespace qd
