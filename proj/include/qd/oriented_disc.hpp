#pragma once

#include <array>
#include <limits>

#include "qd/mobius.hpp"

namespace qd {

enum class Containment { Inside, Boundary, Outside };

/// A disc of the Riemann sphere: the inside of a circle, the outside of a
/// circle, or a half-plane. The half-plane is stored as a boundary point and
/// a unit normal pointing into the interior.
template <typename Scalar>
class OrientedDisc {
public:
    using Complex = std::complex<Scalar>;
    using Point = SpherePoint<Scalar>;

    enum class Kind { Interior, Exterior, HalfPlane };

    static OrientedDisc interior(Complex center, Scalar radius) { return {Kind::Interior, center, radius}; }
    static OrientedDisc exterior(Complex center, Scalar radius) { return {Kind::Exterior, center, radius}; }
    static OrientedDisc half_plane(Complex point, Complex normal) {
        return {Kind::HalfPlane, point, Scalar(0), normal / std::abs(normal)};
    }
    static OrientedDisc unit() { return interior(Complex(0), Scalar(1)); }

    Kind kind() const { return kind_; }
    bool is_bounded() const { return kind_ == Kind::Interior; }
    const Complex& center() const { return center_; }  // boundary point for half-planes
    Scalar radius() const { return radius_; }
    const Complex& normal() const { return normal_; }

    /// Negative inside, positive outside, zero on the boundary circle or line.
    Scalar signed_distance(const Point& z) const {
        constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();
        switch (kind_) {
            case Kind::Interior:
                return z.is_infinite() ? inf : std::abs(z.value() - center_) - radius_;
            case Kind::Exterior:
                return z.is_infinite() ? -inf : radius_ - std::abs(z.value() - center_);
            case Kind::HalfPlane:
                if (z.is_infinite()) return Scalar(0);
                return -std::real((z.value() - center_) * std::conj(normal_));
        }
        return inf;
    }

    /// Three boundary points traversed with the interior on the left.
    std::array<Point, 3> boundary_triple() const {
        switch (kind_) {
            case Kind::Interior:
                return {Point(center_ + radius_), Point(center_ + Complex(0, radius_)), Point(center_ - radius_)};
            case Kind::Exterior:
                return {Point(center_ + radius_), Point(center_ - Complex(0, radius_)), Point(center_ - radius_)};
            case Kind::HalfPlane: {
                const Complex dir = normal_ * Complex(0, -1);
                return {Point::infinity(), Point(center_), Point(center_ + dir)};
            }
        }
        return {};
    }

    /// A Mobius map carrying the unit disc onto this disc.
    Mobius<Scalar> from_unit_disc() const {
        const std::array<Point, 3> unit_triple{Point(Complex(1)), Point(Complex(0, 1)), Point(Complex(-1))};
        return Mobius<Scalar>::from_triple(unit_triple, boundary_triple());
    }

private:
    OrientedDisc(Kind k, Complex c, Scalar r, Complex n = Complex(0)) : kind_(k), center_(c), radius_(r), normal_(n) {}

    Kind kind_;
    Complex center_;
    Scalar radius_;
    Complex normal_;
};

using OrientedDiscd = OrientedDisc<double>;

template <typename Scalar>
Containment disc_contains(const OrientedDisc<Scalar>& d, const SpherePoint<Scalar>& z, Scalar tol) {
    const Scalar s = d.signed_distance(z);
    if (std::abs(s) <= tol) return Containment::Boundary;
    return s < 0 ? Containment::Inside : Containment::Outside;
}

/// The disc bounded by the circle (or line) through z1, z2, z3 that lies to
/// the left when the boundary is traversed z1 -> z2 -> z3.
template <typename Scalar>
OrientedDisc<Scalar> disc_through(const SpherePoint<Scalar>& z1, const SpherePoint<Scalar>& z2,
                                  const SpherePoint<Scalar>& z3) {
    using Complex = std::complex<Scalar>;
    using Disc = OrientedDisc<Scalar>;
    constexpr Scalar tol = Scalar(1e-14);
    const std::array<SpherePoint<Scalar>, 3> z{z1, z2, z3};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (spherical_distance(z[i], z[j]) <= tol) throw DegenerateTriple();

    for (int k = 0; k < 3; ++k) {
        if (!z[k].is_infinite()) continue;
        // Cyclic rotation to (inf, p, q) keeps the orientation.
        const Complex p = z[(k + 1) % 3].value(), q = z[(k + 2) % 3].value();
        const Complex dir = (q - p) / std::abs(q - p);
        return Disc::half_plane(p, dir * Complex(0, 1));
    }

    const Complex a = z1.value(), b = z2.value(), c = z3.value();
    const Scalar cross = std::imag(std::conj(b - a) * (c - a));
    const Scalar scale = std::max({std::norm(b - a), std::norm(c - a), std::norm(c - b)});
    if (std::abs(cross) <= tol * scale) {
        // Collinear: the circle is the line through the three points, traversed
        // in the cyclic order they determine.
        Complex dir = c - a;
        if (std::norm(b - a) > std::norm(dir)) dir = b - a;
        dir /= std::abs(dir);
        const Scalar s1 = 0, s2 = std::real((b - a) * std::conj(dir)), s3 = std::real((c - a) * std::conj(dir));
        const bool forward = (s1 < s2 && s2 < s3) || (s2 < s3 && s3 < s1) || (s3 < s1 && s1 < s2);
        if (!forward) dir = -dir;
        return Disc::half_plane(a, dir * Complex(0, 1));
    }

    // Circumcenter relative to a.
    const Complex u = b - a, v = c - a;
    const Scalar den = Scalar(2) * cross;
    const Complex center = a + Complex(0, 1) * (u * std::norm(v) - v * std::norm(u)) / den;
    const Scalar radius = (std::abs(center - a) + std::abs(center - b) + std::abs(center - c)) / Scalar(3);
    return cross > 0 ? Disc::interior(center, radius) : Disc::exterior(center, radius);
}

}  // namespace qd
