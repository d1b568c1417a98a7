#pragma once

#include <vector>

#include "qd/mobius.hpp"
#include "qd/polynomial.hpp"

namespace qd {

class InvalidRationalMap : public Error {
public:
    explicit InvalidRationalMap(const std::string& why) : Error("invalid rational map: " + why) {}
};

/// num(z) / den(z) on the Riemann sphere. Values are plain data; `checked`
/// enforces the nondegeneracy invariants.
template <typename Scalar>
class RationalMap {
public:
    using Complex = std::complex<Scalar>;
    using Poly = Polynomial<Scalar>;
    using Point = SpherePoint<Scalar>;

    static constexpr Scalar kLeadingTol = Scalar(1e-14);
    static constexpr Scalar kResultantTol = Scalar(1e-10);

    RationalMap() : num_(Poly::constant(0)), den_(Poly::constant(1)) {}
    RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw InvalidRationalMap("zero denominator");
    }

    static RationalMap checked(Poly num, Poly den) {
        RationalMap f(std::move(num), std::move(den));
        f.validate();
        return f;
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int degree() const { return std::max({num_.degree(), den_.degree(), 0}); }

    /// Throws InvalidRationalMap if a leading coefficient is negligible or
    /// num and den (nearly) share a root.
    void validate() const {
        const Scalar scale = std::max(num_.max_abs(), den_.max_abs());
        if (num_.degree() > 0 && std::abs(num_[num_.degree()]) <= kLeadingTol * scale)
            throw InvalidRationalMap("negligible leading numerator coefficient");
        if (den_.degree() > 0 && std::abs(den_[den_.degree()]) <= kLeadingTol * scale)
            throw InvalidRationalMap("negligible leading denominator coefficient");
        if (std::abs(normalized_resultant()) <= kResultantTol)
            throw InvalidRationalMap("numerator and denominator share a root");
    }

    /// Resultant of num and den after scaling each to unit max coefficient.
    Complex normalized_resultant() const {
        const int m = num_.degree(), n = den_.degree();
        if (m <= 0 || n <= 0) return Complex(1);
        const Poly p = num_ * Complex(1 / num_.max_abs());
        const Poly q = den_ * Complex(1 / den_.max_abs());
        Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> s =
            Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>::Zero(m + n, m + n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k <= m; ++k) s(i, i + k) = p[m - k];
        for (int i = 0; i < m; ++i)
            for (int k = 0; k <= n; ++k) s(n + i, i + k) = q[n - k];
        return s.determinant();
    }

    Point operator()(const Point& z) const {
        if (z.is_finite() && std::abs(z.value()) <= Scalar(1)) {
            const Complex x = z.value();
            const Complex d = den_(x);
            if (d == Complex(0)) return Point::infinity();
            return Point(num_(x) / d);
        }
        // Chart w = 1/z: f(1/w) = w^d num(1/w) / (w^d den(1/w)).
        const int d = degree();
        const Complex w = z.inverted();
        const Complex dd = den_.reversed(d)(w);
        if (dd == Complex(0)) return Point::infinity();
        return Point(num_.reversed(d)(w) / dd);
    }
    Point operator()(const Complex& z) const { return (*this)(Point(z)); }

    /// f'(z) at a finite point that is not a pole.
    Complex derivative_at(const Complex& z) const {
        const Complex n = num_(z), d = den_(z);
        return (num_.derivative()(z) * d - n * den_.derivative()(z)) / (d * d);
    }

    /// Numerator of f' before cancellation: num' den - num den'. Its zeros are
    /// exactly the finite critical points, poles of order k counting k-1 times.
    Poly wronskian() const { return num_.derivative() * den_ - num_ * den_.derivative(); }

    RationalMap derivative() const {
        const Poly w = wronskian();
        return RationalMap(w, den_ * den_);
    }

private:
    Poly num_, den_;
};

using RationalMapd = RationalMap<double>;

template <typename Scalar>
SpherePoint<Scalar> eval(const RationalMap<Scalar>& f, const SpherePoint<Scalar>& z) {
    return f(z);
}

template <typename Scalar>
RationalMap<Scalar> derivative(const RationalMap<Scalar>& f) {
    return f.derivative();
}

template <typename Scalar>
struct CriticalPoint {
    SpherePoint<Scalar> point;
    int local_degree = 2;
};

template <typename Scalar>
using CriticalSet = std::vector<CriticalPoint<Scalar>>;

/// All points of the sphere where f fails to be locally injective.
template <typename Scalar>
CriticalSet<Scalar> critical_points(const RationalMap<Scalar>& f, const RootOptions& opt = {}) {
    CriticalSet<Scalar> out;
    const int d = f.degree();
    if (d <= 1) return out;
    const auto w = f.wronskian();
    const int nominal = 2 * d - 2;
    // f' vanishes identically only for constant maps, excluded by d >= 1.
    const auto roots = find_roots(w, nominal, opt);
    for (std::size_t i = 0; i < roots.finite.size();) {
        std::size_t j = i;
        while (j < roots.finite.size() && roots.finite[j] == roots.finite[i]) ++j;
        out.push_back({SpherePoint<Scalar>(roots.finite[i]), int(j - i) + 1});
        i = j;
    }
    if (roots.at_infinity > 0) out.push_back({SpherePoint<Scalar>::infinity(), roots.at_infinity + 1});
    return out;
}

/// Multiplicity-weighted count of critical points (2d - 2 by Riemann-Hurwitz).
template <typename Scalar>
int critical_count(const CriticalSet<Scalar>& cs) {
    int n = 0;
    for (const auto& c : cs) n += c.local_degree - 1;
    return n;
}

/// All d solutions of f(z) = w, repeated according to multiplicity.
template <typename Scalar>
std::vector<SpherePoint<Scalar>> solve_fiber(const RationalMap<Scalar>& f, const SpherePoint<Scalar>& w,
                                             const RootOptions& opt = {}) {
    using Complex = std::complex<Scalar>;
    const int d = f.degree();
    Polynomial<Scalar> p;
    if (w.is_infinite()) {
        p = f.den();
    } else if (std::abs(w.value()) <= Scalar(1)) {
        p = f.num() - f.den() * w.value();
    } else {
        p = f.den() - f.num() * (Complex(1) / w.value());
    }
    if (p.is_zero()) throw RootFindingFailure("fiber equation vanishes identically");
    const auto roots = find_roots(p, d, opt);
    std::vector<SpherePoint<Scalar>> out;
    out.reserve(d);
    for (const auto& z : roots.finite) out.emplace_back(z);
    for (int k = 0; k < roots.at_infinity; ++k) out.push_back(SpherePoint<Scalar>::infinity());
    return out;
}

/// f o m as a rational map of the same degree.
template <typename Scalar>
RationalMap<Scalar> compose(const RationalMap<Scalar>& f, const Mobius<Scalar>& m) {
    using Poly = Polynomial<Scalar>;
    const int d = f.degree();
    const Poly top({m.b(), m.a()}), bottom({m.d(), m.c()});
    auto homogenize = [&](const Poly& p) {
        Poly acc;
        for (int k = 0; k <= d; ++k) {
            if (p[k] == std::complex<Scalar>(0)) continue;
            acc = acc + top.pow(k) * bottom.pow(d - k) * p[k];
        }
        return acc;
    };
    return RationalMap<Scalar>(homogenize(f.num()), homogenize(f.den()));
}

}  // namespace qd
