#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <vector>

#include "qd/sphere_point.hpp"

namespace qd {

class RootFindingFailure : public Error {
public:
    explicit RootFindingFailure(const std::string& what) : Error("root finding failed: " + what) {}
};

/// Complex polynomial with coefficients in ascending powers.
template <typename Scalar>
class Polynomial {
public:
    using Complex = std::complex<Scalar>;
    using Coeffs = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    Polynomial() : c_(Coeffs::Zero(1)) {}
    explicit Polynomial(Coeffs c) : c_(std::move(c)) {
        if (c_.size() == 0) c_ = Coeffs::Zero(1);
        trim_exact();
    }
    Polynomial(std::initializer_list<Complex> c) : Polynomial(Coeffs(Eigen::Map<const Coeffs>(c.begin(), c.size()))) {}

    static Polynomial constant(Complex a) { return Polynomial({a}); }
    static Polynomial monomial(int k, Complex a = Complex(1)) {
        Coeffs c = Coeffs::Zero(k + 1);
        c(k) = a;
        return Polynomial(c);
    }

    const Coeffs& coeffs() const { return c_; }
    Complex operator[](int k) const { return k < c_.size() ? c_(k) : Complex(0); }

    /// Degree after dropping exact zeros; -1 for the zero polynomial.
    int degree() const { return is_zero() ? -1 : int(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_(0) == Complex(0); }

    Scalar max_abs() const { return c_.cwiseAbs().maxCoeff(); }

    /// Degree after dropping leading coefficients below rel_tol * max|coefficient|.
    int effective_degree(Scalar rel_tol) const {
        const Scalar m = max_abs();
        int d = degree();
        while (d > 0 && std::abs(c_(d)) <= rel_tol * m) --d;
        return d;
    }

    Complex operator()(const Complex& z) const {
        Complex acc(0);
        for (Eigen::Index k = c_.size() - 1; k >= 0; --k) acc = acc * z + c_(k);
        return acc;
    }

    /// Sum of |a_k| |z|^k, the natural scale for residuals at z.
    Scalar abs_bound(const Complex& z) const {
        const Scalar r = std::abs(z);
        Scalar acc(0);
        for (Eigen::Index k = c_.size() - 1; k >= 0; --k) acc = acc * r + std::abs(c_(k));
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        Coeffs d(c_.size() - 1);
        for (Eigen::Index k = 1; k < c_.size(); ++k) d(k - 1) = Scalar(k) * c_(k);
        return Polynomial(d);
    }

    /// Coefficients reversed against a nominal degree n >= degree(): z^n p(1/z).
    Polynomial reversed(int n) const {
        Coeffs r = Coeffs::Zero(n + 1);
        for (Eigen::Index k = 0; k < c_.size() && k <= n; ++k) r(n - k) = c_(k);
        return Polynomial(r);
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        Coeffs r = Coeffs::Zero(std::max(p.c_.size(), q.c_.size()));
        r.head(p.c_.size()) += p.c_;
        r.head(q.c_.size()) += q.c_;
        return Polynomial(r);
    }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + q * Complex(-1); }
    friend Polynomial operator*(const Polynomial& p, Complex s) { return Polynomial(Coeffs(p.c_ * s)); }
    friend Polynomial operator*(Complex s, const Polynomial& p) { return p * s; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        Coeffs r = Coeffs::Zero(p.c_.size() + q.c_.size() - 1);
        for (Eigen::Index i = 0; i < p.c_.size(); ++i) r.segment(i, q.c_.size()) += p.c_(i) * q.c_;
        return Polynomial(r);
    }

    Polynomial pow(int k) const {
        Polynomial r = constant(Complex(1));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

private:
    void trim_exact() {
        Eigen::Index n = c_.size();
        while (n > 1 && c_(n - 1) == Complex(0)) --n;
        c_.conservativeResize(n);
    }

    Coeffs c_;
};

using Polynomiald = Polynomial<double>;

struct RootOptions {
    double leading_tol = 1e-14;   // relative threshold for dropping leading coefficients
    int polish_steps = 3;
    double cluster_tol = 1e-7;    // roots closer than this (relative) are merged
    double residual_tol = 1e-10;  // relative residual required after polishing
};

/// Roots of p counted with multiplicity, plus the number of roots at infinity
/// implied by leading coefficients that vanish against a nominal degree.
template <typename Scalar>
struct RootSet {
    std::vector<std::complex<Scalar>> finite;
    int at_infinity = 0;
};

namespace detail {

// Parlett-Reinsch diagonal balancing, radix 2.
template <typename Matrix>
void balance(Matrix& a) {
    using Real = typename Eigen::NumTraits<typename Matrix::Scalar>::Real;
    const Eigen::Index n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            Real c = 0, r = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0 || r == 0) continue;
            Real g = r / 2, f = 1, s = c + r;
            while (c < g) {
                f *= 2;
                c *= 4;
            }
            g = r * 2;
            while (c > g) {
                f /= 2;
                c /= 4;
            }
            if ((c + r) / f < Real(0.95) * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

}  // namespace detail

/// Companion-matrix eigenvalues, Newton polish, then clustering of near-equal
/// roots into exact repeats at their mean.
template <typename Scalar>
RootSet<Scalar> find_roots(const Polynomial<Scalar>& p, int nominal_degree = -1, const RootOptions& opt = {}) {
    using Complex = std::complex<Scalar>;
    RootSet<Scalar> out;
    if (p.is_zero()) throw RootFindingFailure("zero polynomial");
    const int n = p.effective_degree(Scalar(opt.leading_tol));
    if (nominal_degree < 0) nominal_degree = p.degree();
    out.at_infinity = nominal_degree - n;
    if (n <= 0) return out;

    const Complex lead = p[n];
    std::vector<Complex> roots;
    if (n == 1) {
        roots.push_back(-p[0] / lead);
    } else {
        Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> comp =
            Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
        for (int i = 1; i < n; ++i) comp(i, i - 1) = Complex(1);
        for (int i = 0; i < n; ++i) comp(i, n - 1) = -p[i] / lead;
        detail::balance(comp);
        Eigen::ComplexEigenSolver<decltype(comp)> es(comp, false);
        if (es.info() != Eigen::Success) throw RootFindingFailure("eigenvalue iteration did not converge");
        for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
    }

    // Truncated polynomial actually solved.
    typename Polynomial<Scalar>::Coeffs tc = p.coeffs().head(n + 1);
    const Polynomial<Scalar> q(tc);
    const Polynomial<Scalar> dq = q.derivative();
    for (auto& z : roots) {
        Scalar res = std::abs(q(z));
        for (int s = 0; s < opt.polish_steps && res > 0; ++s) {
            const Complex d = dq(z);
            if (d == Complex(0)) break;
            const Complex next = z - q(z) / d;
            const Scalar next_res = std::abs(q(next));
            if (!(next_res < res)) break;
            z = next;
            res = next_res;
        }
    }

    // Cluster: greedy single-linkage within cluster_tol * max(1, |z|).
    std::vector<int> label(roots.size(), -1);
    int nl = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (label[i] >= 0) continue;
        label[i] = nl;
        bool grown = true;
        while (grown) {
            grown = false;
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (label[j] >= 0) continue;
                for (std::size_t k = 0; k < roots.size(); ++k) {
                    if (label[k] != nl) continue;
                    const Scalar scale = std::max(Scalar(1), std::abs(roots[k]));
                    if (std::abs(roots[j] - roots[k]) <= Scalar(opt.cluster_tol) * scale) {
                        label[j] = nl;
                        grown = true;
                        break;
                    }
                }
            }
        }
        ++nl;
    }
    for (int l = 0; l < nl; ++l) {
        Complex sum(0);
        int count = 0;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (label[i] == l) {
                sum += roots[i];
                ++count;
            }
        const Complex mean = sum / Scalar(count);
        const Scalar res = std::abs(q(mean));
        const Scalar rel = res == Scalar(0) ? Scalar(0) : res / q.abs_bound(mean);
        if (!(rel < Scalar(opt.residual_tol)))
            throw RootFindingFailure("residual " + std::to_string(double(rel)) + " above tolerance");
        for (int c = 0; c < count; ++c) out.finite.push_back(mean);
    }
    return out;
}

}  // namespace qd
