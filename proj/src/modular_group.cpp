#include "qd/modular_group.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qd {

using Complex = std::complex<double>;

GroupElement::GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : m_{a, b, c, d} {
    if (a * d - b * c != 1) throw Error("GroupElement: determinant must be 1");
    for (auto x : m_) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : m_) y = -y;
        break;
    }
}

GroupElement GroupElement::generator(char letter) {
    switch (letter) {
        case 'a': return alpha();
        case 'b': return beta();
        case 'B': return beta_inv();
    }
    throw Error(std::string("GroupElement: invalid letter '") + letter + "'");
}

SpherePointd GroupElement::operator()(const SpherePointd& z) const {
    const double a = double(m_[0]), b = double(m_[1]), c = double(m_[2]), d = double(m_[3]);
    if (z.is_infinite()) return c == 0 ? SpherePointd::infinity() : SpherePointd(a / c);
    const Complex x = z.value();
    Complex num, den;
    if (std::abs(x) > 1) {
        const Complex w = 1.0 / x;
        num = a + b * w;
        den = c + d * w;
    } else {
        num = a * x + b;
        den = c * x + d;
    }
    if (den == Complex(0)) return SpherePointd::infinity();
    return num / den;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return {g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(), g.c() * h.a() + g.d() * h.c(),
            g.c() * h.b() + g.d() * h.d()};
}

GroupElement word_matrix(const Word& w) {
    GroupElement g;
    for (std::size_t i = 0; i < w.size(); ++i) g = g * GroupElement::generator(w[i]);
    return g;
}

SpherePointd apply_word(const Word& w, const SpherePointd& z) {
    SpherePointd p = z;
    for (std::size_t i = w.size(); i-- > 0;) p = GroupElement::generator(w[i])(p);
    return p;
}

bool in_fundamental_closure(const SpherePointd& z, double band) {
    if (z.is_infinite()) return false;
    const Complex x = z.value();
    return x.imag() > 0 && std::abs(x.real()) <= 1 + band && std::abs(x) >= 1 - band;
}

bool in_fundamental_domain(const SpherePointd& z) {
    if (z.is_infinite()) return false;
    const Complex x = z.value();
    if (x.imag() <= 0) return false;
    const double re = x.real(), m = std::abs(x);
    if (-1 < re && re < 1 && m > 1) return true;
    if (re == -1) return true;
    return m == 1 && re <= 0;
}

char rho_letter(const SpherePointd& z) {
    if (z.is_infinite() || z.value().imag() <= 0) throw std::invalid_argument("rho_step: point not in the upper half-plane");
    if (in_fundamental_closure(z)) throw InsideFundamentalDomain();
    const Complex x = z.value();
    if (std::abs(x) < 1) return 'a';
    return x.real() > 1 ? 'B' : 'b';
}

SpherePointd rho_step(const SpherePointd& z) { return GroupElement::generator(rho_letter(z))(z); }

Reduction reduce_to_fundamental(const SpherePointd& z, int max_steps) {
    Reduction r;
    r.point = z;
    std::string applied;
    while (!in_fundamental_closure(r.point)) {
        if (r.steps == max_steps) {
            r.determined = false;
            break;
        }
        const char c = rho_letter(r.point);
        r.point = GroupElement::generator(c)(r.point);
        applied.insert(applied.begin(), c);
        ++r.steps;
    }
    r.word = Word(applied);
    return r;
}

bool word_return_check(const Word& w, int samples, std::uint64_t seed) {
    if (w.empty()) throw std::invalid_argument("word_return_check: word must be nonempty");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-0.999, 0.999), uy(1e-3, 3.0);
    for (int k = 0; k < samples; ++k) {
        const double x = ux(rng);
        const SpherePointd z(x, std::sqrt(1 - x * x) + uy(rng));
        const Reduction r = reduce_to_fundamental(apply_word(w, z), 4 * int(w.size()) + 8);
        if (!r.determined || r.steps != int(w.size())) return false;
        if (std::abs(r.point.value() - z.value()) > 1e-9) return false;
    }
    return true;
}

std::vector<Word> reduced_words(int max_len) {
    std::vector<Word> out{Word()};
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (char c : {'a', 'b', 'B'}) {
                const std::string& s = out[i].str();
                if (!s.empty() && s.back() == Word::inverse_letter(c)) continue;
                out.emplace_back(s + c);
            }
        begin = end;
    }
    return out;
}

Complex FuchsianCircleSet::gamma(int j, Complex z) const {
    const Complex zj = centers.at(j - 1);
    return std::conj(zj) + r * r / (z - zj);
}

int FuchsianCircleSet::circle_containing(Complex z) const {
    for (int j = 1; j <= size(); ++j)
        if (std::abs(z - centers[j - 1]) < r) return j;
    return 0;
}

FuchsianCircleSet gamma_d_circles(int d) {
    if (d < 2) throw std::invalid_argument("gamma_d_circles: d must be >= 2");
    FuchsianCircleSet cs;
    cs.d = d;
    const double half = std::numbers::pi / (d + 1);
    cs.r = std::tan(half);
    for (int j = 1; j <= d + 1; ++j) cs.centers.push_back(std::polar(1 / std::cos(half), (2 * j - 1) * half));
    const int listed = d % 2 == 0 ? d / 2 + 1 : (d + 1) / 2;
    for (int j = 1; j <= listed; ++j) cs.generators.push_back(j);
    return cs;
}

Complex rho_d_step(const FuchsianCircleSet& cs, Complex z) {
    if (std::abs(z) >= 1) throw std::invalid_argument("rho_d_step: point not in the unit disc");
    const int j = cs.circle_containing(z);
    if (j == 0) throw NotInAnyCircle();
    return cs.gamma(j, z);
}

}  // namespace qd
