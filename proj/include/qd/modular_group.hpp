#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qd/sphere_point.hpp"
#include "qd/word.hpp"

namespace qd {

class InsideFundamentalDomain : public Error {
public:
    InsideFundamentalDomain() : Error("point lies in the closed fundamental domain") {}
};

class NotInAnyCircle : public Error {
public:
    NotInAnyCircle() : Error("point lies in no generator circle") {}
};

/// Element of PSL(2, Z): integer matrix with unit determinant, sign fixed so
/// that the first nonzero entry is positive.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static GroupElement alpha() { return {0, -1, 1, 0}; }
    static GroupElement beta() { return {1, 2, 0, 1}; }
    static GroupElement beta_inv() { return {1, -2, 0, 1}; }
    static GroupElement generator(char letter);

    std::int64_t a() const { return m_[0]; }
    std::int64_t b() const { return m_[1]; }
    std::int64_t c() const { return m_[2]; }
    std::int64_t d() const { return m_[3]; }

    SpherePointd operator()(const SpherePointd& z) const;

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    std::array<std::int64_t, 4> m_{1, 0, 0, 1};
};

/// Product of the generator matrices, leftmost letter leftmost.
GroupElement word_matrix(const Word& w);

/// Letters act right to left: "ab" sends z to alpha(beta(z)).
SpherePointd apply_word(const Word& w, const SpherePointd& z);

constexpr double kFundamentalBand = 1e-12;

/// {|Re z| <= 1, |z| >= 1} in the upper half-plane, with tolerance `band`.
bool in_fundamental_closure(const SpherePointd& z, double band = kFundamentalBand);

/// The half-open domain U plus the line Re z = -1 and the arc |z| = 1 with
/// Re z <= 0: each orbit meets it exactly once.
bool in_fundamental_domain(const SpherePointd& z);

/// The piecewise map rho on the upper half-plane minus the closed domain.
/// Returns the letter of the generator applied.
char rho_letter(const SpherePointd& z);
SpherePointd rho_step(const SpherePointd& z);

struct Reduction {
    SpherePointd point;  // landing point
    Word word;           // apply_word(word, z) == point
    int steps = 0;
    bool determined = true;  // false if max_steps ran out
};

Reduction reduce_to_fundamental(const SpherePointd& z, int max_steps = 1000);

/// For `samples` points z of U drawn with `seed`, reduction of apply_word(w, z)
/// takes exactly |w| steps and lands within 1e-9 of z.
bool word_return_check(const Word& w, int samples, std::uint64_t seed = 0);

/// All freely reduced words of length <= n, shortlex order, identity first.
std::vector<Word> reduced_words(int max_len);

/// Circles orthogonal to the unit circle meeting it at consecutive (d+1)-th
/// roots of unity, and the maps gamma_j(z) = conj(z_j) + r^2 / (z - z_j).
struct FuchsianCircleSet {
    int d = 2;
    double r = 0;
    std::vector<std::complex<double>> centers;  // z_1 .. z_{d+1}
    std::vector<int> generators;                // indices j of the listed generators

    int size() const { return int(centers.size()); }
    std::complex<double> gamma(int j, std::complex<double> z) const;
    /// gamma_j carries C_j onto C_{partner(j)}.
    int partner(int j) const { return d + 2 - j; }
    /// Index j with z strictly inside C_j, or 0.
    int circle_containing(std::complex<double> z) const;
};

FuchsianCircleSet gamma_d_circles(int d);

/// gamma_j(z) for the circle C_j containing z. Throws NotInAnyCircle.
std::complex<double> rho_d_step(const FuchsianCircleSet& cs, std::complex<double> z);

}  // namespace qd
