#include "qd/univalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qd {
namespace {

using Complex = std::complex<double>;

constexpr double kSeparation = 1e-6;  // samples closer than this are not a witness
constexpr double kCollision = 1e-9;   // image distance counting as a collision

double orient(Complex a, Complex b, Complex c) { return std::imag(std::conj(b - a) * (c - a)); }

bool segments_cross(Complex p1, Complex p2, Complex q1, Complex q2) {
    const double d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
    const double d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

struct Sample {
    Complex u;      // pulled-back coordinate in the unit disc
    Complex image;  // finite image
};

}  // namespace

UnivalenceReport is_univalent_on_disc(const RationalMapd& f, const OrientedDiscd& disc, int n_boundary,
                                      int n_interior) {
    if (n_boundary < 64) throw std::invalid_argument("is_univalent_on_disc: n_boundary must be >= 64");
    if (n_interior < 0) throw std::invalid_argument("is_univalent_on_disc: n_interior must be >= 0");

    UnivalenceReport report;
    const Mobiusd to_disc = disc.from_unit_disc();
    const RationalMapd g = compose(f, to_disc);
    auto original = [&](Complex u) { return to_disc(SpherePointd(u)); };

    if (g.den().degree() > 0) {
        for (const auto& p : find_roots(g.den()).finite) {
            if (std::abs(p) <= 1.0 + 1e-9) {
                report.reason = "pole on the closed disc";
                return report;
            }
        }
    }

    std::vector<Sample> boundary(n_boundary);
    for (int k = 0; k < n_boundary; ++k) {
        const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * k / n_boundary);
        boundary[k] = {u, g(u).value()};
    }

    std::vector<Sample> interior;
    interior.push_back({Complex(0), g(Complex(0)).value()});
    if (n_interior > 0) {
        const int rings = 4;
        int per_ring = (n_interior + rings - 1) / rings;
        per_ring += per_ring % 2;  // even, so every sample has its antipode
        per_ring = std::max(per_ring, 4);
        for (int j = 1; j <= rings; ++j) {
            const double r = 0.9 * j / rings;
            for (int k = 0; k < per_ring; ++k) {
                const Complex u = std::polar(r, 2.0 * std::numbers::pi * (k + 0.5 * (j % 2)) / per_ring);
                interior.push_back({u, g(u).value()});
            }
        }
    }

    // Collisions between well-separated samples.
    std::vector<Sample> all = boundary;
    all.insert(all.end(), interior.begin(), interior.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto zi = original(all[i].u), zj = original(all[j].u);
            if (spherical_distance(zi, zj) <= kSeparation) continue;
            if (spherical_distance(SpherePointd(all[i].image), SpherePointd(all[j].image)) < kCollision) {
                report.verdict = Univalence::NotUnivalent;
                report.witness = {zi, zj};
                report.reason = "two samples share an image";
                return report;
            }
        }
    }

    // Self-intersections of the boundary image polygon.
    const int n = n_boundary;
    std::vector<Complex> lo(n), hi(n);
    for (int k = 0; k < n; ++k) {
        const Complex a = boundary[k].image, b = boundary[(k + 1) % n].image;
        lo[k] = {std::min(a.real(), b.real()), std::min(a.imag(), b.imag())};
        hi[k] = {std::max(a.real(), b.real()), std::max(a.imag(), b.imag())};
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (hi[i].real() < lo[j].real() || hi[j].real() < lo[i].real() || hi[i].imag() < lo[j].imag() ||
                hi[j].imag() < lo[i].imag())
                continue;
            if (segments_cross(boundary[i].image, boundary[(i + 1) % n].image, boundary[j].image,
                               boundary[(j + 1) % n].image)) {
                report.verdict = Univalence::NotUnivalent;
                report.witness = {original(boundary[i].u), original(boundary[j].u)};
                report.reason = "boundary image self-intersects";
                return report;
            }
        }
    }

    // Winding numbers about interior images, including images of interior
    // critical points (winding >= 2 there).
    std::vector<Sample> probes = interior;
    for (const auto& c : critical_points(g)) {
        if (c.point.is_finite() && std::abs(c.point.value()) < 1.0 - 1e-9)
            probes.push_back({c.point.value(), g(c.point).value()});
    }
    bool unresolved = false;
    for (const auto& probe : probes) {
        double total = 0;
        bool reliable = true;
        for (int k = 0; k < n; ++k) {
            const Complex a = boundary[k].image - probe.image, b = boundary[(k + 1) % n].image - probe.image;
            const double step = std::arg(b / a);
            if (std::abs(step) > 2.0 * std::numbers::pi / 3.0) reliable = false;
            total += step;
        }
        if (!reliable) {
            unresolved = true;
            continue;
        }
        const long winding = std::lround(total / (2.0 * std::numbers::pi));
        if (winding != 1) {
            report.verdict = Univalence::NotUnivalent;
            report.reason = "boundary winding number " + std::to_string(winding) + " about an interior image";
            SpherePointd other = original(probe.u);
            for (const auto& z : solve_fiber(g, SpherePointd(probe.image))) {
                if (z.is_finite() && std::abs(z.value()) < 1.0 && std::abs(z.value() - probe.u) > kSeparation) {
                    other = original(z.value());
                    break;
                }
            }
            report.witness = {original(probe.u), other};
            return report;
        }
    }

    if (unresolved) {
        report.reason = "winding number unresolved at sampling resolution";
        return report;
    }
    report.verdict = Univalence::Univalent;
    return report;
}

}  // namespace qd
