#include "qd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qd/families.hpp"
#include "qd/markov.hpp"
#include "qd/modular_group.hpp"
#include "qd/oriented_disc.hpp"
#include "qd/raster.hpp"
#include "qd/schwarz_system.hpp"

namespace qd {
namespace {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

Complex normal_complex(Rng& rng) {
    std::normal_distribution<double> n;
    const double re = n(rng);
    return {re, n(rng)};
}

Complex uniform_in_disc(Rng& rng, double radius) {
    std::uniform_real_distribution<double> u(0, 1);
    const double r = radius * std::sqrt(u(rng));
    return std::polar(r, 2 * kPi * u(rng));
}

PropertyResult result(const char* module, const char* property, const char* metric, double value, double tol,
                      bool pass) {
    return {module, property, metric, value, tol, pass};
}

// Bounded maximum: not-a-number counts as failure.
PropertyResult max_below(const char* module, const char* property, const char* metric, double value, double tol) {
    return result(module, property, metric, value, tol, value < tol);
}

PropertyResult zero_count(const char* module, const char* property, const char* metric, int failures) {
    return result(module, property, metric, failures, 0, failures == 0);
}

RationalMapd random_cubic(Rng& rng) {
    for (;;) {
        Polynomiald num({normal_complex(rng), normal_complex(rng), normal_complex(rng), normal_complex(rng)});
        Polynomiald den({normal_complex(rng), normal_complex(rng), normal_complex(rng), normal_complex(rng)});
        try {
            return RationalMapd::checked(num, den);
        } catch (const InvalidRationalMap&) {
        }
    }
}

std::array<SpherePointd, 3> random_distinct_triple(Rng& rng) {
    for (;;) {
        std::array<SpherePointd, 3> t{normal_complex(rng) * 2.0, normal_complex(rng) * 2.0, normal_complex(rng) * 2.0};
        if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.1) t[0] = SpherePointd::infinity();
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) ok = ok && spherical_distance(t[i], t[j]) > 0.1;
        if (ok) return t;
    }
}

SchwarzSystem sigma0() { return build_system(base_map(), ft_critical_triple(0)); }

// ---------------------------------------------------------------- core

PropertyResult sphere_triples(Rng& rng) {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
        const auto src = random_distinct_triple(rng), dst = random_distinct_triple(rng);
        const Mobiusd m = mobius_from_triple(src, dst);
        for (int i = 0; i < 3; ++i) worst = std::max(worst, spherical_distance(apply_mobius(m, src[i]), dst[i]));
    }
    return max_below("sphere", "triple_correspondence", "max_err", worst, 1e-12);
}

PropertyResult sphere_inverse(Rng& rng) {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
        Mobiusd m;
        try {
            m = Mobiusd(normal_complex(rng), normal_complex(rng), normal_complex(rng), normal_complex(rng));
        } catch (const DegenerateMap&) {
            continue;
        }
        if (std::abs(m.det()) < 1e-3) continue;
        const SpherePointd z = normal_complex(rng) * 3.0;
        worst = std::max(worst, spherical_distance(m(m.inverse()(z)), z));
    }
    return max_below("sphere", "inverse_roundtrip", "max_err", worst, 1e-12);
}

PropertyResult sphere_disc_symmetry(Rng& rng) {
    int failures = 0;
    for (int k = 0; k < 200; ++k) {
        auto t = random_distinct_triple(rng);
        const auto d = disc_through(t[0], t[1], t[2]);
        const auto cyc = disc_through(t[1], t[2], t[0]);
        const auto swp = disc_through(t[1], t[0], t[2]);
        for (int p = 0; p < 8; ++p) {
            const SpherePointd z = normal_complex(rng) * 3.0;
            const double s = d.signed_distance(z);
            if (std::abs(s) < 1e-6) continue;
            const bool same = (cyc.signed_distance(z) < 0) == (s < 0);
            const bool flipped = (swp.signed_distance(z) < 0) != (s < 0);
            if (!same || !flipped) ++failures;
        }
    }
    return zero_count("sphere", "disc_orientation_symmetry", "mismatches", failures);
}

PropertyResult rational_critical_count(Rng& rng) {
    int failures = 0;
    for (int k = 0; k < 100; ++k) {
        try {
            if (critical_count(critical_points(random_cubic(rng))) != 4) ++failures;
        } catch (const RootFindingFailure&) {
            ++failures;
        }
    }
    return zero_count("rational", "critical_count", "failures", failures);
}

PropertyResult rational_fiber(Rng& rng) {
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const RationalMapd f = random_cubic(rng);
        const SpherePointd w = normal_complex(rng) * 2.0;
        try {
            const auto fiber = solve_fiber(f, w);
            if (fiber.size() != 3) worst = kInf;
            for (const auto& z : fiber) worst = std::max(worst, spherical_distance(f(z), w));
        } catch (const RootFindingFailure&) {
            worst = kInf;
        }
    }
    return max_below("rational", "fiber_residual", "max_err", worst, 1e-9);
}

PropertyResult rational_derivative(Rng& rng) {
    double worst = 0;
    int checked = 0;
    while (checked < 100) {
        const RationalMapd f = random_cubic(rng);
        const Complex z = normal_complex(rng);
        if (std::abs(f.den()(z)) < 0.1 * f.den().abs_bound(z)) continue;
        const Complex exact = f.derivative_at(z);
        if (std::abs(exact) < 1e-3) continue;
        const double h = 1e-6;
        const Complex fd = (f(SpherePointd(z + h)).value() - f(SpherePointd(z - h)).value()) / (2 * h);
        worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
        ++checked;
    }
    return max_below("rational", "derivative_finite_difference", "max_rel_err", worst, 1e-5);
}

PropertyResult schwarz_boundary_identity() {
    double worst = 0;
    for (double t : {0.0, 0.3, 0.6}) {
        const SchwarzSystem s = build_system(ft_map(t), ft_critical_triple(t));
        for (int k = 0; k < 1024; ++k) {
            const double a = 2 * kPi * (k + 0.5) / 1024;
            const SpherePointd z = s.f()(SpherePointd(s.disc().center() + s.disc().radius() * std::polar(1.0, a)));
            try {
                worst = std::max(worst, std::abs(sigma_eval(s, z).value() - std::conj(z.value())));
            } catch (const Error&) {
                worst = kInf;
            }
        }
    }
    return max_below("schwarz", "boundary_identity", "max_err", worst, 1e-9);
}

PropertyResult schwarz_boundary_invariance() {
    const SchwarzSystem s = build_system(ft_map(0.3), ft_critical_triple(0.3));
    double worst = 0;
    for (int k = 0; k < 512; ++k) {
        const double a = 2 * kPi * (k + 0.5) / 512;
        const SpherePointd z = s.f()(SpherePointd(s.disc().center() + s.disc().radius() * std::polar(1.0, a)));
        try {
            const auto image = sigma_eval(s, z);
            double best = kInf;
            for (const auto& p : solve_fiber(s.f(), image)) best = std::min(best, std::abs(s.disc().signed_distance(p)));
            worst = std::max(worst, best);
        } catch (const Error&) {
            worst = kInf;
        }
    }
    return max_below("schwarz", "boundary_invariance", "max_dist", worst, 1e-9);
}

PropertyResult schwarz_covering3(const SchwarzSystem& s, Rng& rng) {
    int failures = 0, found = 0;
    std::uniform_real_distribution<double> u(-4, 4);
    while (found < 100) {
        const SpherePointd w(u(rng), u(rng));
        if (tile_contains(s, w) != TileClass::InTile) continue;
        ++found;
        if (preimages_under_sigma(s, w).size() != 3) ++failures;
    }
    return zero_count("schwarz", "covering_degree_3", "failures", failures);
}

PropertyResult schwarz_covering2(const SchwarzSystem& s, Rng& rng) {
    int failures = 0, found = 0;
    while (found < 100) {
        const SpherePointd w = s.f()(SpherePointd(uniform_in_disc(rng, 0.999)));
        if (tile_contains(s, w) != TileClass::InDomain) continue;
        if (tile_contains(s, sigma_eval(s, w)) != TileClass::InDomain) continue;
        ++found;
        if (preimages_under_sigma(s, w).size() != 2) ++failures;
    }
    return zero_count("schwarz", "covering_degree_2", "failures", failures);
}

PropertyResult schwarz_openness(const SchwarzSystem& s, Rng& rng) {
    std::uniform_real_distribution<double> u(-2, 2);
    int failures = 0, found = 0;
    while (found < 200) {
        const Complex z(u(rng), u(rng));
        const auto e = classify_point(s, z, 60);
        if (e.status != EscapeResult::Status::Escaping) continue;
        ++found;
        for (Complex dz : {Complex(1e-6, 0), Complex(-1e-6, 0), Complex(0, 1e-6), Complex(0, -1e-6)}) {
            const auto n = classify_point(s, z + dz, 60);
            if (n.status != EscapeResult::Status::Escaping || std::abs(n.depth - e.depth) > 1) ++failures;
        }
    }
    return zero_count("schwarz", "escaping_set_open", "failures", failures);
}

PropertyResult schwarz_compactness(const SchwarzSystem& s, Rng& rng) {
    std::uniform_real_distribution<double> u(-2, 2);
    int failures = 0;
    for (int k = 0; k < 400; ++k) {
        const Complex z(u(rng), u(rng));
        const auto e = classify_point(s, z, 60);
        if (e.status == EscapeResult::Status::NonEscaping && tile_contains(s, z) != TileClass::InDomain) ++failures;
    }
    return zero_count("schwarz", "filled_julia_in_domain", "failures", failures);
}

PropertyResult schwarz_base_identity(Rng& rng) {
    std::uniform_real_distribution<double> ur(std::log(0.1), std::log(10)), ua(0, 2 * kPi);
    const RationalMapd f = base_map();
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const Complex z = std::polar(std::exp(ur(rng)), ua(rng));
        const Complex lhs = 1.0 / f(SpherePointd(1.0 / z)).value();
        worst = std::max(worst, std::abs(lhs - (z + 1.0 / (2.0 * z * z))));
    }
    return max_below("schwarz", "base_map_identity", "max_err", worst, 1e-12);
}

PropertyResult raster_determinism(const SchwarzSystem& s) {
    const Viewport v{0, 4, 32, 32};
    const auto scheme = ColorScheme::standard();
    const bool same = render_dynamical_plane(s, v, 50, scheme, 1) == render_dynamical_plane(s, v, 50, scheme, 4);
    return result("raster", "thread_determinism", "mismatch", same ? 0 : 1, 0, same);
}

PropertyResult raster_resolution_monotone(const SchwarzSystem& s) {
    const Viewport v{0, 4, 32, 32};
    const auto lo = classify_grid(s, v, 20), hi = classify_grid(s, v, 40);
    int failures = 0;
    for (std::size_t k = 0; k < lo.cells.size(); ++k)
        if (lo.cells[k].status == EscapeResult::Status::Escaping &&
            (hi.cells[k].status != EscapeResult::Status::Escaping || hi.cells[k].depth != lo.cells[k].depth))
            ++failures;
    return zero_count("raster", "escape_depth_stable", "failures", failures);
}

PropertyResult raster_param_consistency() {
    int failures = 0;
    FamilyOptions opt;
    opt.max_iter = 100;
    for (double t : {0.0, 0.3}) {
        const auto p = classify_parameter(t, opt);
        if (!p.in_family || p.connectedness.status != Connectedness::Connected) continue;
        const SchwarzSystem s = build_system(ft_map(t), ft_critical_triple(t));
        const auto g = classify_grid(s, Viewport{0, 4, 32, 32}, opt.max_iter);
        const bool any = std::any_of(g.cells.begin(), g.cells.end(), [](const EscapeResult& e) {
            return e.status == EscapeResult::Status::NonEscaping;
        });
        if (!any) ++failures;
    }
    return zero_count("raster", "parameter_dynamical_consistency", "failures", failures);
}

void core_suite(std::uint64_t seed, std::vector<PropertyResult>& out) {
    Rng rng(seed);
    out.push_back(sphere_triples(rng));
    out.push_back(sphere_inverse(rng));
    out.push_back(sphere_disc_symmetry(rng));
    out.push_back(rational_critical_count(rng));
    out.push_back(rational_fiber(rng));
    out.push_back(rational_derivative(rng));
    const SchwarzSystem s = sigma0();
    out.push_back(schwarz_base_identity(rng));
    out.push_back(schwarz_boundary_identity());
    out.push_back(schwarz_boundary_invariance());
    out.push_back(schwarz_covering3(s, rng));
    out.push_back(schwarz_covering2(s, rng));
    out.push_back(schwarz_openness(s, rng));
    out.push_back(schwarz_compactness(s, rng));
    out.push_back(raster_determinism(s));
    out.push_back(raster_resolution_monotone(s));
    out.push_back(raster_param_consistency());
}

// ---------------------------------------------------------------- group

PropertyResult group_matrix_consistency(Rng& rng) {
    const auto words = reduced_words(8);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const Word& w = words[pick(rng)];
        const SpherePointd z = normal_complex(rng);
        const GroupElement g = word_matrix(w);
        worst = std::max(worst, spherical_distance(apply_word(w, z), g(z)));
    }
    return max_below("group", "word_matrix_consistency", "max_err", worst, 1e-12);
}

PropertyResult group_alpha_height(Rng& rng) {
    int failures = 0;
    for (int k = 0; k < 200; ++k) {
        Complex z = uniform_in_disc(rng, 1);
        z = {z.real(), std::abs(z.imag()) + 1e-9};
        if (std::abs(z) >= 1) continue;
        if (!(rho_step(z).value().imag() > z.imag())) ++failures;
    }
    return zero_count("group", "alpha_raises_height", "failures", failures);
}

PropertyResult group_transitions(Rng& rng) {
    std::uniform_real_distribution<double> u(0, 1);
    int failures = 0;
    for (int k = 0; k < 300; ++k) {
        double t;
        switch (k % 3) {
            case 0: t = -1 - 20 * u(rng); break;
            case 1: t = -1 + 2 * u(rng); break;
            default: t = 1 + 20 * u(rng); break;
        }
        const int from = rho_piece(t), to = rho_piece(rho_real(t));
        const bool ok = (from == 1 && to != 3) || (from == 2 && to != 2) || (from == 3 && to != 1);
        if (!ok) ++failures;
    }
    return zero_count("group", "markov_transitions", "failures", failures);
}

PropertyResult group_word_return(std::uint64_t seed) {
    int failures = 0;
    for (const Word& w : reduced_words(5))
        if (!w.empty() && !word_return_check(w, 10, seed)) ++failures;
    return zero_count("group", "word_return", "failures", failures);
}

PropertyResult group_gamma_d_geometry() {
    double worst = 0;
    for (int d = 2; d <= 6; ++d) {
        const auto cs = gamma_d_circles(d);
        worst = std::max(worst, std::abs(cs.r - std::tan(kPi / (d + 1))));
        for (int j = 1; j <= cs.size(); ++j) {
            const Complex zj = cs.centers[j - 1];
            worst = std::max(worst, std::abs(std::norm(zj) - 1 - cs.r * cs.r));
            for (int e : {j - 1, j})
                worst = std::max(worst, std::abs(std::abs(std::polar(1.0, 2 * kPi * e / (d + 1)) - zj) - cs.r));
        }
    }
    return max_below("group", "gamma_d_geometry", "max_err", worst, 1e-12);
}

PropertyResult group_gamma_d_boundary() {
    double worst = 0;
    for (int d = 2; d <= 6; ++d) {
        const auto cs = gamma_d_circles(d);
        for (int j = 1; j <= cs.size(); ++j) {
            const Complex target = cs.centers[cs.partner(j) - 1];
            for (int k = 0; k < 64; ++k) {
                const Complex z = cs.centers[j - 1] + cs.r * std::polar(1.0, 2 * kPi * (k + 0.5) / 64);
                worst = std::max(worst, std::abs(std::abs(cs.gamma(j, z) - target) - cs.r));
            }
        }
    }
    return max_below("group", "gamma_d_boundary_pairing", "max_err", worst, 1e-10);
}

PropertyResult group_gamma_d_tiling(Rng& rng) {
    int failures = 0;
    for (int d = 2; d <= 6; ++d) {
        const auto cs = gamma_d_circles(d);
        for (int k = 0; k < 200; ++k) {
            const Complex z = uniform_in_disc(rng, 1);
            const int j = cs.circle_containing(z);
            if (j == 0) continue;
            const Complex w = rho_d_step(cs, z);
            if (!(std::abs(w) < 1) || std::abs(w - cs.centers[cs.partner(j) - 1]) < cs.r) ++failures;
        }
    }
    return zero_count("group", "gamma_d_tiling", "failures", failures);
}

void group_suite(std::uint64_t seed, std::vector<PropertyResult>& out) {
    Rng rng(seed + 1);
    out.push_back(group_matrix_consistency(rng));
    out.push_back(group_alpha_height(rng));
    out.push_back(group_transitions(rng));
    out.push_back(group_word_return(seed));
    out.push_back(group_gamma_d_geometry());
    out.push_back(group_gamma_d_boundary());
    out.push_back(group_gamma_d_tiling(rng));
}

// ---------------------------------------------------------------- conjugacy

bool near_endpoint_preimage(double t) {
    for (int k = 0; k < 8; ++k) {
        if (std::isinf(t) || std::abs(std::abs(t) - 1) < 1e-4 || std::abs(t) < 1e-4 || std::abs(t) > 1e4) return true;
        t = rho_real(t);
    }
    return false;
}

PropertyResult conj_semiconjugacy(Rng& rng) {
    std::cauchy_distribution<double> c(0, 2);
    double worst = 0;
    int found = 0;
    while (found < 1000) {
        const double t = c(rng);
        if (near_endpoint_preimage(t)) continue;
        ++found;
        worst = std::max(worst, circle_distance(markov_E(rho_real(t)), doubling(markov_E(t))));
    }
    return max_below("conjugacy", "semiconjugacy", "max_err", worst, 1e-6);
}

// Samples whose 40-step orbit expands enough for E to resolve them.
std::vector<double> expanding_samples(Rng& rng, int n) {
    std::cauchy_distribution<double> c(0, 2);
    std::vector<double> out;
    while (int(out.size()) < n) {
        const double t = c(rng);
        if (rho_expansion(t, 40) >= 1e8) out.push_back(t);
    }
    return out;
}

PropertyResult conj_monotone(Rng& rng) {
    auto ts = expanding_samples(rng, 300);
    std::sort(ts.begin(), ts.end());
    int failures = 0;
    for (std::size_t k = 1; k < ts.size(); ++k)
        if (ts[k] > ts[k - 1] && !(markov_E(ts[k]) < markov_E(ts[k - 1]))) ++failures;
    return zero_count("conjugacy", "monotone", "order_violations", failures);
}

PropertyResult conj_roundtrip(Rng& rng) {
    double worst = 0;
    for (double t : expanding_samples(rng, 200))
        worst = std::max(worst, std::abs(markov_E_inverse(markov_E(t, 48), 48) - t));
    return max_below("conjugacy", "roundtrip", "max_err", worst, 1e-5);
}

PropertyResult conj_anchors() {
    const bool exact = markov_E(kInf) == 0 && markov_E(1) == 1.0 / 3 && markov_E(-1) == 2.0 / 3 &&
                       std::isinf(markov_E_inverse(0)) && markov_E_inverse(1.0 / 3) == 1 &&
                       markov_E_inverse(2.0 / 3) == -1;
    return result("conjugacy", "anchors", "mismatch", exact ? 0 : 1, 0, exact);
}

PropertyResult conj_multiplier_roundtrip(Rng& rng) {
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const Complex lambda = uniform_in_disc(rng, 1);
        worst = std::max(worst, std::abs(quad_multiplier(c_of_multiplier(lambda)) - lambda));
    }
    return max_below("conjugacy", "multiplier_roundtrip", "max_err", worst, 1e-12);
}

PropertyResult conj_multiplier_endpoints() {
    const bool exact = quad_multiplier(-0.75) == Complex(-1) && quad_multiplier(0.25) == Complex(1) &&
                       c_of_multiplier(-1.0) == Complex(-0.75) && c_of_multiplier(1.0) == Complex(0.25);
    return result("conjugacy", "multiplier_endpoints", "mismatch", exact ? 0 : 1, 0, exact);
}

PropertyResult conj_blaschke(Rng& rng) {
    std::uniform_real_distribution<double> u(0, 1);
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        const Complex lambda = uniform_in_disc(rng, 0.99);
        for (int j = 0; j < 100; ++j)
            worst = std::max(worst, std::abs(std::abs(blaschke_eval(lambda, std::polar(1.0, 2 * kPi * u(rng)))) - 1));
    }
    return max_below("conjugacy", "blaschke_boundary", "max_err", worst, 1e-12);
}

PropertyResult conj_blaschke_multiplier(Rng& rng) {
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        const Complex lambda = uniform_in_disc(rng, 0.99);
        const double h = 1e-7;
        const Complex fd = (blaschke_eval(lambda, h) - blaschke_eval(lambda, -h)) / (2 * h);
        worst = std::max(worst, std::abs(fd - lambda));
    }
    return max_below("conjugacy", "blaschke_multiplier", "max_err", worst, 1e-7);
}

// Addresses of sigma_0 tiles of depth n, by pulling the tile point at infinity
// back n times, against the reduced words labelling Gamma tiles of depth n.
PropertyResult conj_tile_addresses(const SchwarzSystem& s) {
    int failures = 0;
    std::vector<SpherePointd> level{SpherePointd::infinity()};
    for (int n = 1; n <= 4; ++n) {
        std::vector<SpherePointd> next;
        for (const auto& w : level)
            for (const auto& z : preimages_under_sigma(s, w)) next.push_back(z);
        level = next;
        std::map<std::string, int> sigma_side, group_side;
        for (const auto& z : level) {
            const auto e = classify_point(s, z, n + 2);
            if (e.status != EscapeResult::Status::Escaping || e.depth != n) ++failures;
            ++sigma_side[e.address];
        }
        for (const Word& g : reduced_words(n)) {
            if (int(g.size()) != n) continue;
            const Reduction r = reduce_to_fundamental(apply_word(g, SpherePointd(0.1, 2.0)), 50);
            if (r.steps != n) ++failures;
            ++group_side[r.word.inverse().str()];
        }
        if (sigma_side != group_side) ++failures;
    }
    return zero_count("conjugacy", "tile_address_correspondence", "failures", failures);
}

void conjugacy_suite(std::uint64_t seed, std::vector<PropertyResult>& out) {
    Rng rng(seed + 2);
    out.push_back(conj_semiconjugacy(rng));
    out.push_back(conj_monotone(rng));
    out.push_back(conj_roundtrip(rng));
    out.push_back(conj_anchors());
    out.push_back(conj_multiplier_roundtrip(rng));
    out.push_back(conj_multiplier_endpoints());
    out.push_back(conj_blaschke(rng));
    out.push_back(conj_blaschke_multiplier(rng));
    out.push_back(conj_tile_addresses(sigma0()));
}

}  // namespace

std::string format_result(const PropertyResult& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s.%s %s=%.3g tol=%.3g", r.pass ? "PASS" : "FAIL", r.module.c_str(),
                  r.property.c_str(), r.metric.c_str(), r.value, r.tol);
    return buf;
}

std::vector<std::string> suite_names() { return {"core", "group", "conjugacy", "all"}; }

std::vector<PropertyResult> run_suite(const std::string& suite, std::uint64_t seed, int threads) {
    (void)threads;
    std::vector<PropertyResult> out;
    if (suite == "core" || suite == "all") core_suite(seed, out);
    if (suite == "group" || suite == "all") group_suite(seed, out);
    if (suite == "conjugacy" || suite == "all") conjugacy_suite(seed, out);
    if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

}  // namespace qd
