#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "qd/families.hpp"
#include "qd/schwarz_system.hpp"

using namespace qd;
using C = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

const SchwarzSystem& sigma0() {
    static const SchwarzSystem s = build_system(base_map(), ft_critical_triple(0));
    return s;
}

SchwarzSystem system_at(double t) { return build_system(ft_map(t), ft_critical_triple(t)); }

C f0(C z) { return z / (1.0 + z * z * z / 2.0); }

}  // namespace

TEST_CASE("critical triple ordering") {
    const auto tr = ft_critical_triple(0);
    CHECK(std::abs(tr[0].value() - 1.0) < 1e-12);
    CHECK(std::abs(tr[1].value() - std::polar(1.0, 2 * kPi / 3)) < 1e-12);
    CHECK(std::abs(tr[2].value() - std::polar(1.0, -2 * kPi / 3)) < 1e-12);
}

TEST_CASE("build the base system") {
    const SchwarzSystem& s = sigma0();
    CHECK(s.disc().is_bounded());
    CHECK(std::abs(s.disc().center()) < 1e-12);
    CHECK(std::abs(s.disc().radius() - 1) < 1e-12);
    CHECK(s.cf().is_infinite());
    CHECK(s.sigma_crit().value() == C(0));
    CHECK(s.real_symmetric());
    for (C z : {C(0.3, 0.1), C(2, -1), C(-0.7, 0.2)}) CHECK(spherical_distance(s.involution()(z), SpherePointd(1.0 / z)) < 1e-14);
    const auto& a = s.critical_angles();
    CHECK(a[0] < a[1]);
    CHECK(a[1] < a[2]);
}

TEST_CASE("build rejects non-members") {
    const RationalMapd sq(Polynomiald({0.0, 0.0, 1.0}), Polynomiald({1.0}));
    CHECK_THROWS_AS(build_system(sq, ft_critical_triple(0)), NotInFamily);
    CHECK_THROWS_AS(build_system(base_map(), {SpherePointd(1.0), SpherePointd(C(0, 1)), SpherePointd(-1.0)}),
                    NotInFamily);
    const auto tr = ft_critical_triple(0);
    CHECK_THROWS_AS(build_system(base_map(), {tr[0], tr[2], tr[1]}), NotInFamily);
    CHECK_THROWS_AS(system_at(-0.8), NotInFamily);
}

TEST_CASE("build at t = 0.3") {
    const SchwarzSystem s = system_at(0.3);
    const auto& tr = s.triple();
    for (const auto& c : tr) CHECK(std::abs(std::abs(c.value() - s.disc().center()) - s.disc().radius()) < 1e-12);
    CHECK(s.cf().is_infinite());
    for (const auto& c : tr) CHECK(spherical_distance(s.involution()(c), c) > 0);
    CHECK(spherical_distance(s.involution()(tr[0]), tr[0]) < 1e-12);
    CHECK(spherical_distance(s.involution()(tr[1]), tr[2]) < 1e-12);
}

TEST_CASE("sigma on the base system") {
    const SchwarzSystem& s = sigma0();
    CHECK(std::abs(sigma_eval(s, SpherePointd(8.0 / 17)).value() - 0.4) < 1e-14);
    CHECK(sigma_eval(s, SpherePointd(0.0)).value() == C(0));
    const C b = f0(std::polar(1.0, kPi / 5));
    CHECK(std::abs(sigma_eval(s, b).value() - std::conj(b)) < 1e-10);
    CHECK(std::abs(sigma_derivative(s, SpherePointd(0.0))) < 1e-14);
    CHECK(std::abs(sigma_eval(s, SpherePointd(1e-4)).value() / 1e-8 - 2.0) < 1e-3);
    CHECK_THROWS_AS(sigma_eval(s, SpherePointd(10.0)), OutsideDomain);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 50; ++k) {
        const double x = 0.01 + 0.98 * u(rng);
        CHECK(std::abs(sigma_eval(s, SpherePointd(f0(x))).value() - x * x / (x * x * x + 0.5)) < 1e-10);
        const C zeta = std::polar(0.95 * std::sqrt(u(rng)), 2 * kPi * u(rng));
        CHECK(std::abs(sigma_eval(s, SpherePointd(f0(zeta))).value() - f0(1.0 / zeta)) <
              1e-10 * std::max(1.0, std::abs(f0(1.0 / zeta))));
    }
}

TEST_CASE("sigma derivative against finite differences") {
    const SchwarzSystem s = system_at(0.3);
    for (C zeta : {C(0.1, 0.2), C(-0.3, 0.1), C(0.2, -0.4)}) {
        const C z = s.f()(s.disc().center() + s.disc().radius() * zeta).value();
        const double h = 1e-6;
        const C fd = (sigma_eval(s, z + h).value() - sigma_eval(s, z - h).value()) / (2 * h);
        CHECK(std::abs(fd - sigma_derivative(s, z)) < 1e-6 * std::max(1.0, std::abs(fd)));
    }
}

TEST_CASE("sheet labels") {
    const SchwarzSystem& s = sigma0();
    CHECK(sheet_of(s, SpherePointd(std::polar(0.5, kPi / 3))) == 'b');
    CHECK(sheet_of(s, SpherePointd(std::polar(0.5, kPi))) == 'a');
    CHECK(sheet_of(s, SpherePointd(std::polar(0.5, -kPi / 3))) == 'B');
}

TEST_CASE("tile membership") {
    const SchwarzSystem& s = sigma0();
    CHECK(tile_contains(s, SpherePointd::infinity()) == TileClass::InTile);
    CHECK(tile_contains(s, SpherePointd(0.0)) == TileClass::InDomain);
    CHECK(tile_contains(s, SpherePointd(f0(1.0))) == TileClass::OnBoundary);
}

TEST_CASE("classify points") {
    const SchwarzSystem& s = sigma0();
    const auto conv = classify_point(s, SpherePointd(8.0 / 17), 100);
    CHECK(conv.status == EscapeResult::Status::NonEscaping);
    CHECK(conv.witness == EscapeResult::Witness::ConvergedToFixedPoint);

    const auto inf = classify_point(s, SpherePointd::infinity(), 100);
    CHECK(inf.status == EscapeResult::Status::Escaping);
    CHECK(inf.depth == 0);
    CHECK(inf.address.empty());

    for (const auto& z : preimages_under_sigma(s, SpherePointd(5.0))) {
        const auto e = classify_point(s, z, 100);
        CHECK(e.status == EscapeResult::Status::Escaping);
        CHECK(e.depth == 1);
        CHECK(e.address.size() == 1);
    }
}

TEST_CASE("preimages") {
    const SchwarzSystem& s = sigma0();
    const auto over_inf = preimages_under_sigma(s, SpherePointd::infinity());
    REQUIRE(over_inf.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(tile_contains(s, over_inf[i]) == TileClass::InDomain);
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(spherical_distance(over_inf[i], over_inf[j]) > 0.1);
    }
    const auto over0 = preimages_under_sigma(s, SpherePointd(0.0));
    REQUIRE(over0.size() == 2);
    for (const auto& z : over0) CHECK(std::abs(z.value()) < 1e-6);
}

TEST_CASE("connectedness of the critical orbit") {
    CHECK(critical_orbit_connectedness(sigma0(), 200).status == Connectedness::Connected);
    for (double t : {0.0, 0.1, 0.25, 0.4, 0.5})
        CHECK(critical_orbit_connectedness(system_at(t), 200).status == Connectedness::Connected);
}

TEST_CASE("attracting fixed points") {
    const auto fp = find_attracting_fixed_point(sigma0(), 7);
    REQUIRE(fp);
    CHECK(std::abs(fp->location.value()) < 1e-10);
    CHECK(std::abs(fp->multiplier) < 1e-8);
    CHECK(fp->classification == FixedPointKind::Superattracting);

    const SchwarzSystem s = system_at(0.2);
    const auto p = find_attracting_fixed_point(s, 7);
    REQUIRE(p);
    const C z = p->location.value();
    CHECK(std::abs(z.imag()) < 1e-12);
    CHECK(std::abs(p->multiplier.imag()) < 1e-10);
    CHECK(std::abs(p->multiplier.real()) < 1);
    CHECK(std::abs(sigma_eval(s, z).value() - z) < 1e-10);
    const double h = 1e-6;
    const C fd = (sigma_eval(s, z + h).value() - sigma_eval(s, z - h).value()) / (2 * h);
    CHECK(std::abs(fd - p->multiplier) < 1e-6);

    CHECK(classify_multiplier(0.0) == FixedPointKind::Superattracting);
    CHECK(classify_multiplier(0.5) == FixedPointKind::Attracting);
    CHECK(classify_multiplier(C(0, 1)) == FixedPointKind::Indifferent);
    CHECK(classify_multiplier(2.0) == FixedPointKind::Repelling);
}
