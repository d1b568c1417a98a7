#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "qd/families.hpp"
#include "qd/univalence.hpp"

using namespace qd;
using C = std::complex<double>;

namespace {

RationalMapd square() { return RationalMapd(Polynomiald({0.0, 0.0, 1.0}), Polynomiald({1.0})); }

C fd(const RationalMapd& f, C z, double h = 1e-6) {
    return (f(z + h).value() - f(z - h).value()) / (2 * h);
}

}  // namespace

TEST_CASE("polynomial roots") {
    const auto r = find_roots(Polynomiald({-6.0, 11.0, -6.0, 1.0}));
    REQUIRE(r.finite.size() == 3);
    std::vector<double> re;
    for (C z : r.finite) re.push_back(z.real());
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(1).epsilon(1e-12));
    CHECK(re[1] == doctest::Approx(2).epsilon(1e-12));
    CHECK(re[2] == doctest::Approx(3).epsilon(1e-12));

    const auto lead = find_roots(Polynomiald({1.0, 1.0}), 3);
    CHECK(lead.finite.size() == 1);
    CHECK(lead.at_infinity == 2);

    const auto zero_root = find_roots(Polynomiald({0.0, 1.0, 1.0}));
    REQUIRE(zero_root.finite.size() == 2);
}

TEST_CASE("rational map evaluation") {
    const RationalMapd f = base_map();
    CHECK(f(SpherePointd(0.0)).value() == C(0));
    CHECK(std::abs(f(SpherePointd(0.5)).value() - 8.0 / 17) < 1e-15);
    CHECK(std::abs(f(SpherePointd::infinity()).value()) < 1e-15);
    CHECK(spherical_distance(f(SpherePointd(std::cbrt(-2.0))), SpherePointd::infinity()) < 1e-12);
    CHECK(eval(f, SpherePointd(0.5)).value() == f(SpherePointd(0.5)).value());
    CHECK(f.degree() == 3);
    CHECK_THROWS_AS(RationalMapd::checked(Polynomiald({1.0, 1.0}), Polynomiald({1.0, 1.0})), InvalidRationalMap);
}

TEST_CASE("derivative") {
    const RationalMapd f = base_map();
    const RationalMapd df = derivative(f);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n;
    for (int k = 0; k < 5; ++k) {
        const C z(n(rng), n(rng));
        const C hand = (1.0 - z * z * z) / std::pow(1.0 + z * z * z / 2.0, 2);
        CHECK(std::abs(df(z).value() - hand) < 1e-12 * std::max(1.0, std::abs(hand)));
        CHECK(std::abs(fd(f, z) - hand) < 1e-6 * std::abs(hand));
    }
    CHECK(std::abs(derivative(RationalMapd(Polynomiald({3.0}), Polynomiald({1.0})))(C(2)).value()) == 0);
    CHECK(std::abs(derivative(square())(C(1.5)).value() - 3.0) < 1e-15);
}

TEST_CASE("critical points") {
    const auto cs = critical_points(base_map());
    CHECK(critical_count(cs) == 4);
    int finite = 0;
    bool infinity = false;
    for (const auto& c : cs) {
        CHECK(c.local_degree == 2);
        if (c.point.is_infinite()) {
            infinity = true;
            continue;
        }
        ++finite;
        CHECK(std::abs(std::abs(c.point.value()) - 1) < 1e-12);
        CHECK(std::abs(base_map().derivative_at(c.point.value())) < 1e-10);
    }
    CHECK(finite == 3);
    CHECK(infinity);

    const auto sq = critical_points(square());
    CHECK(critical_count(sq) == 2);
    CHECK(sq.size() == 2);
}

TEST_CASE("fibers") {
    const auto over0 = solve_fiber(base_map(), SpherePointd(0.0));
    REQUIRE(over0.size() == 3);
    CHECK(std::count_if(over0.begin(), over0.end(), [](const SpherePointd& z) { return z.is_infinite(); }) == 2);

    const auto over4 = solve_fiber(square(), SpherePointd(4.0));
    REQUIRE(over4.size() == 2);
    CHECK(std::abs(std::abs(over4[0].value()) - 2) < 1e-12);
    CHECK(std::abs(over4[0].value() + over4[1].value()) < 1e-12);

    const auto over = solve_fiber(base_map(), SpherePointd(8.0 / 17));
    REQUIRE(over.size() == 3);
    int in_disc = 0;
    bool half = false;
    for (const auto& z : over) {
        in_disc += z.is_finite() && std::abs(z.value()) < 1;
        half = half || spherical_distance(z, SpherePointd(0.5)) < 1e-12;
    }
    CHECK(in_disc == 1);
    CHECK(half);
}

TEST_CASE("univalence certificate") {
    CHECK(is_univalent_on_disc(base_map(), OrientedDiscd::unit()).verdict == Univalence::Univalent);

    const auto sq = is_univalent_on_disc(square(), OrientedDiscd::unit());
    CHECK(sq.verdict == Univalence::NotUnivalent);
    REQUIRE(sq.witness);
    CHECK(spherical_distance(square()(sq.witness->first), square()(sq.witness->second)) < 1e-6);

    // Just below t = 1 the certificate still passes; it first fails near t = -0.536.
    const auto near_one = ft_critical_triple(0.99);
    const auto d99 = disc_through(near_one[0], near_one[1], near_one[2]);
    CHECK(is_univalent_on_disc(ft_map(0.99), d99).verdict == Univalence::Univalent);

    const auto low = ft_critical_triple(-0.8);
    CHECK(is_univalent_on_disc(ft_map(-0.8), disc_through(low[0], low[1], low[2])).verdict ==
          Univalence::NotUnivalent);

    const auto pole = ft_critical_triple(-1.0);
    CHECK(is_univalent_on_disc(ft_map(-1.0), disc_through(pole[0], pole[1], pole[2])).verdict ==
          Univalence::Inconclusive);
}
