#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qd/markov.hpp"

using namespace qd;
using C = std::complex<double>;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Contraction ratio of z^2 + c near its attracting fixed point, by iteration.
C fitted_multiplier(C c) {
    C z = 0;
    for (int k = 0; k < 2000; ++k) z = z * z + c;
    const C z0 = z + 1e-7;
    return (z0 * z0 + c - z) / (z0 - z);
}

}  // namespace

TEST_CASE("rho on the real line") {
    CHECK(rho_piece(kInf) == 1);
    CHECK(rho_piece(-kInf) == 1);
    CHECK(rho_piece(-1) == 1);
    CHECK(rho_piece(1) == 2);
    CHECK(rho_piece(1.5) == 3);
    CHECK(std::isinf(rho_real(0)));
    CHECK(std::isinf(rho_real(kInf)));
    CHECK(rho_real(3) == 1);
    CHECK(rho_real(-3) == -1);
    CHECK(rho_real(0.5) == -2);
}

TEST_CASE("itineraries") {
    CHECK(rho_itinerary(0, 2) == Itinerary{2, 1});
    CHECK(rho_itinerary(3, 2) == Itinerary{3, 2});
    CHECK(rho_itinerary(kInf, 1) == Itinerary{1});
    CHECK(circle_piece(0) == 1);
    CHECK(circle_piece(0.5) == 2);
    CHECK(circle_piece(0.2) == 3);
    CHECK(doubling(0.75) == 0.5);
    CHECK(doubling_itinerary(0.5, 2) == Itinerary{2, 1});
}

TEST_CASE("E anchors") {
    CHECK(markov_E(kInf) == 0);
    CHECK(markov_E(1) == 1.0 / 3);
    CHECK(markov_E(-1) == 2.0 / 3);
    CHECK(markov_E(0) == 0.5);
    CHECK(std::isinf(markov_E_inverse(0)));
    CHECK(markov_E_inverse(0.5) == 0);
    CHECK(markov_E_inverse(2.0 / 3) == -1);
}

TEST_CASE("E semi-conjugacy and order") {
    std::mt19937_64 rng(1);
    std::cauchy_distribution<double> c(0, 2);
    double prev_t = -kInf, prev_e = 1;
    std::vector<double> ts;
    for (int k = 0; k < 200; ++k) ts.push_back(c(rng));
    std::sort(ts.begin(), ts.end());
    int checked = 0;
    for (double t : ts) {
        if (rho_expansion(t, 40) < 1e8) continue;
        const double e = markov_E(t);
        CHECK(circle_distance(markov_E(rho_real(t)), doubling(e)) < 1e-6);
        if (t > prev_t) CHECK(e < prev_e);
        prev_t = t;
        prev_e = e;
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("expansion") {
    CHECK(std::isinf(rho_expansion(0, 3)));
    // -1/t is a rotation of the sphere; only the translations expand.
    CHECK(rho_expansion(0.5, 1) == doctest::Approx(1));
    CHECK(rho_expansion(3, 1) == doctest::Approx(5));
    CHECK(rho_expansion(0.999, 40) < rho_expansion(0.3, 40));
}

TEST_CASE("multipliers") {
    CHECK(quad_multiplier(0.0) == C(0));
    CHECK(quad_multiplier(-0.75) == C(-1));
    CHECK(quad_multiplier(0.1875) == C(0.5));
    CHECK(c_of_multiplier(0.0) == C(0));
    CHECK(c_of_multiplier(-1.0) == C(-0.75));
    CHECK(c_of_multiplier(1.0) == C(0.25));
    for (C c : {C(-0.5), C(0.1875), C(-0.1, 0.2)}) CHECK(std::abs(fitted_multiplier(c) - quad_multiplier(c)) < 1e-6);
}

TEST_CASE("Blaschke model") {
    const C lambda(0.3, -0.4);
    CHECK(blaschke_eval(lambda, 0.0) == C(0));
    const double h = 1e-7;
    CHECK(std::abs((blaschke_eval(lambda, h) - blaschke_eval(lambda, -h)) / (2 * h) - lambda) < 1e-7);
    for (int k = 0; k < 100; ++k)
        CHECK(std::abs(std::abs(blaschke_eval(lambda, std::polar(1.0, 0.0628 * k))) - 1) < 1e-12);
    CHECK_THROWS(blaschke_eval(1.0, 0.5));
}
