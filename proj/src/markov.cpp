#include "qd/markov.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qd {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAnchorTol = 1e-12;
constexpr double kAngleAnchorTol = 1e-14;

// Index of the anchor t is (numerically) equal to: 1 for inf, 2 for 1, 3 for -1.
int real_anchor(double t) {
    if (std::isinf(t) || std::abs(t) > 1 / kAnchorTol) return 1;
    if (std::abs(t - 1) <= kAnchorTol) return 2;
    if (std::abs(t + 1) <= kAnchorTol) return 3;
    return 0;
}

int angle_anchor(double theta) {
    if (circle_distance(theta, 0) <= kAngleAnchorTol) return 1;
    if (circle_distance(theta, 1.0 / 3) <= kAngleAnchorTol) return 2;
    if (circle_distance(theta, 2.0 / 3) <= kAngleAnchorTol) return 3;
    return 0;
}

constexpr double kAnchorAngle[] = {0, 0, 1.0 / 3, 2.0 / 3};
constexpr double kAnchorReal[] = {0, kInf, 1, -1};

double wrap(double theta) {
    theta -= std::floor(theta);
    return theta >= 1 ? 0 : theta;
}

// Distance from theta to the closed arc of piece k, in turns.
double arc_gap(double theta, int k) {
    const double lo = k == 1 ? 2.0 / 3 : (k == 2 ? 1.0 / 3 : 0.0);
    const double hi = lo + 1.0 / 3;
    const double x = wrap(theta - lo);
    return x <= hi - lo ? 0 : std::min(x - (hi - lo), 1 - x);
}

}  // namespace

int rho_piece(double t) {
    if (std::isnan(t)) throw std::invalid_argument("rho_piece: NaN");
    if (std::isinf(t) || t <= -1) return 1;
    return t <= 1 ? 2 : 3;
}

double rho_real(double t) {
    switch (rho_piece(t)) {
        case 1: return std::isinf(t) ? kInf : t + 2;
        case 2: return t == 0 ? kInf : -1 / t;
        default: return t - 2;
    }
}

Itinerary rho_itinerary(double t, int n) {
    if (n < 1) throw std::invalid_argument("rho_itinerary: n must be >= 1");
    Itinerary it;
    for (int k = 0; k < n; ++k) {
        it.push_back(rho_piece(t));
        t = rho_real(t);
    }
    return it;
}

double rho_expansion(double t, int n) {
    if (std::isinf(t)) return 1;
    double d = 1 + t * t;
    for (int k = 0; k < n; ++k) {
        if (rho_piece(t) == 2) {
            if (t == 0) return kInf;
            d /= t * t;
        }
        t = rho_real(t);
        if (std::isinf(t)) return kInf;
    }
    return d / (1 + t * t);
}

int circle_piece(double theta) {
    theta = wrap(theta);
    if (theta == 0 || theta >= 2.0 / 3) return 1;
    return theta >= 1.0 / 3 ? 2 : 3;
}

double doubling(double theta) { return wrap(2 * wrap(theta)); }

Itinerary doubling_itinerary(double theta, int n) {
    if (n < 1) throw std::invalid_argument("doubling_itinerary: n must be >= 1");
    Itinerary it;
    for (int k = 0; k < n; ++k) {
        it.push_back(circle_piece(theta));
        theta = doubling(theta);
    }
    return it;
}

double circle_distance(double a, double b) {
    return 2 * std::abs(std::sin(std::numbers::pi * (a - b)));
}

double markov_E(double t, int depth) {
    if (depth < 8) throw std::invalid_argument("markov_E: depth must be >= 8");
    Itinerary it;
    double theta = 0;
    bool anchored = false;
    for (int k = 0; k < depth; ++k) {
        if (const int a = real_anchor(t)) {
            theta = kAnchorAngle[a];
            anchored = true;
            break;
        }
        it.push_back(rho_piece(t));
        t = rho_real(t);
    }
    if (!anchored) {
        const int last = it.back();
        it.pop_back();
        theta = last == 1 ? 5.0 / 6 : (last == 2 ? 0.5 : 1.0 / 6);
    }
    for (auto k = it.size(); k-- > 0;) {
        const double lo = theta / 2, hi = theta / 2 + 0.5;
        theta = arc_gap(lo, it[k]) <= arc_gap(hi, it[k]) ? lo : hi;
    }
    return theta;
}

double markov_E_inverse(double theta, int depth) {
    if (depth < 8) throw std::invalid_argument("markov_E_inverse: depth must be >= 8");
    theta = wrap(theta);
    // Orbits that land on an anchor are pulled back exactly along the inverse
    // branches of rho into the visited pieces.
    Itinerary it;
    double t = 0;
    bool anchored = false;
    double phi = theta;
    for (int k = 0; k < depth; ++k) {
        if (const int a = angle_anchor(phi)) {
            t = kAnchorReal[a];
            anchored = true;
            break;
        }
        it.push_back(circle_piece(phi));
        phi = doubling(phi);
    }
    if (anchored) {
        for (auto k = it.size(); k-- > 0;) {
            switch (it[k]) {
                case 1: t = std::isinf(t) ? kInf : t - 2; break;
                case 2: t = std::isinf(t) ? 0.0 : (t == 0 ? kInf : -1 / t); break;
                default: t = std::isinf(t) ? kInf : t + 2; break;
            }
        }
        return t;
    }

    // Otherwise bisect: E decreases from 1 to 0 along s -> tan(pi (s - 1/2)).
    auto real_of = [](double s) { return std::tan(std::numbers::pi * (s - 0.5)); };
    double lo = 0, hi = 1;
    for (int k = 0; k < 64; ++k) {
        const double mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) break;
        const double e = markov_E(real_of(mid), depth);
        (e == 0 ? 1.0 : e) > theta ? lo = mid : hi = mid;
    }
    return real_of((lo + hi) / 2);
}

std::complex<double> quad_multiplier(std::complex<double> c) { return 1.0 - std::sqrt(1.0 - 4.0 * c); }

std::complex<double> c_of_multiplier(std::complex<double> lambda) { return lambda / 2.0 - lambda * lambda / 4.0; }

std::complex<double> blaschke_eval(std::complex<double> lambda, std::complex<double> z) {
    if (std::abs(lambda) >= 1) throw std::invalid_argument("blaschke_eval: |lambda| must be < 1");
    return z * (z + lambda) / (1.0 + std::conj(lambda) * z);
}

}  // namespace qd
