#pragma once

#include <complex>
#include <vector>

namespace qd {

// Extended reals use +infinity (or -infinity) for the point at infinity.
// Circle angles are turns in [0, 1).

using Itinerary = std::vector<int>;

/// Piece of t: 1 for [inf, -1], 2 for (-1, 1], 3 for (1, inf). A shared
/// endpoint belongs to the piece of lower index.
int rho_piece(double t);

/// rho on the extended real line: t + 2, -1/t, t - 2 on pieces 1, 2, 3.
double rho_real(double t);

Itinerary rho_itinerary(double t, int n);

/// Derivative of rho^n at t measured in the chordal metric of the extended
/// real line. Small values mark orbits that linger near the parabolic points
/// 1, -1 and infinity, where E is too flat to invert at finite depth.
double rho_expansion(double t, int n);

/// Arc of theta: 1 for [2/3, 1] with 0 included, 2 for [1/3, 2/3), 3 for (0, 1/3).
/// A shared endpoint belongs to the arc of lower index.
int circle_piece(double theta);

double doubling(double theta);

Itinerary doubling_itinerary(double theta, int n);

/// Chordal distance between e^{2 pi i a} and e^{2 pi i b}.
double circle_distance(double a, double b);

/// The homeomorphism E from the extended real line to the circle with
/// E(rho(t)) = E(t)^2 and E(inf) = 0, E(1) = 1/3, E(-1) = 2/3, computed by
/// matching itineraries of length `depth`.
double markov_E(double t, int depth = 40);

/// Inverse of markov_E by the same construction on the real side.
double markov_E_inverse(double theta, int depth = 40);

/// Multiplier 1 - sqrt(1 - 4c) of the attracting-side fixed point of z^2 + c.
std::complex<double> quad_multiplier(std::complex<double> c);

/// c = lambda/2 - lambda^2/4, the inverse of quad_multiplier.
std::complex<double> c_of_multiplier(std::complex<double> lambda);

/// z (z + lambda) / (1 + conj(lambda) z) for |lambda| < 1.
std::complex<double> blaschke_eval(std::complex<double> lambda, std::complex<double> z);

}  // namespace qd
