#pragma once

#include <array>

#include "qd/rational_map.hpp"

namespace qd {

/// z / (1 + z^3 / 2), the base map whose disc is the unit disc.
RationalMapd base_map();

/// (z + t) / (1 + z^3 / 2).
RationalMapd ft_map(std::complex<double> t);

/// The three finite critical points of f_t, starting from the one closest in
/// argument to the positive real axis and continuing counterclockwise around
/// their circumcircle.
std::array<SpherePointd, 3> ft_critical_triple(std::complex<double> t);

}  // namespace qd
