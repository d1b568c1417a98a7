#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qd/oriented_disc.hpp"
#include "qd/rational_map.hpp"

namespace qd {

enum class Univalence { Univalent, NotUnivalent, Inconclusive };

struct UnivalenceReport {
    Univalence verdict = Univalence::Inconclusive;
    /// Two distinct points of the closed disc with (nearly) equal images.
    std::optional<std::pair<SpherePointd, SpherePointd>> witness;
    std::string reason;
};

/// Sampled injectivity certificate for f on the closure of `disc`.
///
/// The disc is pulled back to the unit disc by a Mobius map. The verdict is
/// NotUnivalent when two well-separated samples share an image, when the
/// sampled boundary image self-intersects, or when its winding number about
/// an interior image differs from 1. Univalent requires all of these checks
/// to pass with every winding evaluation resolved; Inconclusive otherwise
/// (including poles of f on the closed disc).
UnivalenceReport is_univalent_on_disc(const RationalMapd& f, const OrientedDiscd& disc, int n_boundary = 1024,
                                      int n_interior = 64);

}  // namespace qd
