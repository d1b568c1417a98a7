#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qd/oriented_disc.hpp"
#include "qd/rational_map.hpp"

namespace qd {

class NotInFamily : public Error {
public:
    explicit NotInFamily(const std::string& why) : Error("not in family: " + why) {}
};

class OutsideDomain : public Error {
public:
    OutsideDomain() : Error("point lies outside f(D)") {}
};

class AmbiguousBranch : public Error {
public:
    AmbiguousBranch() : Error("several fiber points lie in the closed disc; point is too close to a critical value") {}
};

enum class FixedPointKind { Superattracting, Attracting, Indifferent, Repelling };

const char* to_string(FixedPointKind k);

/// Classification of a fixed point by the modulus of its multiplier.
FixedPointKind classify_multiplier(std::complex<double> lambda);

struct FixedPointReport {
    SpherePointd location;
    std::complex<double> multiplier;
    FixedPointKind classification = FixedPointKind::Repelling;
};

struct SchwarzOptions {
    int n_boundary = 1024;  // univalence certificate resolution
    int n_interior = 64;
    int fixed_point_seeds = 7;  // per side of the seed grid; 0 skips the search
};

/// sigma = f o M o f^-1 on f(D), where D is the disc through (c1, c2, c3)
/// and M fixes c1 while swapping c2 and c3. Immutable once built.
class SchwarzSystem {
public:
    using Complex = std::complex<double>;

    const RationalMapd& f() const { return f_; }
    const std::array<SpherePointd, 3>& triple() const { return triple_; }
    const SpherePointd& cf() const { return cf_; }
    const OrientedDiscd& disc() const { return disc_; }
    const Mobiusd& involution() const { return m_; }
    /// The unique critical point of sigma, f(M(cf)).
    const SpherePointd& sigma_crit() const { return sigma_crit_; }
    bool real_symmetric() const { return real_symmetric_; }
    /// f o M, used for derivatives of sigma.
    const RationalMapd& fm() const { return fm_; }
    const std::array<SpherePointd, 3>& critical_values() const { return critical_values_; }
    /// Angles of c1, c2, c3 about the disc center, strictly increasing from theta1.
    const std::array<double, 3>& critical_angles() const { return angles_; }
    /// f sampled on the disc boundary (closed polyline, first sample repeated).
    const std::vector<Complex>& boundary_image() const { return boundary_; }
    /// The attracting fixed point found at build time, if any.
    const std::optional<FixedPointReport>& attracting() const { return attracting_; }

private:
    friend SchwarzSystem build_system(const RationalMapd&, const std::array<SpherePointd, 3>&,
                                      const SchwarzOptions&);
    SchwarzSystem() = default;

    RationalMapd f_;
    std::array<SpherePointd, 3> triple_;
    SpherePointd cf_;
    OrientedDiscd disc_ = OrientedDiscd::unit();
    Mobiusd m_;
    SpherePointd sigma_crit_;
    bool real_symmetric_ = false;
    RationalMapd fm_;
    std::array<SpherePointd, 3> critical_values_;
    std::array<double, 3> angles_{};
    std::vector<Complex> boundary_;
    std::optional<FixedPointReport> attracting_;
};

/// Throws NotInFamily unless f has degree 3 with four simple critical points,
/// the triple consists of critical points bounding a Euclidean disc D
/// counterclockwise, the remaining critical point lies outside the closed
/// disc, and the univalence certificate on D passes.
SchwarzSystem build_system(const RationalMapd& f, const std::array<SpherePointd, 3>& triple,
                           const SchwarzOptions& opt = {});

constexpr double kDomainBand = 1e-9;

enum class TileClass { InTile, InDomain, OnBoundary };

const char* to_string(TileClass c);

/// Which of f(D), its boundary curve, or the tile T_f contains z.
TileClass tile_contains(const SchwarzSystem& s, const SpherePointd& z);

/// One application of sigma together with the branch taken.
struct SigmaStep {
    SpherePointd zeta;   // the fiber point of z in the closed disc
    SpherePointd value;  // sigma(z) = f(M(zeta))
    char sheet = 'a';    // label of the sector of D containing zeta
};

/// Throws OutsideDomain or AmbiguousBranch.
SigmaStep sigma_step(const SchwarzSystem& s, const SpherePointd& z);

SpherePointd sigma_eval(const SchwarzSystem& s, const SpherePointd& z);

/// sigma'(z) = (f o M)'(zeta) / f'(zeta). Throws OutsideDomain or AmbiguousBranch,
/// and Error when z is a critical value of f or sigma has a pole at z.
std::complex<double> sigma_derivative(const SchwarzSystem& s, const SpherePointd& z);

/// Sheet letter of a point of the closed disc: the arc from c1 to c2 is 'b',
/// from c2 to c3 is 'a', and from c3 back to c1 is 'B'.
char sheet_of(const SchwarzSystem& s, const SpherePointd& zeta);

/// All z in f(D) with sigma(z) = w, with multiplicity.
std::vector<SpherePointd> preimages_under_sigma(const SchwarzSystem& s, const SpherePointd& w);

struct EscapeResult {
    enum class Status { Escaping, NonEscaping, Undetermined };
    enum class Witness { None, ConvergedToFixedPoint, BoundedForMaxIter };

    Status status = Status::Undetermined;
    int depth = 0;        // escape depth for Escaping, iterations used otherwise
    std::string address;  // sheet letters in step order
    Witness witness = Witness::None;
    std::string reason;   // for Undetermined
};

/// Iterates sigma until the orbit reaches the tile, converges to the cached
/// attracting fixed point, or max_iter applications have been made.
EscapeResult classify_point(const SchwarzSystem& s, const SpherePointd& z, int max_iter);

enum class Connectedness { Connected, Disconnected, Undetermined };

struct ConnectednessResult {
    Connectedness status = Connectedness::Undetermined;
    int depth = 0;
};

const char* to_string(Connectedness c);

/// Follows the orbit of sigma_crit.
ConnectednessResult critical_orbit_connectedness(const SchwarzSystem& s, int max_iter);

/// Newton's method on sigma(z) - z from a seeds x seeds grid over the bounding
/// box of f(D). Returns the attracting fixed point of smallest multiplier.
std::optional<FixedPointReport> find_attracting_fixed_point(const SchwarzSystem& s, int seeds);

}  // namespace qd
