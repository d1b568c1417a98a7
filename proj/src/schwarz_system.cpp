#include "qd/schwarz_system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qd/univalence.hpp"

namespace qd {
namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 2 * std::numbers::pi;

constexpr double kSnapTol = 1e-6;        // triple point to computed critical point
constexpr double kInvolutionTol = 1e-12;
constexpr double kConvergedTol = 1e-8;   // neighbourhood of the attracting fixed point
constexpr double kCriticalValueTol = 1e-7;
constexpr double kFixedResidual = 1e-10;

bool real_up_to_phase(const RationalMapd& f) {
    Complex lead(0);
    for (const auto* p : {&f.num(), &f.den()})
        for (int k = 0; k <= p->degree(); ++k)
            if (std::abs((*p)[k]) > std::abs(lead)) lead = (*p)[k];
    const Complex phase = std::conj(lead) / std::abs(lead);
    const double scale = std::abs(lead);
    for (const auto* p : {&f.num(), &f.den()})
        for (int k = 0; k <= p->degree(); ++k)
            if (std::abs(std::imag((*p)[k] * phase)) > 1e-12 * scale) return false;
    return true;
}

// Entries at rounding level are set to zero so that exact cases such as
// M = 1/z stay exact.
Mobiusd chop(const Mobiusd& m) {
    Mobiusd::Matrix a = m.matrix();
    for (int i = 0; i < 4; ++i) {
        const double re = std::abs(a(i).real()) < 1e-15 ? 0.0 : a(i).real();
        const double im = std::abs(a(i).imag()) < 1e-15 ? 0.0 : a(i).imag();
        a(i) = Complex(re, im);
    }
    return Mobiusd(a);
}

// Fiber points of z with their signed distances to the disc.
struct Fiber {
    std::vector<SpherePointd> points;
    std::vector<double> dist;
};

Fiber fiber_of(const SchwarzSystem& s, const SpherePointd& z) {
    Fiber fb;
    fb.points = solve_fiber(s.f(), z);
    for (const auto& p : fb.points) fb.dist.push_back(s.disc().signed_distance(p));
    return fb;
}

}  // namespace

const char* to_string(FixedPointKind k) {
    switch (k) {
        case FixedPointKind::Superattracting: return "Superattracting";
        case FixedPointKind::Attracting: return "Attracting";
        case FixedPointKind::Indifferent: return "Indifferent";
        case FixedPointKind::Repelling: return "Repelling";
    }
    return "?";
}

const char* to_string(TileClass c) {
    switch (c) {
        case TileClass::InTile: return "InTile";
        case TileClass::InDomain: return "InDomain";
        case TileClass::OnBoundary: return "OnBoundary";
    }
    return "?";
}

const char* to_string(Connectedness c) {
    switch (c) {
        case Connectedness::Connected: return "Connected";
        case Connectedness::Disconnected: return "Disconnected";
        case Connectedness::Undetermined: return "Undetermined";
    }
    return "?";
}

FixedPointKind classify_multiplier(Complex lambda) {
    const double m = std::abs(lambda);
    if (m < 1e-8) return FixedPointKind::Superattracting;
    if (m < 1 - 1e-9) return FixedPointKind::Attracting;
    if (m <= 1 + 1e-9) return FixedPointKind::Indifferent;
    return FixedPointKind::Repelling;
}

SchwarzSystem build_system(const RationalMapd& f, const std::array<SpherePointd, 3>& triple,
                           const SchwarzOptions& opt) {
    if (f.degree() != 3) throw NotInFamily("degree is " + std::to_string(f.degree()) + ", expected 3");
    try {
        f.validate();
    } catch (const InvalidRationalMap& e) {
        throw NotInFamily(e.what());
    }

    const auto crit = critical_points(f);
    if (crit.size() != 4) throw NotInFamily("critical points are not simple");
    for (const auto& c : crit)
        if (c.local_degree != 2) throw NotInFamily("critical points are not simple");

    SchwarzSystem s;
    s.f_ = f;
    std::array<bool, 4> used{};
    for (int k = 0; k < 3; ++k) {
        int best = -1;
        double best_d = kSnapTol;
        for (int i = 0; i < 4; ++i) {
            const double d = spherical_distance(triple[k], crit[i].point);
            if (!used[i] && d <= best_d) {
                best = i;
                best_d = d;
            }
        }
        if (best < 0) throw NotInFamily("triple point " + std::to_string(k + 1) + " is not a critical point");
        used[best] = true;
        s.triple_[k] = crit[best].point;
    }
    for (int i = 0; i < 4; ++i)
        if (!used[i]) s.cf_ = crit[i].point;

    const auto& [c1, c2, c3] = s.triple_;
    try {
        s.disc_ = disc_through(c1, c2, c3);
    } catch (const DegenerateTriple&) {
        throw NotInFamily("critical triple is degenerate");
    }
    if (!s.disc_.is_bounded())
        throw NotInFamily("critical triple does not run counterclockwise around a Euclidean disc");

    s.m_ = chop(Mobiusd::from_triple(s.triple_, {c1, c3, c2}));
    if (spherical_distance(s.m_(c1), c1) > kInvolutionTol || spherical_distance(s.m_(c2), c3) > kInvolutionTol ||
        spherical_distance(s.m_(c3), c2) > kInvolutionTol)
        throw NotInFamily("involution does not permute the triple");
    if (disc_contains(s.disc_, s.m_(SpherePointd(s.disc_.center())), kDomainBand) != Containment::Outside)
        throw NotInFamily("involution does not exchange the disc and its complement");
    if (disc_contains(s.disc_, s.cf_, kDomainBand) != Containment::Outside)
        throw NotInFamily("remaining critical point is not outside the closed disc");

    const auto uni = is_univalent_on_disc(f, s.disc_, opt.n_boundary, opt.n_interior);
    if (uni.verdict != Univalence::Univalent) throw NotInFamily("univalence certificate failed: " + uni.reason);

    s.sigma_crit_ = f(s.m_(s.cf_));
    s.fm_ = compose(f, s.m_);
    for (int k = 0; k < 3; ++k) s.critical_values_[k] = f(s.triple_[k]);

    const Complex center = s.disc_.center();
    for (int k = 0; k < 3; ++k) s.angles_[k] = std::arg(s.triple_[k].value() - center);
    for (int k = 1; k < 3; ++k)
        while (s.angles_[k] <= s.angles_[k - 1]) s.angles_[k] += kTwoPi;

    s.real_symmetric_ = real_up_to_phase(f) && std::abs(c1.value().imag()) < 1e-9 &&
                        std::abs(c2.value() - std::conj(c3.value())) < 1e-9;

    constexpr int kBoundarySamples = 512;
    for (int k = 0; k <= kBoundarySamples; ++k) {
        const double a = kTwoPi * (k % kBoundarySamples) / kBoundarySamples;
        const auto w = f(SpherePointd(center + s.disc_.radius() * std::polar(1.0, a)));
        if (w.is_infinite()) throw NotInFamily("f has a pole on the disc boundary");
        s.boundary_.push_back(w.value());
    }

    if (opt.fixed_point_seeds > 0) s.attracting_ = find_attracting_fixed_point(s, opt.fixed_point_seeds);
    return s;
}

TileClass tile_contains(const SchwarzSystem& s, const SpherePointd& z) {
    const Fiber fb = fiber_of(s, z);
    bool boundary = false;
    for (double d : fb.dist) {
        if (d < -kDomainBand) return TileClass::InDomain;
        if (d <= kDomainBand) boundary = true;
    }
    return boundary ? TileClass::OnBoundary : TileClass::InTile;
}

char sheet_of(const SchwarzSystem& s, const SpherePointd& zeta) {
    const auto& th = s.critical_angles();
    const Complex rel = zeta.value() - s.disc().center();
    if (rel == Complex(0)) return 'a';
    double phi = std::fmod(std::arg(rel) - th[0], kTwoPi);
    if (phi < 0) phi += kTwoPi;
    if (phi < th[1] - th[0]) return 'b';
    if (phi < th[2] - th[0]) return 'a';
    return 'B';
}

SigmaStep sigma_step(const SchwarzSystem& s, const SpherePointd& z) {
    const Fiber fb = fiber_of(s, z);
    int hit = -1, count = 0;
    for (std::size_t i = 0; i < fb.points.size(); ++i)
        if (fb.dist[i] <= kDomainBand) {
            hit = int(i);
            ++count;
        }
    if (count == 0) throw OutsideDomain();
    if (count > 1) throw AmbiguousBranch();
    SigmaStep st;
    st.zeta = fb.points[hit];
    st.value = s.f()(s.involution()(st.zeta));
    st.sheet = sheet_of(s, st.zeta);
    return st;
}

SpherePointd sigma_eval(const SchwarzSystem& s, const SpherePointd& z) { return sigma_step(s, z).value; }

Complex sigma_derivative(const SchwarzSystem& s, const SpherePointd& z) {
    const Complex zeta = sigma_step(s, z).zeta.value();
    const Complex df = s.f().derivative_at(zeta);
    if (std::abs(df) < 1e-300) throw Error("sigma_derivative: z is a critical value of f");
    if (std::abs(s.fm().den()(zeta)) == 0) throw Error("sigma_derivative: sigma has a pole at z");
    return s.fm().derivative_at(zeta) / df;
}

std::vector<SpherePointd> preimages_under_sigma(const SchwarzSystem& s, const SpherePointd& w) {
    const Fiber fb = fiber_of(s, w);
    std::vector<SpherePointd> out;
    for (std::size_t i = 0; i < fb.points.size(); ++i)
        if (fb.dist[i] > kDomainBand) out.push_back(s.f()(s.involution()(fb.points[i])));
    return out;
}

EscapeResult classify_point(const SchwarzSystem& s, const SpherePointd& start, int max_iter) {
    using Status = EscapeResult::Status;
    EscapeResult r;
    SpherePointd z = start;
    for (int n = 0;; ++n) {
        r.depth = n;
        const TileClass tc = tile_contains(s, z);
        if (tc == TileClass::InTile) {
            r.status = Status::Escaping;
            return r;
        }
        if (tc == TileClass::OnBoundary) {
            for (const auto& v : s.critical_values())
                if (spherical_distance(z, v) < kCriticalValueTol) {
                    r.status = Status::Undetermined;
                    r.reason = "orbit meets a critical value of f";
                    return r;
                }
            r.status = Status::Escaping;
            return r;
        }
        if (s.attracting() && spherical_distance(z, s.attracting()->location) < kConvergedTol) {
            r.status = Status::NonEscaping;
            r.witness = EscapeResult::Witness::ConvergedToFixedPoint;
            return r;
        }
        if (n == max_iter) break;
        try {
            const SigmaStep st = sigma_step(s, z);
            r.address.push_back(st.sheet);
            z = st.value;
        } catch (const Error& e) {
            r.status = Status::Undetermined;
            r.reason = e.what();
            return r;
        }
    }
    r.status = Status::NonEscaping;
    r.witness = EscapeResult::Witness::BoundedForMaxIter;
    return r;
}

ConnectednessResult critical_orbit_connectedness(const SchwarzSystem& s, int max_iter) {
    const EscapeResult e = classify_point(s, s.sigma_crit(), max_iter);
    switch (e.status) {
        case EscapeResult::Status::Escaping: return {Connectedness::Disconnected, e.depth};
        case EscapeResult::Status::NonEscaping: return {Connectedness::Connected, e.depth};
        default: return {Connectedness::Undetermined, e.depth};
    }
}

std::optional<FixedPointReport> find_attracting_fixed_point(const SchwarzSystem& s, int seeds) {
    if (seeds < 1) throw std::invalid_argument("find_attracting_fixed_point: seeds must be >= 1");
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& w : s.boundary_image()) {
        x0 = std::min(x0, w.real());
        x1 = std::max(x1, w.real());
        y0 = std::min(y0, w.imag());
        y1 = std::max(y1, w.imag());
    }

    std::optional<FixedPointReport> best;
    for (int i = 0; i < seeds; ++i)
        for (int j = 0; j < seeds; ++j) {
            Complex z(x0 + (x1 - x0) * (i + 0.5) / seeds, y0 + (y1 - y0) * (j + 0.5) / seeds);
            try {
                if (tile_contains(s, z) != TileClass::InDomain) continue;
                for (int it = 0; it < 50; ++it) {
                    const SigmaStep st = sigma_step(s, z);
                    if (st.value.is_infinite()) throw OutsideDomain();
                    const Complex g = st.value.value() - z;
                    const Complex dz = g / (sigma_derivative(s, z) - 1.0);
                    z -= dz;
                    if (std::abs(dz) < 1e-13 * std::max(1.0, std::abs(z))) break;
                }
                const SpherePointd p(z);
                if (spherical_distance(sigma_eval(s, p), p) >= kFixedResidual) continue;
                const Complex lambda = sigma_derivative(s, p);
                if (std::abs(lambda) >= 1) continue;
                if (!best || std::abs(lambda) < std::abs(best->multiplier))
                    best = FixedPointReport{p, lambda, classify_multiplier(lambda)};
            } catch (const Error&) {
                continue;
            }
        }
    return best;
}

}  // namespace qd
