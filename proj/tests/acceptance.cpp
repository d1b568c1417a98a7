#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "qd/cli.hpp"
#include "qd/families.hpp"
#include "qd/markov.hpp"
#include "qd/modular_group.hpp"
#include "qd/raster.hpp"
#include "qd/schwarz_system.hpp"

using namespace qd;
using C = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double x, int digits = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

C f0(C z) { return z / (1.0 + z * z * z / 2.0); }

const SchwarzSystem& sigma0() {
    static const SchwarzSystem s = build_system(base_map(), ft_critical_triple(0));
    return s;
}

Outcome base_identity() {
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> lr(std::log(0.1), std::log(10)), ua(0, 2 * kPi);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const C z = std::polar(std::exp(lr(rng)), ua(rng));
        const C lhs = 1.0 / base_map()(SpherePointd(1.0 / z)).value();
        worst = std::max(worst, std::abs(lhs - (z + 1.0 / (2.0 * z * z))));
    }
    return {worst < 1e-12, "max_err=" + num(worst) + " tol=1e-12"};
}

Outcome real_orbit() {
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
        const double x = 0.01 + 0.98 * (k + 0.5) / 50;
        worst = std::max(worst, std::abs(sigma_eval(sigma0(), SpherePointd(f0(x))).value() - x * x / (x * x * x + 0.5)));
    }
    return {worst < 1e-10, "max_err=" + num(worst) + " tol=1e-10"};
}

Outcome boundary_identity() {
    double worst = 0;
    for (double t : {0.0, 0.3, 0.6}) {
        const SchwarzSystem s = build_system(ft_map(t), ft_critical_triple(t));
        for (int k = 0; k < 1024; ++k) {
            const C zeta = s.disc().center() + s.disc().radius() * std::polar(1.0, 2 * kPi * (k + 0.5) / 1024);
            const C z = s.f()(zeta).value();
            worst = std::max(worst, std::abs(sigma_eval(s, z).value() - std::conj(z)));
        }
    }
    return {worst < 1e-9, "max_err=" + num(worst) + " tol=1e-9"};
}

Outcome covering_degrees() {
    const SchwarzSystem& s = sigma0();
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> box(-4, 4), u(0, 1);
    int bad3 = 0, bad2 = 0, n3 = 0, n2 = 0;
    while (n3 < 100) {
        const SpherePointd w(box(rng), box(rng));
        if (tile_contains(s, w) != TileClass::InTile) continue;
        ++n3;
        bad3 += preimages_under_sigma(s, w).size() != 3;
    }
    while (n2 < 100) {
        const SpherePointd w(f0(std::polar(std::sqrt(u(rng)), 2 * kPi * u(rng))));
        if (tile_contains(s, w) != TileClass::InDomain) continue;
        if (tile_contains(s, sigma_eval(s, w)) != TileClass::InDomain) continue;
        ++n2;
        bad2 += preimages_under_sigma(s, w).size() != 2;
    }
    return {bad3 == 0 && bad2 == 0, "degree3_failures=" + std::to_string(bad3) + " degree2_failures=" +
                                        std::to_string(bad2)};
}

Outcome superattracting() {
    const auto fp = find_attracting_fixed_point(sigma0(), 7);
    if (!fp) return {false, "no attracting fixed point found"};
    const double loc = std::abs(fp->location.value()), mult = std::abs(fp->multiplier);
    const double ratio = std::abs(sigma_eval(sigma0(), SpherePointd(1e-4)).value() / 1e-8 - 2.0);
    return {loc < 1e-10 && mult < 1e-8 && ratio < 1e-3,
            "location=" + num(loc) + " |multiplier|=" + num(mult) + " ratio_err=" + num(ratio)};
}

bool near_endpoint_preimage(double t) {
    for (int k = 0; k < 8; ++k) {
        if (std::isinf(t) || std::abs(std::abs(t) - 1) < 1e-4 || std::abs(t) < 1e-4 || std::abs(t) > 1e4) return true;
        t = rho_real(t);
    }
    return false;
}

Outcome markov_suite() {
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> u(0, 1);
    int bad_transitions = 0;
    for (int k = 0; k < 300; ++k) {
        double t;
        switch (k % 3) {
            case 0: t = -1 - 20 * u(rng); break;
            case 1: t = -1 + 2 * u(rng); break;
            default: t = 1 + 20 * u(rng); break;
        }
        const int from = rho_piece(t), to = rho_piece(rho_real(t));
        const bool ok = (from == 1 && to != 3) || (from == 2 && to != 2) || (from == 3 && to != 1);
        bad_transitions += !ok;
    }
    std::cauchy_distribution<double> c(0, 2);
    double worst = 0;
    for (int n = 0; n < 1000;) {
        const double t = c(rng);
        if (near_endpoint_preimage(t)) continue;
        ++n;
        worst = std::max(worst, circle_distance(markov_E(rho_real(t), 40), doubling(markov_E(t, 40))));
    }
    const bool anchors = markov_E(kInf) == 0 && markov_E(1) == 1.0 / 3 && markov_E(-1) == 2.0 / 3;
    return {bad_transitions == 0 && worst < 1e-6 && anchors,
            "transition_failures=" + std::to_string(bad_transitions) + " semiconj_err=" + num(worst) +
                " anchors=" + (anchors ? "exact" : "wrong")};
}

Outcome group_suite() {
    int words = 0, failed = 0;
    for (const Word& w : reduced_words(5)) {
        if (w.empty()) continue;
        ++words;
        failed += !word_return_check(w, 10, 0);
    }
    double worst = 0;
    for (int d = 2; d <= 6; ++d) {
        const auto cs = gamma_d_circles(d);
        worst = std::max(worst, std::abs(cs.r - std::tan(kPi / (d + 1))));
        for (C z : cs.centers) worst = std::max(worst, std::abs(std::norm(z) - 1 - cs.r * cs.r));
    }
    return {failed == 0 && worst < 1e-12, "words=" + std::to_string(words) + " word_failures=" +
                                              std::to_string(failed) + " geometry_err=" + num(worst)};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome julia_render() {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string p1 = (dir / "qd_accept_1.ppm").string(), p8 = (dir / "qd_accept_8.ppm").string();
    std::ostringstream sink;
    const std::vector<std::string> base{"julia", "--t", "0", "--center", "0,0", "--width", "4", "--px", "256",
                                        "--max-iter", "200", "--out"};
    auto args1 = base, args8 = base;
    args1.insert(args1.end(), {p1, "--threads", "1"});
    args8.insert(args8.end(), {p8, "--threads", "8"});
    if (run(args1, sink, sink) != 0 || run(args8, sink, sink) != 0) return {false, "julia run failed: " + sink.str()};
    const bool identical = slurp(p1) == slurp(p8);
    std::filesystem::remove(p1);
    std::filesystem::remove(p8);

    const Viewport v{0, 4, 256, 256};
    const ClassGrid g = classify_grid(sigma0(), v, 200, 8);
    std::vector<bool> mask(g.cells.size());
    for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = g.cells[k].status == EscapeResult::Status::NonEscaping;
    const Components comp = connected_components(mask, 256, 256);
    const C fp = sigma0().attracting()->location.value();
    const double step = v.width / v.px_w;
    const int i = int(std::floor((fp.real() + v.width / 2) / step));
    const int j = int(std::floor((v.height() / 2 - fp.imag()) / step));
    const bool contains = comp.label[std::size_t(j) * 256 + i] == 0;
    return {identical && comp.count == 1 && contains, "components=" + std::to_string(comp.count) +
                                                          " fixed_point_pixel_in_K=" + (contains ? "yes" : "no") +
                                                          " threads_1_vs_8=" + (identical ? "identical" : "differ")};
}

Outcome multiplier_dictionary() {
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> u(0, 1);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const C lambda = std::polar(std::sqrt(u(rng)), 2 * kPi * u(rng));
        worst = std::max(worst, std::abs(quad_multiplier(c_of_multiplier(lambda)) - lambda));
    }
    const bool ends = quad_multiplier(-0.75) == C(-1) && quad_multiplier(0.25) == C(1);
    return {worst < 1e-12 && ends, "roundtrip_err=" + num(worst) + " endpoints=" + (ends ? "exact" : "wrong")};
}

Outcome parameter_scan() {
    FamilyOptions opt;
    const auto scan = scan_real_segment(-0.2, 0.6, 128, opt, 8);
    int in_family = 0, connected = 0;
    for (const auto& r : scan) {
        in_family += r.in_family;
        connected += r.in_family && r.connectedness.status == Connectedness::Connected;
    }
    const bool zero = classify_parameter(0.0, opt).connectedness.status == Connectedness::Connected;
    const OnsetEstimate e = estimate_univalence_onset(opt.system);
    std::cout << "INFO univalence onset estimate t0 in (" << num(e.t_first_fail, 6) << ", " << num(e.t_last_pass, 6)
              << "]\n";
    return {connected == in_family && zero, "certified=" + std::to_string(in_family) + "/128 connected=" +
                                                std::to_string(connected) + " t0_connected=" + (zero ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"base-map identity", base_identity},
        {"real-orbit identity", real_orbit},
        {"Schwarz boundary identity", boundary_identity},
        {"covering degrees", covering_degrees},
        {"superattracting fixed point", superattracting},
        {"Markov conjugacy", markov_suite},
        {"group suite", group_suite},
        {"connectedness and rendering", julia_render},
        {"multiplier dictionary", multiplier_dictionary},
        {"parameter scan", parameter_scan},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("%s %2zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
