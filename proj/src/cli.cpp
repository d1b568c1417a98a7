#include "qd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>

#include "qd/families.hpp"
#include "qd/image_io.hpp"
#include "qd/markov.hpp"
#include "qd/raster.hpp"
#include "qd/verify.hpp"

namespace qd {
namespace {

double parse_real(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double x = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(x))
        throw std::invalid_argument("not a real number: '" + std::string(s) + "'");
    return x;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
    return buf;
}

std::string fmt(std::complex<double> z) { return fmt(z.real()) + "," + fmt(z.imag()); }

CLI::Validator complex_check() {
    return CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                parse_complex(s);
                return {};
            } catch (const std::invalid_argument& e) {
                return e.what();
            }
        },
        "RE[,IM]");
}

CLI::Validator real_list_check() {
    return CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                parse_real_list(s);
                return {};
            } catch (const std::invalid_argument& e) {
                return e.what();
            }
        },
        "T1,T2,...");
}

struct Common {
    int threads = 1;
    int n_boundary = 1024;
    int n_interior = 64;
    std::uint64_t seed = 0;

    SchwarzOptions system() const {
        SchwarzOptions o;
        o.n_boundary = n_boundary;
        o.n_interior = n_interior;
        return o;
    }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 256));
    app->add_option("--n-boundary", c.n_boundary, "Univalence certificate boundary samples")
        ->check(CLI::Range(16, 1 << 20));
    app->add_option("--n-interior", c.n_interior, "Univalence certificate interior grid per side")
        ->check(CLI::Range(4, 4096));
    app->add_option("--seed", c.seed, "Seed for all random sampling");
}

struct JuliaArgs {
    std::string t = "0", center = "0,0", out = "julia.ppm";
    double width = 4;
    int px = 256, max_iter = 200;
};

struct ParamArgs {
    double t_min = -0.2, t_max = 0.6, imag_min = 0, imag_max = 0;
    int px = 128, max_iter = 200;
    std::string out = "param.ppm";
};

struct TilesArgs {
    std::string model = "gamma", out = "tiles.ppm";
    int d = 3, depth = 6, px = 512;
};

struct FlowArgs {
    std::string t_list = "-0.2,0,0.3,0.6", out_img = "flow.ppm", out_csv = "flow.csv";
    int samples = 512;
};

struct VerifyArgs {
    std::string suite = "all";
};

int cmd_julia(const JuliaArgs& a, const Common& c, std::ostream& out) {
    const auto t = parse_complex(a.t);
    const Viewport v{parse_complex(a.center), a.width, a.px, a.px};
    const SchwarzSystem s = build_system(ft_map(t), ft_critical_triple(t), c.system());
    const ClassGrid g = classify_grid(s, v, a.max_iter, c.threads);
    const auto non_escaping = std::count_if(g.cells.begin(), g.cells.end(), [](const EscapeResult& e) {
        return e.status == EscapeResult::Status::NonEscaping;
    });
    write_ppm(colorize(g, ColorScheme::standard()), a.out);
    out << "julia t=" << fmt(t) << " wrote " << a.out << " " << a.px << "x" << a.px << " non_escaping=" << non_escaping
        << "\n";
    return 0;
}

int cmd_param(const ParamArgs& a, const Common& c, std::ostream& out) {
    ParameterWindow w{a.t_min, a.t_max, a.imag_min, a.imag_max, a.px, 1};
    if (a.imag_max > a.imag_min)
        w.px_h = std::max(16, int(std::lround(a.px * (a.imag_max - a.imag_min) / (a.t_max - a.t_min))));
    FamilyOptions opt;
    opt.system = c.system();
    opt.max_iter = a.max_iter;
    const ParameterPlane p = render_parameter_plane(w, opt, ColorScheme::standard(), c.threads);
    // A real segment is one row; draw it as a 16-pixel strip.
    ImageBuffer img = p.image;
    if (p.height == 1) {
        img = ImageBuffer(p.width, 16);
        for (int j = 0; j < 16; ++j)
            for (int i = 0; i < p.width; ++i) img.set(i, j, p.image.at(i, 0));
    }
    write_ppm(img, a.out);
    int in_family = 0, connected = 0;
    for (const auto& r : p.cells) {
        in_family += r.in_family;
        connected += r.in_family && r.connectedness.status == Connectedness::Connected;
    }
    out << "param wrote " << a.out << " " << img.width() << "x" << img.height() << " in_family=" << in_family
        << " connected=" << connected << "\n";
    const OnsetEstimate e = estimate_univalence_onset(c.system());
    if (e.found)
        out << "INFO t0_estimate in (" << fmt(e.t_first_fail) << ", " << fmt(e.t_last_pass)
            << "] certificate fails below: " << e.reason << "\n";
    else
        out << "INFO t0_estimate not found above the scan floor\n";
    return 0;
}

int cmd_tiles(const TilesArgs& a, const Common& c, std::ostream& out) {
    const bool gamma = a.model == "gamma";
    const Viewport v = gamma ? Viewport{{0, 1.5}, 6, a.px, a.px / 2} : Viewport{0, 2.1, a.px, a.px};
    const ImageBuffer img = render_group_tiling(gamma ? TilingModel::Gamma : TilingModel::GammaD, a.d, a.depth, v,
                                                ColorScheme::standard(), c.threads);
    write_ppm(img, a.out);
    out << "tiles model=" << a.model << " wrote " << a.out << " " << img.width() << "x" << img.height() << "\n";
    return 0;
}

int cmd_flow(const FlowArgs& a, std::ostream& out) {
    const auto ts = parse_real_list(a.t_list);
    const FlowCurves f = render_flow_curves(ts, a.samples);
    write_ppm(f.image, a.out_img);
    write_csv_curves(ts, f.curves, a.out_csv);
    out << "flow curves=" << f.curves.size() << " wrote " << a.out_img << " " << a.out_csv << "\n";
    return 0;
}

int cmd_fixpoint(const std::string& t_text, const Common& c, std::ostream& out) {
    const auto t = parse_complex(t_text);
    const SchwarzSystem s = build_system(ft_map(t), ft_critical_triple(t), c.system());
    if (!s.attracting()) {
        out << "fixpoint t=" << fmt(t) << " no attracting fixed point found\n";
        return 1;
    }
    const FixedPointReport& r = *s.attracting();
    const auto cq = c_of_multiplier(r.multiplier);
    const bool in_interval = std::abs(cq.imag()) < 1e-12 && cq.real() > -0.75 && cq.real() < 0.25;
    out << "location=" << fmt(r.location.value()) << "\n"
        << "multiplier=" << fmt(r.multiplier) << "\n"
        << "classification=" << to_string(r.classification) << "\n"
        << "c=" << fmt(cq) << "\n"
        << "c_in_(-0.75,0.25)=" << (in_interval ? "yes" : "no") << "\n";
    return 0;
}

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
    int failed = 0;
    for (const auto& r : run_suite(a.suite, c.seed, c.threads)) {
        out << format_result(r) << "\n";
        failed += !r.pass;
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_real(text), 0};
    if (text.find(',', comma + 1) != std::string::npos) throw std::invalid_argument("expected RE,IM: '" + text + "'");
    const std::string_view s(text);
    return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::string_view s(text);
    for (;;) {
        const auto comma = s.find(',');
        out.push_back(parse_real(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schwarz reflection dynamics of degree-3 quadrature domains", "qdyn"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);

    Common common;
    JuliaArgs ja;
    ParamArgs pa;
    TilesArgs ta;
    FlowArgs fa;
    VerifyArgs va;
    std::string fix_t = "0";

    auto* julia = app.add_subcommand("julia", "Render the dynamical plane of sigma for f_t");
    julia->add_option("--t", ja.t, "Parameter t")->check(complex_check());
    julia->add_option("--center", ja.center, "Viewport center")->check(complex_check());
    julia->add_option("--width", ja.width, "Viewport width")->check(CLI::PositiveNumber);
    julia->add_option("--px", ja.px, "Image side in pixels")->check(CLI::Range(16, 16384));
    julia->add_option("--max-iter", ja.max_iter, "Iteration bound")->check(CLI::Range(1, 1000000));
    julia->add_option("--out", ja.out, "Output PPM");
    add_common(julia, common);

    auto* param = app.add_subcommand("param", "Render the f_t parameter plane");
    param->add_option("--t-min", pa.t_min, "Smallest real part");
    param->add_option("--t-max", pa.t_max, "Largest real part");
    param->add_option("--imag-min", pa.imag_min, "Smallest imaginary part");
    param->add_option("--imag-max", pa.imag_max, "Largest imaginary part");
    param->add_option("--px", pa.px, "Image width in pixels")->check(CLI::Range(16, 16384));
    param->add_option("--max-iter", pa.max_iter, "Critical orbit iteration bound")->check(CLI::Range(1, 1000000));
    param->add_option("--out", pa.out, "Output PPM");
    add_common(param, common);

    auto* tiles = app.add_subcommand("tiles", "Render a group tiling");
    tiles->add_option("--model", ta.model, "Group model")->check(CLI::IsMember({"gamma", "gamma_d"}));
    tiles->add_option("--d", ta.d, "Degree d of Gamma_d")->check(CLI::Range(1, 64));
    tiles->add_option("--depth", ta.depth, "Word length bound")->check(CLI::Range(0, 8));
    tiles->add_option("--px", ta.px, "Image width in pixels")->check(CLI::Range(32, 16384));
    tiles->add_option("--out", ta.out, "Output PPM");
    add_common(tiles, common);

    auto* flow = app.add_subcommand("flow", "Render boundary curves f_t(circle through critical points)");
    flow->add_option("--t-list", fa.t_list, "Parameters t")->check(real_list_check());
    flow->add_option("--samples", fa.samples, "Samples per curve")->check(CLI::Range(8, 1 << 20));
    flow->add_option("--out-img", fa.out_img, "Output PPM");
    flow->add_option("--out-csv", fa.out_csv, "Output CSV");
    add_common(flow, common);

    auto* fix = app.add_subcommand("fixpoint", "Report the attracting fixed point of sigma for f_t");
    fix->add_option("--t", fix_t, "Parameter t")->check(complex_check());
    add_common(fix, common);

    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--suite", va.suite, "Suite")->check(CLI::IsMember({"core", "group", "conjugacy", "all"}));
    add_common(verify, common);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (param->parsed() && !(pa.t_max > pa.t_min)) throw CLI::ValidationError("--t-max", "must exceed --t-min");
        if (param->parsed() && pa.imag_max < pa.imag_min)
            throw CLI::ValidationError("--imag-max", "must not be below --imag-min");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (julia->parsed()) return cmd_julia(ja, common, out);
        if (param->parsed()) return cmd_param(pa, common, out);
        if (tiles->parsed()) return cmd_tiles(ta, common, out);
        if (flow->parsed()) return cmd_flow(fa, out);
        if (fix->parsed()) return cmd_fixpoint(fix_t, common, out);
        return cmd_verify(va, common, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace qd
