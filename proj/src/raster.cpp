#include "qd/raster.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qd/families.hpp"

namespace qd {

using Complex = std::complex<double>;

void Viewport::validate() const {
    if (!(width > 0) || !std::isfinite(width)) throw std::invalid_argument("viewport width must be positive");
    if (!std::isfinite(center.real()) || !std::isfinite(center.imag()))
        throw std::invalid_argument("viewport center must be finite");
    if (px_w < 16 || px_h < 16) throw std::invalid_argument("viewport must be at least 16x16 pixels");
}

Complex Viewport::pixel(int i, int j) const {
    return center + Complex(((i + 0.5) / px_w - 0.5) * width, (0.5 - (j + 0.5) / px_h) * height());
}

ImageBuffer::ImageBuffer(int w, int h, Rgb fill) : w_(w), h_(h), data_(std::size_t(w) * h * 3) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("image dimensions must be positive");
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) set(i, j, fill);
}

Rgb ImageBuffer::at(int i, int j) const {
    const std::size_t k = (std::size_t(j) * w_ + i) * 3;
    return {data_[k], data_[k + 1], data_[k + 2]};
}

void ImageBuffer::set(int i, int j, Rgb c) {
    const std::size_t k = (std::size_t(j) * w_ + i) * 3;
    data_[k] = c.r;
    data_[k + 1] = c.g;
    data_[k + 2] = c.b;
}

Rgb ColorScheme::color(const EscapeResult& e) const {
    switch (e.status) {
        case EscapeResult::Status::Escaping: return escaping(e.depth);
        case EscapeResult::Status::NonEscaping:
            return e.witness == EscapeResult::Witness::ConvergedToFixedPoint ? converged : bounded;
        default: return undetermined;
    }
}

ColorScheme ColorScheme::standard() {
    ColorScheme s;
    s.name = "standard";
    // Turquoise ramp for the escaping set, pink for the filled Julia set.
    for (int k = 0; k < 16; ++k)
        s.depth[k] = {std::uint8_t(16 * k), std::uint8_t(255 - 8 * k), std::uint8_t(200 - 6 * k)};
    s.converged = {255, 105, 180};
    s.bounded = {200, 60, 140};
    s.undetermined = {255, 255, 0};
    s.outside_domain = {128, 128, 128};
    s.not_in_family = {0, 0, 0};
    s.connected = {255, 140, 200};
    s.background = {255, 255, 255};
    return s;
}

void for_each_row(int rows, int threads, const std::function<void(int)>& body) {
    threads = std::clamp(threads, 1, std::max(rows, 1));
    if (threads == 1) {
        for (int j = 0; j < rows; ++j) body(j);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k)
        pool.emplace_back([&] {
            for (int j = next++; j < rows; j = next++) {
                try {
                    body(j);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

ClassGrid classify_grid(const SchwarzSystem& s, const Viewport& v, int max_iter, int threads) {
    v.validate();
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    ClassGrid g{v.px_w, v.px_h, std::vector<EscapeResult>(std::size_t(v.px_w) * v.px_h)};
    for_each_row(v.px_h, threads, [&](int j) {
        for (int i = 0; i < v.px_w; ++i)
            g.cells[std::size_t(j) * v.px_w + i] = classify_point(s, SpherePointd(v.pixel(i, j)), max_iter);
    });
    return g;
}

ImageBuffer colorize(const ClassGrid& g, const ColorScheme& scheme) {
    ImageBuffer img(g.width, g.height);
    for (int j = 0; j < g.height; ++j)
        for (int i = 0; i < g.width; ++i) img.set(i, j, scheme.color(g.at(i, j)));
    return img;
}

ImageBuffer render_dynamical_plane(const SchwarzSystem& s, const Viewport& v, int max_iter,
                                   const ColorScheme& scheme, int threads) {
    return colorize(classify_grid(s, v, max_iter, threads), scheme);
}

Components connected_components(const std::vector<bool>& mask, int width, int height) {
    Components c;
    c.label.assign(mask.size(), -1);
    std::deque<int> queue;
    for (int start = 0; start < int(mask.size()); ++start) {
        if (!mask[start] || c.label[start] >= 0) continue;
        c.label[start] = c.count;
        queue.push_back(start);
        while (!queue.empty()) {
            const int k = queue.front();
            queue.pop_front();
            const int i = k % width, j = k / width;
            const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
            for (const auto& [x, y] : nb) {
                if (x < 0 || y < 0 || x >= width || y >= height) continue;
                const int m = y * width + x;
                if (mask[m] && c.label[m] < 0) {
                    c.label[m] = c.count;
                    queue.push_back(m);
                }
            }
        }
        ++c.count;
    }
    return c;
}

ParameterResult classify_parameter(Complex t, const FamilyOptions& opt) {
    ParameterResult r;
    r.t = t;
    try {
        const SchwarzSystem s = build_system(ft_map(t), ft_critical_triple(t), opt.system);
        r.in_family = true;
        r.connectedness = critical_orbit_connectedness(s, opt.max_iter);
    } catch (const Error& e) {
        r.reason = e.what();
    }
    return r;
}

void ParameterWindow::validate() const {
    if (!(re_max > re_min)) throw std::invalid_argument("parameter window needs re_min < re_max");
    if (!(im_max >= im_min)) throw std::invalid_argument("parameter window needs im_min <= im_max");
    if (px_w < 1 || px_h < 1) throw std::invalid_argument("parameter window needs positive pixel counts");
}

Complex ParameterWindow::pixel(int i, int j) const {
    return {re_min + (i + 0.5) / px_w * (re_max - re_min), im_max - (j + 0.5) / px_h * (im_max - im_min)};
}

ParameterPlane render_parameter_plane(const ParameterWindow& w, const FamilyOptions& opt, const ColorScheme& scheme,
                                      int threads) {
    w.validate();
    ParameterPlane p{w.px_w, w.px_h, std::vector<ParameterResult>(std::size_t(w.px_w) * w.px_h),
                     ImageBuffer(w.px_w, w.px_h)};
    for_each_row(w.px_h, threads, [&](int j) {
        for (int i = 0; i < w.px_w; ++i) p.cells[std::size_t(j) * w.px_w + i] = classify_parameter(w.pixel(i, j), opt);
    });
    for (int j = 0; j < w.px_h; ++j)
        for (int i = 0; i < w.px_w; ++i) {
            const auto& c = p.cells[std::size_t(j) * w.px_w + i];
            Rgb col = scheme.not_in_family;
            if (c.in_family) {
                switch (c.connectedness.status) {
                    case Connectedness::Connected: col = scheme.connected; break;
                    case Connectedness::Disconnected: col = scheme.escaping(c.connectedness.depth); break;
                    default: col = scheme.undetermined; break;
                }
            }
            p.image.set(i, j, col);
        }
    return p;
}

std::vector<ParameterResult> scan_real_segment(double t_min, double t_max, int n, const FamilyOptions& opt,
                                               int threads) {
    if (n < 2) throw std::invalid_argument("scan_real_segment: need at least 2 samples");
    std::vector<ParameterResult> out(n);
    for_each_row(n, threads, [&](int k) {
        out[k] = classify_parameter(t_min + (t_max - t_min) * k / (n - 1), opt);
    });
    return out;
}

OnsetEstimate estimate_univalence_onset(const SchwarzOptions& opt, double t_floor, double step, double tol) {
    SchwarzOptions o = opt;
    o.fixed_point_seeds = 0;
    auto passes = [&](double t, std::string* why) {
        try {
            build_system(ft_map(t), ft_critical_triple(t), o);
            return true;
        } catch (const Error& e) {
            if (why) *why = e.what();
            return false;
        }
    };
    OnsetEstimate est;
    double hi = 0;
    if (!passes(hi, &est.reason)) return est;
    double lo = hi - step;
    while (lo >= t_floor && passes(lo, nullptr)) {
        hi = lo;
        lo -= step;
    }
    if (lo < t_floor) {
        est.t_last_pass = hi;
        return est;
    }
    while (hi - lo > tol) {
        const double mid = (lo + hi) / 2;
        (passes(mid, nullptr) ? hi : lo) = mid;
    }
    passes(lo, &est.reason);
    est.t_last_pass = hi;
    est.t_first_fail = lo;
    est.found = true;
    return est;
}

Polyline flow_curve(double t, int samples) {
    if (samples < 3) throw std::invalid_argument("flow_curve: samples must be >= 3");
    const auto triple = ft_critical_triple(t);
    const auto disc = disc_through(triple[0], triple[1], triple[2]);
    if (!disc.is_bounded()) throw Error("flow_curve: critical points do not bound a disc");
    const RationalMapd f = ft_map(t);
    Polyline p;
    for (int k = 0; k < samples; ++k) {
        const double a = 2 * std::numbers::pi * k / samples;
        const auto w = f(SpherePointd(disc.center() + disc.radius() * std::polar(1.0, a)));
        if (w.is_infinite()) throw Error("flow_curve: f_t has a pole on its critical circle");
        p.push_back(w.value());
    }
    p.push_back(p.front());
    return p;
}

FlowCurves render_flow_curves(const std::vector<double>& t_list, int samples, int px) {
    if (t_list.empty()) throw std::invalid_argument("render_flow_curves: empty parameter list");
    if (px < 16) throw std::invalid_argument("render_flow_curves: image must be at least 16 pixels");
    FlowCurves out;
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (double t : t_list) {
        out.curves.push_back(flow_curve(t, samples));
        for (const auto& z : out.curves.back()) {
            x0 = std::min(x0, z.real());
            x1 = std::max(x1, z.real());
            y0 = std::min(y0, z.imag());
            y1 = std::max(y1, z.imag());
        }
    }
    Viewport v{Complex((x0 + x1) / 2, (y0 + y1) / 2), 1.1 * std::max(x1 - x0, y1 - y0), px, px};
    const ColorScheme scheme = ColorScheme::standard();
    out.image = ImageBuffer(px, px, scheme.background);
    auto to_px = [&](Complex z) {
        return std::pair{((z.real() - v.center.real()) / v.width + 0.5) * px - 0.5,
                         (0.5 - (z.imag() - v.center.imag()) / v.height()) * px - 0.5};
    };
    for (std::size_t c = 0; c < out.curves.size(); ++c) {
        const Rgb col = scheme.escaping(int(5 * c + 3));
        const auto& curve = out.curves[c];
        for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
            const auto [ax, ay] = to_px(curve[k]);
            const auto [bx, by] = to_px(curve[k + 1]);
            const int n = int(std::ceil(std::max(std::abs(bx - ax), std::abs(by - ay)))) + 1;
            for (int s = 0; s <= n; ++s) {
                const int i = int(std::lround(ax + (bx - ax) * s / n));
                const int j = int(std::lround(ay + (by - ay) * s / n));
                if (i >= 0 && j >= 0 && i < px && j < px) out.image.set(i, j, col);
            }
        }
    }
    return out;
}

TileCell tile_cell(TilingModel model, const FuchsianCircleSet& cs, Complex z, int word_len_max) {
    TileCell c;
    if (model == TilingModel::Gamma) {
        if (!(z.imag() > 0)) return c;
        c.inside = true;
        const Reduction r = reduce_to_fundamental(SpherePointd(z), word_len_max);
        c.determined = r.determined;
        c.depth = r.steps;
        if (!r.word.empty()) c.letter = Word::inverse_letter(r.word[r.word.size() - 1]);
        return c;
    }
    if (!(std::abs(z) < 1)) return c;
    c.inside = true;
    for (;;) {
        const int j = cs.circle_containing(z);
        if (j == 0) {
            c.determined = true;
            return c;
        }
        if (c.depth == word_len_max) return c;
        if (c.depth == 0) c.circle = j;
        z = cs.gamma(j, z);
        ++c.depth;
    }
}

ImageBuffer render_group_tiling(TilingModel model, int d, int word_len_max, const Viewport& v,
                                const ColorScheme& scheme, int threads) {
    v.validate();
    if (word_len_max < 0 || word_len_max > 8) throw std::invalid_argument("word length bound must be in [0, 8]");
    const FuchsianCircleSet cs = gamma_d_circles(model == TilingModel::GammaD ? d : 2);
    ImageBuffer img(v.px_w, v.px_h, scheme.background);
    for_each_row(v.px_h, threads, [&](int j) {
        for (int i = 0; i < v.px_w; ++i) {
            const TileCell c = tile_cell(model, cs, v.pixel(i, j), word_len_max);
            if (!c.inside) continue;
            Rgb col = scheme.undetermined;
            if (c.determined) {
                if (c.depth == 0) {
                    col = scheme.converged;
                } else {
                    const int branch = model == TilingModel::Gamma ? (c.letter == 'a' ? 0 : (c.letter == 'b' ? 1 : 2))
                                                                   : c.circle;
                    col = scheme.escaping(5 * c.depth + branch);
                }
            }
            img.set(i, j, col);
        }
    });
    return img;
}

}  // namespace qd
