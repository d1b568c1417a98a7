#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qd/modular_group.hpp"
#include "qd/schwarz_system.hpp"

namespace qd {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Pixel (i, j) samples the center of its cell; row 0 is the top row.
struct Viewport {
    std::complex<double> center;
    double width = 4;
    int px_w = 256, px_h = 256;

    void validate() const;
    double height() const { return width * px_h / px_w; }
    std::complex<double> pixel(int i, int j) const;
};

class ImageBuffer {
public:
    ImageBuffer() = default;
    ImageBuffer(int w, int h, Rgb fill = {});

    int width() const { return w_; }
    int height() const { return h_; }
    Rgb at(int i, int j) const;
    void set(int i, int j, Rgb c);
    /// Row-major RGB triples starting at the top row.
    const std::vector<std::uint8_t>& bytes() const { return data_; }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

private:
    int w_ = 0, h_ = 0;
    std::vector<std::uint8_t> data_;
};

struct ColorScheme {
    std::string name;
    std::array<Rgb, 16> depth;  // escaping points, cycled by depth
    Rgb converged, bounded, undetermined, outside_domain, not_in_family, connected;
    Rgb background;

    Rgb escaping(int d) const { return depth[d % 16]; }
    Rgb color(const EscapeResult& e) const;

    static ColorScheme standard();
};

/// Runs body(row) for every row on `threads` workers. Each row must write only
/// its own output slots, which makes the result independent of scheduling.
void for_each_row(int rows, int threads, const std::function<void(int)>& body);

/// Per-pixel classify_point results, row-major.
struct ClassGrid {
    int width = 0, height = 0;
    std::vector<EscapeResult> cells;
    const EscapeResult& at(int i, int j) const { return cells[std::size_t(j) * width + i]; }
};

ClassGrid classify_grid(const SchwarzSystem& s, const Viewport& v, int max_iter, int threads = 1);

ImageBuffer colorize(const ClassGrid& g, const ColorScheme& scheme);

ImageBuffer render_dynamical_plane(const SchwarzSystem& s, const Viewport& v, int max_iter,
                                   const ColorScheme& scheme, int threads = 1);

/// Number of 4-connected components of the cells where mask is true, and the
/// component label of each cell (-1 outside the mask).
struct Components {
    int count = 0;
    std::vector<int> label;
};

Components connected_components(const std::vector<bool>& mask, int width, int height);

/// Status of one parameter t of the f_t family.
struct ParameterResult {
    std::complex<double> t;
    bool in_family = false;
    std::string reason;  // why build_system failed
    ConnectednessResult connectedness;
};

struct FamilyOptions {
    SchwarzOptions system;
    int max_iter = 200;
};

ParameterResult classify_parameter(std::complex<double> t, const FamilyOptions& opt);

/// Axis-aligned window in the t-plane; rows run from im_max down to im_min.
struct ParameterWindow {
    double re_min = -0.2, re_max = 0.6, im_min = 0, im_max = 0;
    int px_w = 128, px_h = 16;

    void validate() const;
    std::complex<double> pixel(int i, int j) const;
};

struct ParameterPlane {
    int width = 0, height = 0;
    std::vector<ParameterResult> cells;
    ImageBuffer image;
};

ParameterPlane render_parameter_plane(const ParameterWindow& w, const FamilyOptions& opt, const ColorScheme& scheme,
                                      int threads = 1);

/// n equally spaced real parameters from t_min to t_max inclusive.
std::vector<ParameterResult> scan_real_segment(double t_min, double t_max, int n, const FamilyOptions& opt,
                                               int threads = 1);

/// Largest negative t (to `tol`) below which the certificate stops passing,
/// found by stepping down from 0 and bisecting the first failure.
struct OnsetEstimate {
    double t_last_pass = 0;
    double t_first_fail = 0;
    bool found = false;
    std::string reason;  // verdict at t_first_fail
};

OnsetEstimate estimate_univalence_onset(const SchwarzOptions& opt, double t_floor = -1.5, double step = 0.05,
                                        double tol = 1e-4);

using Polyline = std::vector<std::complex<double>>;

/// f_t on the circle through its finite critical points, `samples` points plus
/// the first point repeated.
Polyline flow_curve(double t, int samples);

struct FlowCurves {
    std::vector<Polyline> curves;
    ImageBuffer image;
};

FlowCurves render_flow_curves(const std::vector<double>& t_list, int samples, int px = 512);

enum class TilingModel { Gamma, GammaD };

/// Reduction of a pixel point toward the fundamental domain.
struct TileCell {
    bool inside = false;      // in the model space (upper half-plane or unit disc)
    bool determined = false;  // reached the fundamental domain within the step budget
    int depth = 0;
    char letter = 0;  // first letter of the tile word for Gamma
    int circle = 0;   // first circle entered for Gamma_d
};

TileCell tile_cell(TilingModel model, const FuchsianCircleSet& cs, std::complex<double> z, int word_len_max);

ImageBuffer render_group_tiling(TilingModel model, int d, int word_len_max, const Viewport& v,
                                const ColorScheme& scheme, int threads = 1);

}  // namespace qd
