#pragma once

#include <string>

#include "qd/raster.hpp"

namespace qd {

/// Binary PPM: "P6\n<w> <h>\n255\n" then the RGB bytes from the top row.
void write_ppm(const ImageBuffer& img, const std::string& path);
ImageBuffer read_ppm(const std::string& path);

std::string ppm_bytes(const ImageBuffer& img);

/// "re,im" header, then one line per point in shortest round-trip form.
void write_csv_curve(const Polyline& curve, const std::string& path);
std::string csv_text(const Polyline& curve);

/// "t,re,im" header, then every point of curves[k] tagged with t_list[k].
void write_csv_curves(const std::vector<double>& t_list, const std::vector<Polyline>& curves, const std::string& path);
std::string csv_text(const std::vector<double>& t_list, const std::vector<Polyline>& curves);

}  // namespace qd
