#include "qd/image_io.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

namespace qd {
namespace {

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + ": " + std::strerror(errno));
    out.write(bytes.data(), std::streamsize(bytes.size()));
    out.close();
    if (!out) throw Error("cannot write " + path + ": " + std::strerror(errno));
}

void append_number(std::string& s, double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    s.append(buf, r.ptr);
}

}  // namespace

std::string ppm_bytes(const ImageBuffer& img) {
    std::string s = "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    s.append(reinterpret_cast<const char*>(img.bytes().data()), img.bytes().size());
    return s;
}

void write_ppm(const ImageBuffer& img, const std::string& path) { write_file(path, ppm_bytes(img)); }

ImageBuffer read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path + ": " + std::strerror(errno));
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    if (magic != "P6" || w <= 0 || h <= 0 || maxval != 255) throw Error(path + ": not an 8-bit binary PPM");
    in.get();
    ImageBuffer img(w, h);
    std::vector<char> buf(std::size_t(w) * h * 3);
    if (!in.read(buf.data(), std::streamsize(buf.size()))) throw Error(path + ": truncated pixel data");
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            const std::size_t k = (std::size_t(j) * w + i) * 3;
            img.set(i, j, {std::uint8_t(buf[k]), std::uint8_t(buf[k + 1]), std::uint8_t(buf[k + 2])});
        }
    return img;
}

std::string csv_text(const Polyline& curve) {
    std::string s = "re,im\n";
    for (const auto& z : curve) {
        append_number(s, z.real());
        s += ',';
        append_number(s, z.imag());
        s += '\n';
    }
    return s;
}

void write_csv_curve(const Polyline& curve, const std::string& path) { write_file(path, csv_text(curve)); }

std::string csv_text(const std::vector<double>& t_list, const std::vector<Polyline>& curves) {
    if (t_list.size() != curves.size()) throw Error("csv_text: one t value per curve required");
    std::string s = "t,re,im\n";
    for (std::size_t k = 0; k < curves.size(); ++k)
        for (const auto& z : curves[k]) {
            append_number(s, t_list[k]);
            s += ',';
            append_number(s, z.real());
            s += ',';
            append_number(s, z.imag());
            s += '\n';
        }
    return s;
}

void write_csv_curves(const std::vector<double>& t_list, const std::vector<Polyline>& curves, const std::string& path) {
    write_file(path, csv_text(t_list, curves));
}

}  // namespace qd
