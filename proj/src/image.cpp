#include "tunnelstitch/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tunnelstitch {

namespace {

std::uint8_t quantize(float c) {
    const float x = std::clamp(c, 0.0f, 1.0f);
    return static_cast<std::uint8_t>(std::lround(x * 255.0f));
}

// Skips whitespace and '#' comments between PPM header tokens.
int next_header_int(std::istream& in) {
    for (;;) {
        const int ch = in.peek();
        if (ch == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(ch)) {
            in.get();
        } else {
            break;
        }
    }
    int v = -1;
    in >> v;
    return v;
}

}  // namespace

void write_ppm(const Image& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_ppm: cannot open " + path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    std::vector<std::uint8_t> row(static_cast<size_t>(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const size_t i = img.index(x, y) * 3;
            const bool ok = img.valid[img.index(x, y)] != 0;
            row[3 * x + 0] = ok ? quantize(img.rgb[i + 0]) : 0;
            row[3 * x + 1] = ok ? quantize(img.rgb[i + 1]) : 0;
            row[3 * x + 2] = ok ? quantize(img.rgb[i + 2]) : 0;
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error("write_ppm: write failed for " + path);
}

Image read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_ppm: cannot open " + path);
    std::string magic;
    in >> magic;
    if (magic != "P6") throw std::runtime_error("read_ppm: not a binary PPM: " + path);
    const int w = next_header_int(in);
    const int h = next_header_int(in);
    const int maxval = next_header_int(in);
    if (w < 1 || h < 1 || maxval != 255)
        throw std::runtime_error("read_ppm: unsupported PPM header in " + path);
    in.get();  // single whitespace after maxval
    Image img(w, h);
    std::vector<std::uint8_t> row(static_cast<size_t>(w) * 3);
    for (int y = 0; y < h; ++y) {
        in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size()));
        if (!in) throw std::runtime_error("read_ppm: truncated pixel data in " + path);
        for (int x = 0; x < w; ++x) {
            const size_t i = img.index(x, y) * 3;
            img.rgb[i + 0] = row[3 * x + 0] / 255.0f;
            img.rgb[i + 1] = row[3 * x + 1] / 255.0f;
            img.rgb[i + 2] = row[3 * x + 2] / 255.0f;
        }
    }
    return img;
}

bool sample_image(const Image& img, double u, double v, SampleMode mode, Rgb& out) {
    if (mode == SampleMode::nearest) {
        const long xi = std::lround(u), yi = std::lround(v);
        if (xi < 0 || yi < 0 || xi >= img.width || yi >= img.height) return false;
        if (!img.is_valid(static_cast<int>(xi), static_cast<int>(yi))) return false;
        out = img.at(static_cast<int>(xi), static_cast<int>(yi));
        return true;
    }
    if (u < 0.0 || v < 0.0 || u > img.width - 1.0 || v > img.height - 1.0) return false;
    int x0 = static_cast<int>(u), y0 = static_cast<int>(v);
    if (x0 > img.width - 2) x0 = img.width - 2;
    if (y0 > img.height - 2) y0 = img.height - 2;
    if (img.width == 1) x0 = 0;
    if (img.height == 1) y0 = 0;
    const int x1 = std::min(x0 + 1, img.width - 1);
    const int y1 = std::min(y0 + 1, img.height - 1);
    if (!img.is_valid(x0, y0) || !img.is_valid(x1, y0) || !img.is_valid(x0, y1) ||
        !img.is_valid(x1, y1))
        return false;
    const double fu = u - x0, fv = v - y0;
    const Rgb c00 = img.at(x0, y0), c10 = img.at(x1, y0);
    const Rgb c01 = img.at(x0, y1), c11 = img.at(x1, y1);
    const double w00 = (1 - fu) * (1 - fv), w10 = fu * (1 - fv);
    const double w01 = (1 - fu) * fv, w11 = fu * fv;
    out = {w00 * c00.r + w10 * c10.r + w01 * c01.r + w11 * c11.r,
           w00 * c00.g + w10 * c10.g + w01 * c01.g + w11 * c11.g,
           w00 * c00.b + w10 * c10.b + w01 * c01.b + w11 * c11.b};
    return true;
}

}  // namespace tunnelstitch
