#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tunnelstitch {

struct Rgb {
    double r = 0.0, g = 0.0, b = 0.0;
};

/// Row-major RGB raster. Float in memory; quantized to 8 bits only at file
/// write. `valid` marks pixels that carry real content (rays that missed the
/// scene are invalid and excluded from resampling).
struct Image {
    int width = 0, height = 0;
    std::vector<float> rgb;        // 3 floats per pixel
    std::vector<std::uint8_t> valid;

    Image() = default;
    Image(int w, int h)
        : width(w), height(h), rgb(static_cast<size_t>(w) * h * 3, 0.0f),
          valid(static_cast<size_t>(w) * h, 1) {}

    size_t index(int x, int y) const { return static_cast<size_t>(y) * width + x; }

    Rgb at(int x, int y) const {
        const size_t i = index(x, y) * 3;
        return {rgb[i], rgb[i + 1], rgb[i + 2]};
    }
    void set(int x, int y, const Rgb& c) {
        const size_t i = index(x, y) * 3;
        rgb[i] = static_cast<float>(c.r);
        rgb[i + 1] = static_cast<float>(c.g);
        rgb[i + 2] = static_cast<float>(c.b);
    }
    bool is_valid(int x, int y) const { return valid[index(x, y)] != 0; }
    void set_valid(int x, int y, bool v) { valid[index(x, y)] = v ? 1 : 0; }
};

/// Binary PPM (P6, maxval 255). Invalid pixels are written black.
void write_ppm(const Image& img, const std::string& path);

/// Reads a binary PPM; all pixels come back valid, channels scaled to [0,1].
Image read_ppm(const std::string& path);

enum class SampleMode { bilinear, nearest };

/// Samples at continuous (u, v), pixel centers on integer coordinates.
/// Returns false when the support leaves the image or touches invalid pixels.
bool sample_image(const Image& img, double u, double v, SampleMode mode, Rgb& out);

}  // namespace tunnelstitch
