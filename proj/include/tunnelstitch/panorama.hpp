#pragma once

#include <cstdint>
#include <vector>

#include "tunnelstitch/geometry.hpp"
#include "tunnelstitch/image.hpp"

namespace tunnelstitch {

/// World-frame panorama raster: u spans theta in [0, 2pi), v spans
/// world y in [y_min, y_max] at `scale` pixels per meter.
struct PanoramaSpec {
    int width = 0;
    double y_min = 0.0, y_max = 0.0;
    double scale = 0.0;

    int height() const;
    void validate() const;  // throws std::invalid_argument
};

/// Panorama mapping (u, v) <-> (theta, y). The y direction is unclamped:
/// out-of-band heights yield v outside [0, height); callers clip.
CylinderPoint pano_to_cylinder(const PanoramaSpec& spec, double u, double v);
PixelCoord cylinder_to_pano(const PanoramaSpec& spec, const CylinderPoint& cp);

/// Accumulation panorama: weighted color sums plus blend-weight sums.
/// coverage(i) == (weight[i] > 0) after normalize().
struct Panorama {
    PanoramaSpec spec;
    std::vector<float> color;   // 3 floats per pixel, weighted sums until normalize()
    std::vector<float> weight;
    std::vector<std::uint8_t> coverage;
    bool normalized = false;

    explicit Panorama(const PanoramaSpec& s);

    size_t index(int x, int y) const { return static_cast<size_t>(y) * spec.width + x; }

    void accumulate(int x, int y, const Rgb& c, double w);

    /// Divides color sums by weights and freezes the coverage mask.
    void normalize();

    double coverage_fraction() const;

    /// Covered pixels carry blended color; uncovered pixels are invalid black.
    Image to_image() const;
};

}  // namespace tunnelstitch
