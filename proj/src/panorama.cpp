#include "tunnelstitch/panorama.hpp"

#include <cmath>
#include <stdexcept>

namespace tunnelstitch {

int PanoramaSpec::height() const {
    return static_cast<int>(std::llround((y_max - y_min) * scale));
}

void PanoramaSpec::validate() const {
    if (width < 1) throw std::invalid_argument("panorama: width must be at least 1");
    if (!(y_max > y_min)) throw std::invalid_argument("panorama: y_max must exceed y_min");
    if (!(scale > 0.0)) throw std::invalid_argument("panorama: scale must be positive");
    if (height() < 1) throw std::invalid_argument("panorama: y band too thin for the scale");
}

CylinderPoint pano_to_cylinder(const PanoramaSpec& spec, double u, double v) {
    return {wrap_angle(kTwoPi * u / spec.width), spec.y_min + v / spec.scale};
}

PixelCoord cylinder_to_pano(const PanoramaSpec& spec, const CylinderPoint& cp) {
    return {spec.width * wrap_angle(cp.theta) / kTwoPi, (cp.height - spec.y_min) * spec.scale};
}

Panorama::Panorama(const PanoramaSpec& s) : spec(s) {
    spec.validate();
    const size_t n = static_cast<size_t>(spec.width) * spec.height();
    color.assign(n * 3, 0.0f);
    weight.assign(n, 0.0f);
    coverage.assign(n, 0);
}

void Panorama::accumulate(int x, int y, const Rgb& c, double w) {
    const size_t i = index(x, y);
    color[i * 3 + 0] += static_cast<float>(c.r * w);
    color[i * 3 + 1] += static_cast<float>(c.g * w);
    color[i * 3 + 2] += static_cast<float>(c.b * w);
    weight[i] += static_cast<float>(w);
}

void Panorama::normalize() {
    if (normalized) return;
    const size_t n = weight.size();
    for (size_t i = 0; i < n; ++i) {
        if (weight[i] > 0.0f) {
            coverage[i] = 1;
            color[i * 3 + 0] /= weight[i];
            color[i * 3 + 1] /= weight[i];
            color[i * 3 + 2] /= weight[i];
        } else {
            coverage[i] = 0;
        }
    }
    normalized = true;
}

double Panorama::coverage_fraction() const {
    size_t covered = 0;
    for (size_t i = 0; i < weight.size(); ++i)
        if (weight[i] > 0.0f) ++covered;
    return weight.empty() ? 0.0 : static_cast<double>(covered) / static_cast<double>(weight.size());
}

Image Panorama::to_image() const {
    Image img(spec.width, spec.height());
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const size_t i = index(x, y);
            if (weight[i] > 0.0f) {
                const float w = normalized ? 1.0f : weight[i];
                img.set(x, y, {color[i * 3] / w, color[i * 3 + 1] / w, color[i * 3 + 2] / w});
            } else {
                img.set_valid(x, y, false);
            }
        }
    }
    return img;
}

}  // namespace tunnelstitch
