#include "tunnelstitch/texture.hpp"

#include <cmath>
#include <stdexcept>

namespace tunnelstitch {

int TextureSpec::tiles_around() const {
    return static_cast<int>(std::lround(kTwoPi / tile_theta));
}

void TextureSpec::validate() const {
    if (!(tile_theta > 0.0) || !(tile_y > 0.0))
        throw std::invalid_argument("texture: tile sizes must be positive");
    const double n = kTwoPi / tile_theta;
    if (std::abs(n - std::round(n)) > 1e-9)
        throw std::invalid_argument("texture: 2pi/tile_theta must be an integer for a seamless wrap");
    if (kind == TextureKind::checkerboard && tiles_around() % 2 != 0)
        throw std::invalid_argument("texture: checkerboard needs an even tile count around the circumference");
    if (kind == TextureKind::brick && !(mortar_fraction >= 0.0 && mortar_fraction < 0.5))
        throw std::invalid_argument("texture: mortar_fraction must lie in [0, 0.5)");
    if (!(wall_radius > 0.0))
        throw std::invalid_argument("texture: wall_radius must be positive");
}

void RenderConfig::validate() const {
    if (std::abs(light_direction.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("render: light_direction must be a unit vector");
}

namespace {

// Floor-division index robust to negatives; tiles are [k*size, (k+1)*size).
long tile_index(double x, double size) {
    return static_cast<long>(std::floor(x / size));
}

double wrapped_theta_distance(double a, double b) {
    const double d = std::abs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, kTwoPi - d);
}

Rgb base_color(const TextureSpec& tex, double theta, double y) {
    const double th = wrap_angle(theta);
    switch (tex.kind) {
        case TextureKind::solid:
            return tex.primary;
        case TextureKind::checkerboard: {
            const long i = tile_index(th, tex.tile_theta);
            const long j = tile_index(y, tex.tile_y);
            return ((i + j) % 2 + 2) % 2 == 0 ? tex.primary : tex.secondary;
        }
        case TextureKind::brick: {
            const long row = tile_index(y, tex.tile_y);
            const double offset = (((row % 2) + 2) % 2) * tex.tile_theta * 0.5;
            const double lu = (th + offset) / tex.tile_theta;
            const double lv = y / tex.tile_y;
            const double fu = lu - std::floor(lu);
            const double fv = lv - std::floor(lv);
            const bool mortar = fu < tex.mortar_fraction || fv < tex.mortar_fraction;
            return mortar ? tex.secondary : tex.primary;
        }
    }
    return tex.primary;
}

}  // namespace

Rgb surface_color(const TextureSpec& tex, const RenderConfig& cfg, double theta, double y,
                  const Vec3& normal) {
    Rgb c = base_color(tex, theta, y);
    for (const auto& mark : tex.faults) {
        const double du = wrapped_theta_distance(theta, mark.theta) * tex.wall_radius;
        const double dv = y - mark.y;
        if (du * du + dv * dv <= mark.radius_m * mark.radius_m) c = mark.color;
    }
    if (cfg.shading == ShadingMode::lambertian_downward) {
        const double lit = std::max(0.0, normal.dot(-cfg.light_direction));
        c = {c.r * lit, c.g * lit, c.b * lit};
    }
    return c;
}

}  // namespace tunnelstitch
