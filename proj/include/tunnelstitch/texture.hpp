#pragma once

#include <vector>

#include "tunnelstitch/image.hpp"
#include "tunnelstitch/math3.hpp"

namespace tunnelstitch {

enum class TextureKind { checkerboard, brick, solid };

/// Painted-on defect: a disc of `radius_m` (arc metric on the wall) at
/// (theta, y).
struct FaultMark {
    double theta = 0.0;
    double y = 0.0;
    double radius_m = 0.0;
    Rgb color{1.0, 0.0, 0.0};
};

struct TextureSpec {
    TextureKind kind = TextureKind::checkerboard;
    double tile_theta = kTwoPi / 8.0;  // radians per tile; 2pi/tile_theta integral
    double tile_y = 1.0;               // meters per tile
    Rgb primary{0.62, 0.57, 0.50};
    Rgb secondary{0.43, 0.40, 0.36};
    double mortar_fraction = 0.08;     // brick only, in [0, 0.5)
    std::vector<FaultMark> faults;
    double wall_radius = 3.0;          // converts fault angular offsets to arc meters

    void validate() const;  // throws std::invalid_argument

    int tiles_around() const;
};

enum class ShadingMode { unlit, lambertian_downward };

struct RenderConfig {
    ShadingMode shading = ShadingMode::unlit;
    // Down-and-forward so the theta=0 wall faces the light, matching the
    // bright-at-0 / dark-at-pi look of a downward source in the scene.
    Vec3 light_direction{0.0, -0.7071067811865476, 0.7071067811865475};

    void validate() const;
};

/// Wall albedo at (theta, y), shaded per config. Deterministic and 2pi
/// periodic in theta. `normal` is the surface normal at the point (inward
/// for the tunnel wall); only lambertian shading consults it.
Rgb surface_color(const TextureSpec& tex, const RenderConfig& cfg, double theta, double y,
                  const Vec3& normal);

}  // namespace tunnelstitch
