#pragma once

#include <optional>

#include "tunnelstitch/geometry.hpp"
#include "tunnelstitch/image.hpp"
#include "tunnelstitch/panorama.hpp"
#include "tunnelstitch/texture.hpp"

namespace tunnelstitch {

/// Smallest positive ray parameter hitting x^2 + z^2 = radius^2, solved as a
/// generic quadratic in lambda. This is a code path independent of the
/// pose-aware depth solver and doubles as its verification oracle.
std::optional<double> ray_cylinder_intersect(const Vec3& origin, const Vec3& dir, double radius);

/// Ray-casts one camera view of the textured tunnel. Pixels whose rays never
/// meet the wall (axis-parallel) are marked invalid. Throws std::domain_error
/// if the camera is not strictly inside the cylinder.
/// Parallelized over scanlines; bit-identical to render_view_serial.
Image render_view(const CameraIntrinsics& intr, const Pose& pose, const CylinderModel& cyl,
                  const TextureSpec& tex, const RenderConfig& cfg);

/// Single-threaded reference for render_view.
Image render_view_serial(const CameraIntrinsics& intr, const Pose& pose,
                         const CylinderModel& cyl, const TextureSpec& tex,
                         const RenderConfig& cfg);

/// Exact unwrap of the wall texture onto the panorama raster: no camera, no
/// resampling. Ground truth for stitch quality comparisons.
Image render_oracle_panorama(const CylinderModel& cyl, const TextureSpec& tex,
                             const RenderConfig& cfg, const PanoramaSpec& spec);

}  // namespace tunnelstitch
