#include "tunnelstitch/render.hpp"

#include <cmath>
#include <stdexcept>

namespace tunnelstitch {

std::optional<double> ray_cylinder_intersect(const Vec3& origin, const Vec3& dir, double radius) {
    const double a = dir.x * dir.x + dir.z * dir.z;
    if (a == 0.0) return std::nullopt;
    const double b = 2.0 * (origin.x * dir.x + origin.z * dir.z);
    const double c = origin.x * origin.x + origin.z * origin.z - radius * radius;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return std::nullopt;
    const double sq = std::sqrt(disc);
    // Numerically stable split: q carries the large-magnitude root.
    const double q = -0.5 * (b + std::copysign(sq, b));
    double roots[2] = {q / a, (q != 0.0) ? c / q : (-b + sq) / (2.0 * a)};
    if (roots[0] > roots[1]) std::swap(roots[0], roots[1]);
    if (roots[0] > 0.0) return roots[0];
    if (roots[1] > 0.0) return roots[1];
    return std::nullopt;
}

namespace {

void render_scanline(const CameraIntrinsics& intr, const Pose& pose, const CylinderModel& cyl,
                     const TextureSpec& tex, const RenderConfig& cfg, int y, Image& img) {
    for (int x = 0; x < intr.width; ++x) {
        const Vec3 dir = pose.R * pixel_to_camera_ray(intr, {static_cast<double>(x), static_cast<double>(y)});
        const auto lambda = ray_cylinder_intersect(pose.t, dir, cyl.radius);
        if (!lambda) {
            img.set_valid(x, y, false);
            continue;
        }
        const Vec3 p = pose.t + dir * *lambda;
        const double theta = wrap_angle(std::atan2(p.x, p.z));
        const Vec3 normal = Vec3{-p.x, 0.0, -p.z}.normalized();
        img.set(x, y, surface_color(tex, cfg, theta, p.y, normal));
    }
}

void check_camera_inside(const Pose& pose, const CylinderModel& cyl) {
    if (pose.t.x * pose.t.x + pose.t.z * pose.t.z >= cyl.radius * cyl.radius)
        throw std::domain_error("render_view: camera on or outside the cylinder wall");
}

}  // namespace

Image render_view(const CameraIntrinsics& intr, const Pose& pose, const CylinderModel& cyl,
                  const TextureSpec& tex, const RenderConfig& cfg) {
    intr.validate();
    pose.validate();
    cyl.validate();
    check_camera_inside(pose, cyl);
    Image img(intr.width, intr.height);
#pragma omp parallel for schedule(static)
    for (int y = 0; y < intr.height; ++y)
        render_scanline(intr, pose, cyl, tex, cfg, y, img);
    return img;
}

Image render_view_serial(const CameraIntrinsics& intr, const Pose& pose,
                         const CylinderModel& cyl, const TextureSpec& tex,
                         const RenderConfig& cfg) {
    intr.validate();
    pose.validate();
    cyl.validate();
    check_camera_inside(pose, cyl);
    Image img(intr.width, intr.height);
    for (int y = 0; y < intr.height; ++y)
        render_scanline(intr, pose, cyl, tex, cfg, y, img);
    return img;
}

Image render_oracle_panorama(const CylinderModel& cyl, const TextureSpec& tex,
                             const RenderConfig& cfg, const PanoramaSpec& spec) {
    cyl.validate();
    spec.validate();
    Image img(spec.width, spec.height());
    const int h = spec.height();
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            const CylinderPoint cp = pano_to_cylinder(spec, x, y);
            const Vec3 normal{-std::sin(cp.theta), 0.0, -std::cos(cp.theta)};
            img.set(x, y, surface_color(tex, cfg, cp.theta, cp.height, normal));
        }
    }
    return img;
}

}  // namespace tunnelstitch
