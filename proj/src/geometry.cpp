#include "tunnelstitch/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace tunnelstitch {

void CameraIntrinsics::validate() const {
    if (!(f > 0.0)) throw std::invalid_argument("intrinsics: focal length must be positive");
    if (width < 1 || height < 1)
        throw std::invalid_argument("intrinsics: image size must be at least 1x1");
    if (!(cx >= 0.0 && cx < width) || !(cy >= 0.0 && cy < height))
        throw std::invalid_argument("intrinsics: principal point outside the image");
}

bool Pose::is_valid() const {
    return R.orthonormality_error() <= kOrthoTol && std::abs(R.det() - 1.0) <= kOrthoTol;
}

void Pose::validate() const {
    if (R.orthonormality_error() > kOrthoTol)
        throw std::invalid_argument("pose: rotation is not orthonormal");
    if (std::abs(R.det() - 1.0) > kOrthoTol)
        throw std::invalid_argument("pose: rotation determinant is not +1");
}

void CylinderModel::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("cylinder: radius must be positive");
}

Vec3 pixel_to_camera_ray(const CameraIntrinsics& intr, const PixelCoord& p) {
    return {(p.u - intr.cx) / intr.f, (p.v - intr.cy) / intr.f, 1.0};
}

CylinderPoint project_unit_cylinder(const Vec3& x) {
    const double rho = std::sqrt(x.x * x.x + x.z * x.z);
    if (rho == 0.0)
        throw std::domain_error("project_unit_cylinder: point on the cylinder axis, azimuth undefined");
    return {wrap_angle(std::atan2(x.x, x.z)), x.y / rho};
}

PixelCoord unwrap_to_plane(double theta, double h, const CameraIntrinsics& intr) {
    return {intr.f * theta + intr.cx, intr.f * h + intr.cy};
}

SolveCoefficients solve_coefficients(const CameraIntrinsics& intr, const Pose& pose,
                                     const PixelCoord& p) {
    const Vec3 c = pose.R * pixel_to_camera_ray(intr, p);
    return {c.x, c.y, c.z};
}

namespace {

// Positive root of (c1 z + tx)^2 + (c3 z + tz)^2 = r^2; nullopt when the
// camera is not strictly inside the wall or the ray has no lateral component.
std::optional<double> solve_depth_opt(const SolveCoefficients& c, const Vec3& t, double r) {
    const double inside = t.x * t.x + t.z * t.z - r * r;
    if (inside >= 0.0) return std::nullopt;
    const double a = c.c1 * c.c1 + c.c3 * c.c3;
    if (a <= 0.0) return std::nullopt;
    const double b = c.c1 * t.x + c.c3 * t.z;
    // inside < 0 forces the discriminant positive and the roots to straddle 0.
    const double disc = b * b - a * inside;
    return (-b + std::sqrt(disc)) / a;
}

}  // namespace

double solve_depth(const SolveCoefficients& c, const Pose& pose, const CylinderModel& cyl) {
    const double r = cyl.radius;
    if (pose.t.x * pose.t.x + pose.t.z * pose.t.z >= r * r)
        throw std::domain_error("solve_depth: camera on or outside the cylinder wall");
    if (c.c1 * c.c1 + c.c3 * c.c3 <= 0.0)
        throw std::domain_error("solve_depth: ray parallel to the cylinder axis, no lateral intersection");
    return *solve_depth_opt(c, pose.t, r);
}

double solve_theta(const SolveCoefficients& c, double z_c, const Pose& pose,
                   const CylinderModel& /*cyl*/) {
    return wrap_angle(std::atan2(c.c1 * z_c + pose.t.x, c.c3 * z_c + pose.t.z));
}

double solve_height(const SolveCoefficients& c, double z_c, const Pose& pose) {
    return c.c2 * z_c + pose.t.y;
}

CylinderPoint pixel_to_cylinder(const CameraIntrinsics& intr, const Pose& pose,
                                const CylinderModel& cyl, const PixelCoord& p) {
    const SolveCoefficients c = solve_coefficients(intr, pose, p);
    const double z_c = solve_depth(c, pose, cyl);
    return {solve_theta(c, z_c, pose, cyl), solve_height(c, z_c, pose)};
}

std::optional<CylinderPoint> try_pixel_to_cylinder(const CameraIntrinsics& intr,
                                                   const Pose& pose,
                                                   const CylinderModel& cyl,
                                                   const PixelCoord& p) {
    const SolveCoefficients c = solve_coefficients(intr, pose, p);
    const auto z_c = solve_depth_opt(c, pose.t, cyl.radius);
    if (!z_c) return std::nullopt;
    return CylinderPoint{solve_theta(c, *z_c, pose, cyl), solve_height(c, *z_c, pose)};
}

std::optional<PixelCoord> cylinder_to_pixel(const CameraIntrinsics& intr, const Pose& pose,
                                            const CylinderModel& cyl, const CylinderPoint& cp) {
    const Vec3 world{cyl.radius * std::sin(cp.theta), cp.height,
                     cyl.radius * std::cos(cp.theta)};
    const Vec3 cam = pose.R.transposed_times(world - pose.t);
    if (cam.z <= 0.0) return std::nullopt;
    const PixelCoord p{intr.f * cam.x / cam.z + intr.cx, intr.f * cam.y / cam.z + intr.cy};
    if (p.u < 0.0 || p.u >= intr.width || p.v < 0.0 || p.v >= intr.height) return std::nullopt;
    return p;
}

}  // namespace tunnelstitch
