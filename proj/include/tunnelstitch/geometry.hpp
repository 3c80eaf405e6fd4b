#pragma once

#include <optional>

#include "tunnelstitch/math3.hpp"

namespace tunnelstitch {

/// Pinhole model: focal length and principal point in pixels.
struct CameraIntrinsics {
    double f = 0.0;
    double cx = 0.0, cy = 0.0;
    int width = 0, height = 0;

    void validate() const;  // throws std::invalid_argument
};

/// Rigid camera-to-world transform: X_w = R * X_c + t.
struct Pose {
    Mat3 R;
    Vec3 t;

    static constexpr double kOrthoTol = 1e-9;
    void validate() const;  // throws std::invalid_argument
    bool is_valid() const;

    /// Yaw about the world y axis, taken from the rotated optical axis.
    double yaw() const { return std::atan2(R(0, 2), R(2, 2)); }
};

/// World-frame tunnel wall x^2 + z^2 = radius^2, axis along world y.
struct CylinderModel {
    double radius = 0.0;

    void validate() const;
};

/// Point on the cylinder surface: azimuth in [0, 2pi), height along world y.
/// theta = 0 is the +z direction, theta = pi/2 is +x.
struct CylinderPoint {
    double theta = 0.0;
    double height = 0.0;
};

struct PixelCoord {
    double u = 0.0, v = 0.0;
};

/// R applied to the normalized pixel ray; the (c1, c3) pair drives the
/// lateral wall-intersection quadratic and c2 the height recovery.
struct SolveCoefficients {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
};

/// Camera-frame viewing ray with unit z so that X_c = z_c * ray.
Vec3 pixel_to_camera_ray(const CameraIntrinsics& intr, const PixelCoord& p);

/// Central projection of a 3D point onto the unit cylinder.
/// Throws std::domain_error for points on the cylinder axis (x = z = 0).
CylinderPoint project_unit_cylinder(const Vec3& x);

/// Flattens unit-cylinder coordinates onto a plane: (f*theta + cx, f*h + cy).
/// theta is used as given; negative angles stay negative.
PixelCoord unwrap_to_plane(double theta, double h, const CameraIntrinsics& intr);

SolveCoefficients solve_coefficients(const CameraIntrinsics& intr, const Pose& pose,
                                     const PixelCoord& p);

/// Depth z_c of the wall intersection along the pixel ray (positive root of
/// the lateral quadratic). Throws std::domain_error if the camera is not
/// strictly inside the cylinder or the ray is parallel to the axis.
double solve_depth(const SolveCoefficients& c, const Pose& pose, const CylinderModel& cyl);

/// Azimuth of the intersection, resolved with atan2 of the (r sin, r cos)
/// components; result in [0, 2pi).
double solve_theta(const SolveCoefficients& c, double z_c, const Pose& pose,
                   const CylinderModel& cyl);

/// World height of the intersection: c2 * z_c + t_y.
double solve_height(const SolveCoefficients& c, double z_c, const Pose& pose);

/// Full pixel -> wall solve (coefficients, depth, azimuth, height).
CylinderPoint pixel_to_cylinder(const CameraIntrinsics& intr, const Pose& pose,
                                const CylinderModel& cyl, const PixelCoord& p);

/// Non-throwing variant for per-pixel loops; nullopt on solver errors.
std::optional<CylinderPoint> try_pixel_to_cylinder(const CameraIntrinsics& intr,
                                                   const Pose& pose,
                                                   const CylinderModel& cyl,
                                                   const PixelCoord& p);

/// Projects a wall point back into the camera. Returns nullopt when the point
/// is behind the camera or lands outside [0,width) x [0,height).
std::optional<PixelCoord> cylinder_to_pixel(const CameraIntrinsics& intr, const Pose& pose,
                                            const CylinderModel& cyl, const CylinderPoint& cp);

}  // namespace tunnelstitch
