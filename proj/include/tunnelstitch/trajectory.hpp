#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tunnelstitch/geometry.hpp"

namespace tunnelstitch {

enum class TrajectoryMode { stationary, spiral };

struct TrajectoryConfig {
    TrajectoryMode mode = TrajectoryMode::stationary;
    int n_frames = 1;
    double yaw_step = 0.0;                  // radians per frame
    Vec3 translation_step{0.0, 0.0, 0.0};   // meters per frame
    Vec3 initial_t{0.0, 0.0, 0.0};
    Vec3 noise_std_translation{0.0, 0.0, 0.0};
    double noise_std_rotation = 0.0;        // radians, per axis
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

/// One frame of the flight: the pose that actually took the picture plus the
/// noise-free pose the flight plan called for at the same index.
struct FramePose {
    int index = 0;
    Pose pose;
    Pose planned_pose;
};

/// Fixed-position sweep: frame k rotated by k*yaw_step about world y, t = 0.
std::vector<FramePose> generate_stationary(double yaw_step, int n);

/// Planned pose of frame k: (R_y(k*yaw_step), initial_t + k*translation_step).
/// The delivered pose adds zero-mean Gaussian jitter drawn from a counter
/// based generator keyed by (seed, frame, channel), so frames are
/// reproducible in any evaluation order. When `cylinder_radius` is supplied,
/// jittered poses leaving the wall are a hard error listing the frames.
std::vector<FramePose> generate_spiral(const TrajectoryConfig& cfg,
                                       std::optional<double> cylinder_radius = std::nullopt);

/// Plain-text persistence, bit-exact round trip. Line format:
///   k r11 r12 r13 r21 r22 r23 r31 r32 r33 tx ty tz [| <planned 12 numbers>]
/// with a `tunnelstitch-trajectory v1` header and `#` comments.
void save_trajectory(const std::vector<FramePose>& frames, const std::string& path);
std::vector<FramePose> load_trajectory(const std::string& path);

}  // namespace tunnelstitch
