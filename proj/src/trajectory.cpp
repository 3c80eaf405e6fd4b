#include "tunnelstitch/trajectory.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tunnelstitch/rng.hpp"

namespace tunnelstitch {

namespace {

constexpr const char* kHeader = "tunnelstitch-trajectory v1";

// Noise channels within a frame's random stream.
enum Channel : std::uint32_t { kTx = 0, kTy, kTz, kRx, kRy, kRz };

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_pose_fields(std::ostream& out, const Pose& p) {
    for (int i = 0; i < 9; ++i) out << " " << format_double(p.R.m[i]);
    out << " " << format_double(p.t.x) << " " << format_double(p.t.y) << " "
        << format_double(p.t.z);
}

Pose parse_pose_fields(std::istringstream& in, int line_no) {
    Pose p;
    for (int i = 0; i < 9; ++i) {
        if (!(in >> p.R.m[i]))
            throw std::runtime_error("trajectory: malformed rotation on line " +
                                     std::to_string(line_no));
    }
    if (!(in >> p.t.x >> p.t.y >> p.t.z))
        throw std::runtime_error("trajectory: malformed translation on line " +
                                 std::to_string(line_no));
    return p;
}

}  // namespace

void TrajectoryConfig::validate() const {
    if (n_frames < 1) throw std::invalid_argument("trajectory: n_frames must be at least 1");
    if (noise_std_translation.x < 0.0 || noise_std_translation.y < 0.0 ||
        noise_std_translation.z < 0.0 || noise_std_rotation < 0.0)
        throw std::invalid_argument("trajectory: noise standard deviations must be nonnegative");
}

std::vector<FramePose> generate_stationary(double yaw_step, int n) {
    if (n < 1) throw std::invalid_argument("trajectory: n must be at least 1");
    std::vector<FramePose> frames;
    frames.reserve(n);
    for (int k = 0; k < n; ++k) {
        Pose p{Mat3::rotation_y(yaw_step * k), {0.0, 0.0, 0.0}};
        frames.push_back({k, p, p});
    }
    return frames;
}

std::vector<FramePose> generate_spiral(const TrajectoryConfig& cfg,
                                       std::optional<double> cylinder_radius) {
    cfg.validate();
    std::vector<FramePose> frames;
    frames.reserve(cfg.n_frames);
    std::vector<int> outside;
    for (int k = 0; k < cfg.n_frames; ++k) {
        Pose planned{Mat3::rotation_y(cfg.yaw_step * k),
                     cfg.initial_t + cfg.translation_step * static_cast<double>(k)};
        Pose actual = planned;
        const auto frame = static_cast<std::uint32_t>(k);
        actual.t += {cfg.noise_std_translation.x * gaussian(cfg.seed, frame, kTx),
                     cfg.noise_std_translation.y * gaussian(cfg.seed, frame, kTy),
                     cfg.noise_std_translation.z * gaussian(cfg.seed, frame, kTz)};
        if (cfg.noise_std_rotation > 0.0) {
            const double ex = cfg.noise_std_rotation * gaussian(cfg.seed, frame, kRx);
            const double ey = cfg.noise_std_rotation * gaussian(cfg.seed, frame, kRy);
            const double ez = cfg.noise_std_rotation * gaussian(cfg.seed, frame, kRz);
            actual.R = planned.R * Mat3::rotation_x(ex) * Mat3::rotation_y(ey) *
                       Mat3::rotation_z(ez);
        }
        if (cylinder_radius &&
            actual.t.x * actual.t.x + actual.t.z * actual.t.z >=
                *cylinder_radius * *cylinder_radius)
            outside.push_back(k);
        frames.push_back({k, actual, planned});
    }
    if (!outside.empty()) {
        std::string msg = "trajectory: jittered pose outside the cylinder at frame(s)";
        for (int k : outside) msg += " " + std::to_string(k);
        throw std::runtime_error(msg);
    }
    return frames;
}

void save_trajectory(const std::vector<FramePose>& frames, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("trajectory: cannot open " + path + " for writing");
    out << kHeader << "\n";
    out << "# k r11 r12 r13 r21 r22 r23 r31 r32 r33 tx ty tz [| planned]\n";
    for (const auto& f : frames) {
        out << f.index;
        write_pose_fields(out, f.pose);
        out << " |";
        write_pose_fields(out, f.planned_pose);
        out << "\n";
    }
    if (!out) throw std::runtime_error("trajectory: write failed for " + path);
}

std::vector<FramePose> load_trajectory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("trajectory: cannot open " + path);
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line) || line != kHeader)
        throw std::runtime_error("trajectory: missing header in " + path);
    ++line_no;
    std::vector<FramePose> frames;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string pose_part = line, planned_part;
        const auto bar = line.find('|');
        if (bar != std::string::npos) {
            pose_part = line.substr(0, bar);
            planned_part = line.substr(bar + 1);
        }
        std::istringstream ps(pose_part);
        FramePose f;
        if (!(ps >> f.index))
            throw std::runtime_error("trajectory: malformed frame index on line " +
                                     std::to_string(line_no));
        f.pose = parse_pose_fields(ps, line_no);
        std::string trailing;
        if (ps >> trailing)
            throw std::runtime_error("trajectory: unexpected trailing data on line " +
                                     std::to_string(line_no));
        if (!planned_part.empty()) {
            std::istringstream qs(planned_part);
            f.planned_pose = parse_pose_fields(qs, line_no);
        } else {
            f.planned_pose = f.pose;
        }
        try {
            f.pose.validate();
            f.planned_pose.validate();
        } catch (const std::exception& e) {
            throw std::runtime_error("trajectory: invalid pose on line " +
                                     std::to_string(line_no) + ": " + e.what());
        }
        frames.push_back(std::move(f));
    }
    return frames;
}

}  // namespace tunnelstitch
