#pragma once

#include <cstddef>
#include <vector>

#include "crowdrisk/vec2.hpp"

namespace crowdrisk {

/// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

/// Signed shortest-arc difference b - a, in (-pi, pi].
double angle_diff(double b, double a);

/// Interpolate between angles along the shorter arc, u in [0, 1].
double angle_lerp(double a, double b, double u);

struct TrajectorySample {
    double t{0.0};        // [s]
    Vec2 pos;             // [m]
    double head_angle{0.0};  // [rad]
};

/// Uniformly sampled (t, x, y, theta) series of one agent. The interchange
/// currency between the simulator and the risk engine.
struct Trajectory {
    int agent_id{0};
    int group_id{0};
    double dt_sample{0.0};  // [s], uniform spacing after resampling
    std::vector<TrajectorySample> samples;

    double t_begin() const { return samples.front().t; }
    double t_end() const { return samples.back().t; }
    std::size_t size() const { return samples.size(); }
};

/// Resample onto the uniform grid t0, t0+dt_out, ... <= t_end. Positions are
/// interpolated linearly, head angles along the shorter arc. Exact sample
/// times are copied bit-for-bit, which makes resampling idempotent at a
/// matching dt. Throws on fewer than 2 samples or dt_out <= 0.
Trajectory resample(const Trajectory& traj, double dt_out);

/// Velocity at sample i by finite differences: central where possible,
/// one-sided at the ends. Requires >= 2 samples.
Vec2 finite_difference_velocity(const Trajectory& traj, std::size_t i);

}  // namespace crowdrisk
