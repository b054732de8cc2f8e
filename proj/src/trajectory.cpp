#include "crowdrisk/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace crowdrisk {

namespace {
constexpr double PI = 3.14159265358979323846;
}

double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * PI);  // lands in [-pi, pi]
    if (a <= -PI) a = PI;
    return a;
}

double angle_diff(double b, double a) { return wrap_angle(b - a); }

double angle_lerp(double a, double b, double u) {
    return wrap_angle(a + u * angle_diff(b, a));
}

Trajectory resample(const Trajectory& traj, double dt_out) {
    if (traj.samples.size() < 2) throw std::invalid_argument("resample: degenerate trajectory");
    if (!(dt_out > 0.0)) throw std::invalid_argument("resample: dt_out must be > 0");

    const auto& in = traj.samples;
    const double t0 = in.front().t;
    const double t_end = in.back().t;

    Trajectory out;
    out.agent_id = traj.agent_id;
    out.group_id = traj.group_id;
    out.dt_sample = dt_out;
    out.samples.reserve(static_cast<std::size_t>((t_end - t0) / dt_out) + 2);

    std::size_t seg = 0;  // current segment [seg, seg+1]
    for (std::size_t k = 0;; ++k) {
        const double t = t0 + static_cast<double>(k) * dt_out;
        if (t > t_end + 1e-9) break;

        while (seg + 2 < in.size() && in[seg + 1].t <= t) ++seg;

        const TrajectorySample& a = in[seg];
        const TrajectorySample& b = in[seg + 1];
        if (t == a.t) {
            out.samples.push_back({t, a.pos, a.head_angle});
        } else if (t == b.t) {
            out.samples.push_back({t, b.pos, b.head_angle});
        } else {
            const double u = (t - a.t) / (b.t - a.t);
            TrajectorySample s;
            s.t = t;
            s.pos = a.pos + u * (b.pos - a.pos);
            s.head_angle = angle_lerp(a.head_angle, b.head_angle, u);
            out.samples.push_back(s);
        }
    }
    return out;
}

Vec2 finite_difference_velocity(const Trajectory& traj, std::size_t i) {
    const auto& s = traj.samples;
    if (s.size() < 2) throw std::invalid_argument("finite_difference_velocity: need >= 2 samples");
    if (i >= s.size()) throw std::out_of_range("finite_difference_velocity: index");

    if (i == 0) return (s[1].pos - s[0].pos) / (s[1].t - s[0].t);
    if (i + 1 == s.size()) return (s[i].pos - s[i - 1].pos) / (s[i].t - s[i - 1].t);
    return (s[i + 1].pos - s[i - 1].pos) / (s[i + 1].t - s[i - 1].t);
}

}  // namespace crowdrisk
