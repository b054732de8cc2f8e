#include "crowdrisk/models/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace crowdrisk::models {

namespace {
constexpr double INF = std::numeric_limits<double>::infinity();
}

TtcResult time_to_collision(Vec2 pos_rel, Vec2 vel_rel, double combined_radius) {
    if (!pos_rel.finite() || !vel_rel.finite() || !std::isfinite(combined_radius))
        throw std::invalid_argument("time_to_collision: non-finite input");
    if (!(combined_radius > 0.0))
        throw std::invalid_argument("time_to_collision: combined_radius must be > 0");

    const double c = pos_rel.norm_sq() - combined_radius * combined_radius;
    if (c <= 0.0) return {0.0, true};

    const double b = pos_rel.dot(vel_rel);
    if (b >= 0.0) return {INF, false};  // not approaching

    const double a = vel_rel.norm_sq();
    const double disc = b * b - a * c;
    if (disc < 0.0) return {INF, false};  // passes by

    return {(-b - std::sqrt(disc)) / a, false};
}

Vec2 closest_point_on_segment(Vec2 p, const Wall& wall) {
    const Vec2 ab = wall.b - wall.a;
    const double len_sq = ab.norm_sq();
    if (len_sq <= 0.0) return wall.a;
    const double u = std::clamp((p - wall.a).dot(ab) / len_sq, 0.0, 1.0);
    return wall.a + u * ab;
}

double wall_surface_distance(Vec2 pos, double radius, const Wall& wall) {
    return distance(pos, closest_point_on_segment(pos, wall)) - radius;
}

Vec2 wall_normal(Vec2 pos, const Wall& wall) {
    const Vec2 n = pos - closest_point_on_segment(pos, wall);
    const Vec2 unit = n.normalized();
    if (unit == Vec2{0.0, 0.0}) {
        // centre exactly on the wall: fall back to the segment's left normal
        return (wall.b - wall.a).normalized().perp();
    }
    return unit;
}

double time_to_wall_collision(Vec2 pos, Vec2 vel, double radius, const Wall& wall) {
    if (wall_surface_distance(pos, radius, wall) <= 0.0) return 0.0;

    double best = INF;

    // face contact with the segment interior
    const Vec2 ab = wall.b - wall.a;
    const double len = ab.norm();
    if (len > 0.0) {
        const Vec2 tangent = ab / len;
        const Vec2 n = tangent.perp();
        const double d0 = (pos - wall.a).dot(n);  // signed distance to the line
        const double dv = vel.dot(n);
        const double side = d0 >= 0.0 ? 1.0 : -1.0;
        if (side * dv < 0.0) {  // moving toward the line
            const double t = (side * radius - d0) / dv;
            if (t >= 0.0) {
                const double s = (pos + t * vel - wall.a).dot(tangent);
                if (s >= 0.0 && s <= len) best = std::min(best, t);
            }
        }
    }

    // endpoint contact
    for (const Vec2 end : {wall.a, wall.b}) {
        const TtcResult r = time_to_collision(pos - end, vel, radius);
        if (!r.overlapping) best = std::min(best, r.tau);
    }
    return best;
}

NeighbourGrid::NeighbourGrid(const std::vector<AgentState>& agents, double cell_size)
    : agents_(agents), cell_size_(cell_size) {
    std::vector<std::pair<std::pair<int, int>, std::size_t>> keyed;
    keyed.reserve(agents.size());
    for (std::size_t i = 0; i < agents.size(); ++i) {
        const int cx = static_cast<int>(std::floor(agents[i].pos.x / cell_size_));
        const int cy = static_cast<int>(std::floor(agents[i].pos.y / cell_size_));
        keyed.push_back({{cx, cy}, i});
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [key, idx] : keyed) {
        if (cells_.empty() || cells_.back().cx != key.first || cells_.back().cy != key.second)
            cells_.push_back({key.first, key.second, {}});
        cells_.back().indices.push_back(idx);
    }
}

const std::vector<std::size_t>* NeighbourGrid::find_cell(int cx, int cy) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), std::make_pair(cx, cy),
                               [](const Cell& c, const std::pair<int, int>& k) {
                                   return std::make_pair(c.cx, c.cy) < k;
                               });
    if (it != cells_.end() && it->cx == cx && it->cy == cy) return &it->indices;
    return nullptr;
}

std::vector<std::size_t> NeighbourGrid::query(Vec2 pos, double radius,
                                              std::size_t exclude_index) const {
    std::vector<std::size_t> result;
    const double r_sq = radius * radius;
    const int cx0 = static_cast<int>(std::floor((pos.x - radius) / cell_size_));
    const int cx1 = static_cast<int>(std::floor((pos.x + radius) / cell_size_));
    const int cy0 = static_cast<int>(std::floor((pos.y - radius) / cell_size_));
    const int cy1 = static_cast<int>(std::floor((pos.y + radius) / cell_size_));
    for (int cx = cx0; cx <= cx1; ++cx) {
        for (int cy = cy0; cy <= cy1; ++cy) {
            const auto* cell = find_cell(cx, cy);
            if (!cell) continue;
            for (std::size_t idx : cell->indices) {
                if (idx == exclude_index) continue;
                if ((agents_[idx].pos - pos).norm_sq() <= r_sq) result.push_back(idx);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace crowdrisk::models
