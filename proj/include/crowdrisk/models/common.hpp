#pragma once

#include <cstddef>
#include <vector>

#include "crowdrisk/agent.hpp"
#include "crowdrisk/models/model_params.hpp"
#include "crowdrisk/vec2.hpp"

namespace crowdrisk::models {

struct TtcResult {
    double tau{0.0};        // [s], +inf when no collision ahead
    bool overlapping{false};
};

/// Anticipated time to collision of two disks with relative position pos_rel,
/// relative velocity vel_rel and combined radius. Smallest t >= 0 with
/// |pos_rel + t*vel_rel| = combined_radius, +inf if none. Already-overlapping
/// input returns tau = 0 with the flag set. NaN input throws.
TtcResult time_to_collision(Vec2 pos_rel, Vec2 vel_rel, double combined_radius);

/// Closest point of segment [a, b] to p.
Vec2 closest_point_on_segment(Vec2 p, const Wall& wall);

/// Distance from a disk surface to the wall segment (negative when the disk
/// overlaps the wall).
double wall_surface_distance(Vec2 pos, double radius, const Wall& wall);

/// Unit vector from the wall's closest point toward pos.
Vec2 wall_normal(Vec2 pos, const Wall& wall);

/// Time until a disk moving at vel first touches the wall segment, +inf if
/// never. Returns 0 when already touching.
double time_to_wall_collision(Vec2 pos, Vec2 vel, double radius, const Wall& wall);

/// Uniform-grid broadphase over agent positions (cell 1 m). query() returns
/// indices of agents within `radius` of a point, ascending, optionally
/// excluding one index. Rebuilt each step from a frozen snapshot.
class NeighbourGrid {
public:
    explicit NeighbourGrid(const std::vector<AgentState>& agents, double cell_size = 1.0);

    std::vector<std::size_t> query(Vec2 pos, double radius,
                                   std::size_t exclude_index = static_cast<std::size_t>(-1)) const;

private:
    struct Cell {
        int cx;
        int cy;
        std::vector<std::size_t> indices;
    };
    const std::vector<AgentState>& agents_;
    double cell_size_;
    std::vector<Cell> cells_;  // sorted by (cx, cy)

    const std::vector<std::size_t>* find_cell(int cx, int cy) const;
};

}  // namespace crowdrisk::models
