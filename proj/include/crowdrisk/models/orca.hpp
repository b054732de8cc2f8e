#pragma once

#include <vector>

#include "crowdrisk/agent.hpp"
#include "crowdrisk/models/model_params.hpp"

namespace crowdrisk::models {

/// ORCA permitted-velocity constraint of `self` against `other`:
/// u is the smallest change to the relative velocity that escapes the
/// velocity-obstacle cone truncated at time_horizon; self takes half of it
/// (reciprocity), so the half-plane boundary passes through vel + u/2.
/// Overlapping agents fall back to a separation-over-dt construction.
HalfPlane orca_halfplane(const AgentState& self, const AgentState& other,
                         double time_horizon, double dt);

/// Wall constraint: caps the velocity component toward the wall at
/// surface_distance / time_horizon (full responsibility, walls do not yield).
HalfPlane orca_wall_halfplane(const AgentState& self, const Wall& wall, double time_horizon);

/// Velocity in the intersection of the half-planes and the disk |v| <= v_max
/// closest to v_pref. When the intersection is empty, returns the velocity
/// minimizing the maximum signed constraint violation (still within the disk).
/// Incremental 2D linear program with a third-dimension relaxation pass.
Vec2 solve_lp2(const std::vector<HalfPlane>& constraints, Vec2 v_pref, double v_max);

/// Full ORCA step: constraints from all neighbours and walls, then solve_lp2
/// toward the preferred velocity with v_max = pref_speed.
Vec2 orca_select_velocity(const AgentState& self,
                          const std::vector<const AgentState*>& neighbours,
                          const std::vector<Wall>& walls,
                          double dt, const OrcaParams& p);

}  // namespace crowdrisk::models
