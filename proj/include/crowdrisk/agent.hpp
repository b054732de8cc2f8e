#pragma once

#include <vector>

#include "crowdrisk/vec2.hpp"

namespace crowdrisk {

/// State of one pedestrian disk at one instant.
struct AgentState {
    int agent_id{0};
    int group_id{0};
    Vec2 pos;             // [m]
    Vec2 vel;             // [m/s]
    double radius{0.2};   // [m], body disk
    double pref_speed{1.25};  // [m/s]
    Vec2 goal;            // [m]
    double head_angle{0.0};   // [rad], in (-pi, pi]

    /// Preferred velocity: pref_speed toward the goal, zero once on it.
    Vec2 preferred_velocity() const {
        return pref_speed * (goal - pos).normalized();
    }
};

/// All agents at one instant plus the simulation clock.
struct CrowdState {
    double t{0.0};  // [s]
    std::vector<AgentState> agents;
};

}  // namespace crowdrisk
