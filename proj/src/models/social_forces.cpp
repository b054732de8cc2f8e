#include "crowdrisk/models/social_forces.hpp"

#include <algorithm>
#include <cmath>

#include "crowdrisk/models/common.hpp"

namespace crowdrisk::models {

Vec2 social_forces_accel(const AgentState& self,
                         const std::vector<const AgentState*>& neighbours,
                         const std::vector<Wall>& walls,
                         const SocialForcesParams& p) {
    Vec2 accel = (self.preferred_velocity() - self.vel) / p.relax_time;

    for (const AgentState* other : neighbours) {
        const Vec2 away = self.pos - other->pos;
        const Vec2 dir = away.normalized();
        if (dir == Vec2{0.0, 0.0}) continue;  // coincident centres, undefined direction
        const double surface = away.norm() - (self.radius + other->radius);
        // rate at which the gap shrinks; amplifies repulsion between
        // approaching pairs (relative-velocity sensitivity)
        const double closing = std::max(0.0, -(self.vel - other->vel).dot(dir));
        accel += p.strength * std::exp(-surface / p.range) * (1.0 + 0.5 * closing) * dir;
    }

    for (const Wall& wall : walls) {
        const double surface = wall_surface_distance(self.pos, self.radius, wall);
        accel += p.strength * std::exp(-surface / p.range) * wall_normal(self.pos, wall);
    }
    return accel;
}

}  // namespace crowdrisk::models
