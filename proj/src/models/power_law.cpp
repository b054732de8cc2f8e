#include "crowdrisk/models/power_law.hpp"

#include <cmath>
#include <limits>

#include "crowdrisk/models/common.hpp"

namespace crowdrisk::models {

double power_law_energy(double tau, const PowerLawParams& p) {
    if (!(tau > 0.0) || std::isinf(tau)) return 0.0;
    return p.k * std::exp(-tau / p.tau0) / (tau * tau);
}

Vec2 power_law_accel(const AgentState& self,
                     const std::vector<const AgentState*>& neighbours,
                     const std::vector<Wall>& walls,
                     const PowerLawParams& p) {
    Vec2 accel = (self.preferred_velocity() - self.vel) / p.relax_time;

    for (const AgentState* other : neighbours) {
        const Vec2 rel_pos = self.pos - other->pos;
        const Vec2 rel_vel = self.vel - other->vel;
        const double radius = self.radius + other->radius;

        const double c = rel_pos.norm_sq() - radius * radius;
        if (c <= 0.0) {
            // already touching: tau = 0, energy diverges; apply the cap
            accel += p.f_max * rel_pos.normalized();
            continue;
        }
        const double b = rel_pos.dot(rel_vel);
        if (b >= 0.0) continue;  // not approaching
        const double a = rel_vel.norm_sq();
        const double disc = b * b - a * c;
        if (disc <= 0.0) continue;  // no collision course
        const double sqrt_disc = std::sqrt(disc);
        const double tau = (-b - sqrt_disc) / a;
        if (!(tau > 0.0) || tau > p.tau_cutoff) continue;

        // F = -dE/dtau * dtau/dp, with dtau/dp = (v tau + p)/sqrt(disc);
        // the force pushes the anticipated collision further away
        const double magnitude =
            p.k * std::exp(-tau / p.tau0) * (2.0 / tau + 1.0 / p.tau0) / (tau * tau);
        Vec2 force = (magnitude / sqrt_disc) * (rel_vel * tau + rel_pos);
        const double f_norm = force.norm();
        if (f_norm > p.f_max) force *= p.f_max / f_norm;
        accel += force;
    }

    for (const Wall& wall : walls) {
        const double surface = wall_surface_distance(self.pos, self.radius, wall);
        accel += p.wall_strength * std::exp(-surface / p.wall_range) * wall_normal(self.pos, wall);
    }
    return accel;
}

}  // namespace crowdrisk::models
