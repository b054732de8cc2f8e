#pragma once

#include <stdexcept>
#include <string>

#include "crowdrisk/vec2.hpp"

namespace crowdrisk::models {

/// The five local steering models.
enum class ModelKind { SocialForces, RVO, ORCA, PowerLaw, Moussaid };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& token);

/// Wall segment. Corridor boundaries are two of these.
struct Wall {
    Vec2 a;
    Vec2 b;
};

/// Permitted-velocity constraint: {v : (v - point) . normal >= 0}.
/// point is a velocity [m/s]; normal is unit and points into the permitted side.
struct HalfPlane {
    Vec2 point;
    Vec2 normal;
};

struct SocialForcesParams {
    double relax_time = 0.5;   // [s], driving-term relaxation
    double strength = 4.5;     // [m/s^2], repulsion amplitude A
    double range = 0.3;        // [m], repulsion decay length B
    // pairwise repulsion is scaled by (1 + max(0, closing_speed)/2)
};

struct PowerLawParams {
    double relax_time = 0.5;   // [s]
    double k = 1.5;            // energy scale, k * tau^-2 * exp(-tau/tau0)
    double tau0 = 3.0;         // [s]
    double tau_cutoff = 10.0;  // [s], interactions beyond this ttc are ignored
    double f_max = 20.0;       // [m/s^2], force cap when already touching
    double wall_strength = 4.5;  // [m/s^2], walls repel through a short-range exponential
    double wall_range = 0.3;     // [m]
};

struct RvoParams {
    double time_horizon = 5.0;      // [s]
    double neighbour_radius = 5.0;  // [m]
    int sample_count = 256;         // candidate velocities
    double penalty_weight = 1.0;    // [m^2/s], w in penalty = w/ttc + |v - v_pref|
};

struct OrcaParams {
    double time_horizon = 2.0;  // [s]
};

struct MoussaidParams {
    double angular_range = 75.0 * 3.14159265358979323846 / 180.0;  // [rad]
    double d_max = 8.0;        // [m], sight horizon
    double relax_time = 0.5;   // [s]
    int candidate_count = 61;  // odd, so straight-ahead is a candidate
};

/// Parameter records for all models plus shared perception settings.
struct ModelParams {
    double perception_radius = 5.0;  // [m], neighbour visibility for all models
    SocialForcesParams social_forces;
    PowerLawParams power_law;
    RvoParams rvo;
    OrcaParams orca;
    MoussaidParams moussaid;
};

}  // namespace crowdrisk::models
