#pragma once

#include <vector>

#include "crowdrisk/agent.hpp"
#include "crowdrisk/models/model_params.hpp"

namespace crowdrisk::models {

/// Pairwise interaction energy k * tau^-2 * exp(-tau/tau0) of an anticipated
/// collision tau seconds ahead.
double power_law_energy(double tau, const PowerLawParams& p);

/// Anticipatory acceleration: goal-driving term plus, for every neighbour on
/// a collision course within tau_cutoff, the negative gradient of the
/// interaction energy with respect to relative position. Walls act through a
/// short-range exponential repulsion.
Vec2 power_law_accel(const AgentState& self,
                     const std::vector<const AgentState*>& neighbours,
                     const std::vector<Wall>& walls,
                     const PowerLawParams& p);

}  // namespace crowdrisk::models
