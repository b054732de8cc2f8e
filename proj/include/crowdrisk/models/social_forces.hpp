#pragma once

#include <vector>

#include "crowdrisk/agent.hpp"
#include "crowdrisk/models/model_params.hpp"

namespace crowdrisk::models {

/// Social-forces acceleration: goal-driving term plus exponential pairwise
/// repulsions, amplified when the pair is closing in, plus wall repulsions.
Vec2 social_forces_accel(const AgentState& self,
                         const std::vector<const AgentState*>& neighbours,
                         const std::vector<Wall>& walls,
                         const SocialForcesParams& p);

}  // namespace crowdrisk::models
