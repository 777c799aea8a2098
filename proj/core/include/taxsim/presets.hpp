#ifndef TAXSIM_PRESETS_HPP
#define TAXSIM_PRESETS_HPP

#include <string>

#include "taxsim/simulation.hpp"

namespace taxsim {

/// Model constants for one of the six experiment ids (or "custom" for bare
/// defaults). Throws ConfigError on unknown ids.
ModelConfig model_preset(const std::string& experiment_id);

/// Full simulation configuration for an experiment id with the default
/// grid, horizon, and snapshot schedule.
SimulationConfig preset(const std::string& experiment_id);

} // namespace taxsim

#endif
