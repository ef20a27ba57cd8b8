#pragma once

#include <string>
#include <vector>

#include "tpsim/engine.hpp"

// Configuration documents and the built-in scenario presets. A scenario is a
// JSON object with optional nested sections; absent keys take the standard
// defaults (N = 1000 agents, hourly steps, daily interactions, 10-year
// horizon, rho0 = 0.223, rho_norm = 0.2, alpha = 0.5, delta = 0.1,
// theta = 0.5, beta_k = beta_c = 1.1, all interaction strengths 0):
//
// {
//   "name": "my-scenario",
//   "seeds": 10,
//   "base_seed": 1,
//   "schedule": { "n_agents": 1000, "dt": 0.000114155, "t_p": 0.00273973,
//                 "t_max": 10.0, "sample_agents": [0], "sample_stride": 24 },
//   "econ": { "alpha": 0.5, "delta": 0.1, "theta": 0.5,
//             "lambda": 0.0, "kappa": 0.0 },
//   "initial": { "rho0": 0.223, "u0": 0.0 },
//   "interaction": { "eps_k": 0.1, "eps_c": 0.0, "eps_rho": 0.0,
//                    "beta_k": 1.1, "beta_c": 1.1, "rho_norm": 0.2,
//                    "mode": "fixed" }
// }
//
// Unknown keys are rejected by name; every constraint violation is reported
// in one error.

namespace tpsim {

struct Scenario {
    std::string name = "custom";
    SimConfig config;
    int n_seeds = 1;            // replications; seed s runs with base_seed + s
    std::uint64_t base_seed = 1;
};

// Parse and fully validate a configuration document. Throws config_error.
Scenario parse_scenario(const std::string& text);

// Canonical JSON with every key present; parse_scenario(serialize_scenario(s))
// reproduces s exactly (doubles round-trip bit-for-bit).
std::string serialize_scenario(const Scenario& scenario);

// Built-in presets. Most names yield one scenario; "fig6-grid" expands to
// the 12-cell strength grid (eps_k or eps_c in {0.1, 0.2, 0.3}, each with
// eps_rho = 0 and 0.1). Throws config_error for unknown names.
std::vector<Scenario> preset(const std::string& name);

std::vector<std::string> preset_names();

// Expand a base document into one scenario per value of a dotted key, e.g.
// key "interaction.eps_k" with values {"0.1","0.2"}. Each cell is named
// "<key>=<value>" and validated independently.
std::vector<Scenario> expand_sweep(const std::string& base_text,
                                   const std::string& key,
                                   const std::vector<std::string>& values);

}  // namespace tpsim
