#pragma once

#include <string>
#include <vector>

// Pairwise time-preference update. When agents i and j meet, each rescales
// its discount rate by a factor built from three comparisons: the other's
// capital (seen inflated by the bias beta_k), the other's consumption
// (inflated by beta_c), and a shared normative rate rho_norm:
//
//   rho_i' = rho_i * (1 - eps_k*(beta_k*k_j - k_i)/k_i
//                       + eps_c*(beta_c*c_j - c_i)/c_i
//                       + eps_rho*(rho_norm - rho_i)/rho_i)
//
// and symmetrically for j with i and j swapped. Both updates read the
// pre-interaction state, so the kernel is exchangeable.

namespace tpsim {

enum class InteractionMode {
    fixed,  // every event uses the configured strengths as-is
    mixed,  // per event, a fair coin picks the capital-only or the
            // consumption-only branch of the configured strengths
};

// Discount rates are clamped here after an update; the raw kernel can
// produce rho <= 0, where the saddle formulas break down.
inline constexpr double kRhoFloor = 1e-4;

struct InteractionParams {
    double eps_k = 0.0;    // capital-comparison strength, in [0,1]
    double eps_c = 0.0;    // consumption-comparison strength, in [0,1]
    double eps_rho = 0.0;  // norm-reference strength, in [0,1]
    double beta_k = 1.1;   // capital bias, >= 1
    double beta_c = 1.1;   // consumption bias, >= 1
    double rho_norm = 0.2;
    InteractionMode mode = InteractionMode::fixed;

    std::vector<std::string> violations() const;
};

struct InteractionResult {
    double rho_i = 0.0;
    double rho_j = 0.0;
    bool floored_i = false;  // raw update fell below kRhoFloor
    bool floored_j = false;
};

// Apply one interaction event. `params` must already be resolved to a fixed
// parameter set (see mixed_branch). Throws std::domain_error if any rate,
// capital, or consumption input is not strictly positive.
InteractionResult interact(double rho_i, double rho_j, double k_i, double k_j,
                           double c_i, double c_j,
                           const InteractionParams& params);

// Resolve mixed mode for one event: the capital branch keeps eps_k and zeroes
// eps_c, the consumption branch does the opposite. eps_rho and the biases are
// kept in both branches.
InteractionParams mixed_branch(const InteractionParams& params,
                               bool capital_branch);

}  // namespace tpsim
