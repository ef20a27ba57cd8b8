#include "tpsim/interaction.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpsim {

std::vector<std::string> InteractionParams::violations() const {
    std::vector<std::string> v;
    if (!(eps_k >= 0.0 && eps_k <= 1.0))
        v.push_back("interaction.eps_k must lie in [0,1]");
    if (!(eps_c >= 0.0 && eps_c <= 1.0))
        v.push_back("interaction.eps_c must lie in [0,1]");
    if (!(eps_rho >= 0.0 && eps_rho <= 1.0))
        v.push_back("interaction.eps_rho must lie in [0,1]");
    if (!(beta_k >= 1.0)) v.push_back("interaction.beta_k must be >= 1");
    if (!(beta_c >= 1.0)) v.push_back("interaction.beta_c must be >= 1");
    if (!(rho_norm > 0.0)) v.push_back("interaction.rho_norm must be > 0");
    return v;
}

namespace {

double update_factor(double rho_own, double k_own, double k_other,
                     double c_own, double c_other, const InteractionParams& p) {
    return 1.0 - p.eps_k * (p.beta_k * k_other - k_own) / k_own
               + p.eps_c * (p.beta_c * c_other - c_own) / c_own
               + p.eps_rho * (p.rho_norm - rho_own) / rho_own;
}

}  // namespace

InteractionResult interact(double rho_i, double rho_j, double k_i, double k_j,
                           double c_i, double c_j,
                           const InteractionParams& p) {
    if (!(rho_i > 0.0 && rho_j > 0.0))
        throw std::domain_error("interact: discount rates must be positive");
    if (!(k_i > 0.0 && k_j > 0.0))
        throw std::domain_error("interact: capital must be positive");
    if (!(c_i > 0.0 && c_j > 0.0))
        throw std::domain_error("interact: consumption must be positive");

    // Both factors read the pre-interaction snapshot.
    const double raw_i = rho_i * update_factor(rho_i, k_i, k_j, c_i, c_j, p);
    const double raw_j = rho_j * update_factor(rho_j, k_j, k_i, c_j, c_i, p);

    InteractionResult r;
    r.floored_i = raw_i < kRhoFloor;
    r.floored_j = raw_j < kRhoFloor;
    r.rho_i = std::max(raw_i, kRhoFloor);
    r.rho_j = std::max(raw_j, kRhoFloor);
    return r;
}

InteractionParams mixed_branch(const InteractionParams& params,
                               bool capital_branch) {
    InteractionParams eff = params;
    if (capital_branch)
        eff.eps_c = 0.0;
    else
        eff.eps_k = 0.0;
    return eff;
}

}  // namespace tpsim
