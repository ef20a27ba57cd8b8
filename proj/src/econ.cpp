#include "tpsim/econ.hpp"

#include <cmath>
#include <stdexcept>

namespace tpsim {

std::vector<std::string> EconomyParams::violations() const {
    std::vector<std::string> v;
    if (!(alpha > 0.0 && alpha < 1.0))
        v.push_back("econ.alpha must satisfy 0 < alpha < 1");
    if (!(delta >= 0.0)) v.push_back("econ.delta must be >= 0");
    if (!(theta > 0.0)) v.push_back("econ.theta must be > 0");
    if (lambda != 0.0)
        v.push_back("econ.lambda must be 0 (labour growth is not modelled)");
    if (kappa != 0.0)
        v.push_back("econ.kappa must be 0 (knowledge growth is not modelled)");
    return v;
}

Derivatives rhs(double k, double c, double rho, const EconomyParams& p) {
    if (!(k > 0.0)) throw std::domain_error("rhs: capital must be positive");
    if (!(c > 0.0)) throw std::domain_error("rhs: consumption must be positive");
    const double dk = std::pow(k, p.alpha) - c - p.delta * k;
    const double dc = c * (p.alpha * std::pow(k, p.alpha - 1.0) - p.delta - rho) / p.theta;
    return {dk, dc};
}

SteadyState saddle_point(double rho, const EconomyParams& p) {
    if (!(rho > 0.0))
        throw std::domain_error("saddle_point: discount rate must be positive");
    const double k = std::pow((p.delta + rho) / p.alpha, 1.0 / (p.alpha - 1.0));
    const double c = std::pow(k, p.alpha) - p.delta * k;
    return {k, c};
}

double curvature(double k_star, const EconomyParams& p) {
    if (!(k_star > 0.0))
        throw std::domain_error("curvature: capital must be positive");
    return p.alpha * (p.alpha - 1.0) * std::pow(k_star, p.alpha - 2.0);
}

double stable_eigenvalue(double rho_new, const SteadyState& target,
                         const EconomyParams& p) {
    const double q = curvature(target.k, p) * target.c / p.theta;  // < 0
    return 0.5 * (rho_new - std::sqrt(rho_new * rho_new - 4.0 * q));
}

double stable_arm_slope(const SteadyState& target, double mu,
                        const EconomyParams& p) {
    return curvature(target.k, p) * target.c / (p.theta * mu);
}

AdjustmentPath retarget_path(double current_k, double rho_new, double t_now,
                             const EconomyParams& p) {
    if (!(current_k > 0.0))
        throw std::domain_error("retarget_path: capital must be positive");
    const SteadyState target = saddle_point(rho_new, p);
    const double mu = stable_eigenvalue(rho_new, target, p);
    const double slope = stable_arm_slope(target, mu, p);
    const double c_anchor = target.c + slope * (current_k - target.k);
    if (!(c_anchor > 0.0))
        throw model_error("retarget_path: consumption jump lands at c <= 0 "
                          "(rho_new = " + std::to_string(rho_new) +
                          ", k = " + std::to_string(current_k) + ")");
    return {target.k, target.c, current_k, c_anchor, mu, t_now};
}

PathPoint path_eval(const AdjustmentPath& path, double t) {
    if (t < path.t_anchor)
        throw std::domain_error("path_eval: t precedes the path anchor");
    // 1 - e^(mu*tau), written with expm1 so tau = 0 returns the anchors
    // exactly and tau -> inf approaches the targets from the anchor side.
    const double w = -std::expm1(path.mu * (t - path.t_anchor));
    return {path.k_anchor + (path.k_target - path.k_anchor) * w,
            path.c_anchor + (path.c_target - path.c_anchor) * w};
}

}  // namespace tpsim
