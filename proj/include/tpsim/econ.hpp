#pragma once

#include <string>
#include <vector>

#include "tpsim/errors.hpp"

// Closed-form Ramsey growth mathematics with Cobb-Douglas production
// f(k) = k^alpha and zero labour/knowledge growth:
//
//   dk/dt = k^alpha - c - delta*k
//   dc/dt = c * (alpha*k^(alpha-1) - delta - rho) / theta
//
// The system has a saddle point (k*, c*) for each discount rate rho. When an
// agent's rho changes, capital stays continuous, consumption jumps onto the
// stable arm of the new saddle, and the pair then relaxes exponentially at
// the stable eigenvalue mu < 0. Everything here is a pure function.

namespace tpsim {

struct EconomyParams {
    double alpha = 0.5;   // production exponent, 0 < alpha < 1
    double delta = 0.1;   // capital depreciation per year, >= 0
    double theta = 0.5;   // relative risk aversion, > 0
    double lambda = 0.0;  // labour growth; must be 0
    double kappa = 0.0;   // knowledge growth; must be 0

    // Empty when valid; otherwise one message per violated constraint.
    std::vector<std::string> violations() const;
};

struct SteadyState {
    double k = 0.0;  // capital per individual at the saddle, > 0
    double c = 0.0;  // consumption per individual at the saddle, > 0
};

struct Derivatives {
    double dk = 0.0;
    double dc = 0.0;
};

struct PathPoint {
    double k = 0.0;
    double c = 0.0;
};

// Linearized trajectory toward a saddle point. Anchored at the moment of the
// last discount-rate change: k_anchor is the (continuous) capital at that
// moment, c_anchor the consumption just after the jump onto the stable arm.
struct AdjustmentPath {
    double k_target = 0.0;
    double c_target = 0.0;
    double k_anchor = 0.0;
    double c_anchor = 0.0;
    double mu = 0.0;        // stable eigenvalue, < 0 (per year)
    double t_anchor = 0.0;  // absolute time of the change (years)
};

// The vector field (dk/dt, dc/dt). Throws std::domain_error for k <= 0 or
// c <= 0; rho = 0 is permitted here even though saddles require rho > 0.
Derivatives rhs(double k, double c, double rho, const EconomyParams& params);

// Saddle point for a given discount rate: k* = ((delta+rho)/alpha)^(1/(alpha-1)),
// c* = k*^alpha - delta*k*. Throws std::domain_error for rho <= 0.
SteadyState saddle_point(double rho, const EconomyParams& params);

// f''(k) = alpha*(alpha-1)*k^(alpha-2); negative for 0 < alpha < 1.
double curvature(double k_star, const EconomyParams& params);

// Negative root mu of mu^2 - rho*mu + f''(k*)c*/theta = 0, i.e.
// mu = (rho - sqrt(rho^2 - 4 f''(k*) c*/theta)) / 2. `target` must be the
// saddle for rho_new. The discriminant is always positive since f'' < 0.
double stable_eigenvalue(double rho_new, const SteadyState& target,
                         const EconomyParams& params);

// Slope dc/dk of the stable arm through the saddle: f''(k*)c*/(theta*mu).
// Positive, since f'' and mu are both negative.
double stable_arm_slope(const SteadyState& target, double mu,
                        const EconomyParams& params);

// Build the path an agent follows after its rate changes to rho_new at time
// t_now with capital current_k: capital is continuous, consumption jumps to
// c_target + slope*(current_k - k_target). Throws model_error if the jump
// lands at c <= 0.
AdjustmentPath retarget_path(double current_k, double rho_new, double t_now,
                             const EconomyParams& params);

// Position on the path at absolute time t >= t_anchor:
//   k(t) = k_target + e^(mu*(t-t_anchor)) * (k_anchor - k_target)
// and likewise for c. Evaluating at t_anchor returns the anchors exactly.
PathPoint path_eval(const AdjustmentPath& path, double t);

}  // namespace tpsim
