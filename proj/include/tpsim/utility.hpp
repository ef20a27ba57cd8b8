#pragma once

#include <cmath>
#include <stdexcept>

#include "tpsim/econ.hpp"

// Discounted lifetime utility U = integral of e^(-rho*t) u(c(t)) dt with
// CRRA instantaneous utility u(c) = c^(1-theta)/(1-theta). Discounting uses
// absolute time throughout: when rho changes at t1, the factor applied just
// after t1 is e^(-rho_new*t1), with no clock reset.

namespace tpsim {

// CRRA instantaneous utility. theta = 1 takes the log limit rather than
// dividing by zero. Hot path of the simulation, hence inline and with a
// sqrt shortcut for the common theta = 1/2.
inline double instantaneous_utility(double c, double theta) {
    if (!(c > 0.0))
        throw std::domain_error("instantaneous_utility: consumption must be positive");
    if (theta == 1.0) return std::log(c);
    if (theta == 0.5) return 2.0 * std::sqrt(c);
    return std::pow(c, 1.0 - theta) / (1.0 - theta);
}

// Map a per-year discount factor phi in (0,1) to the exponential rate
// rho = ln(1/phi), so that phi^t == e^(-rho*t).
double rho_from_phi(double phi);

struct UtilityAccumulator {
    double total = 0.0;   // utility accumulated so far
    double t_last = 0.0;  // absolute time of the last accumulation (years)
};

// Add the trapezoidal estimate of the integral of e^(-rho*t) u(c(t)) over
// [t_from, t_to], with consumption sampled at the segment ends. t_from must
// equal acc.t_last; a zero-length segment is a no-op. Throws
// std::invalid_argument when time would move backwards or skip.
UtilityAccumulator accumulate(UtilityAccumulator acc, double rho,
                              double c_from, double c_to,
                              double t_from, double t_to, double theta);

// Utility from t_max to the infinite horizon with rho frozen at its t_max
// value. Consumption keeps following the adjustment path: the integral is
// continued numerically at step dt until |c - c_target| < 1e-9 * c_target,
// after which the remainder has the closed form e^(-rho*T) u(c_target)/rho.
double tail_utility(const AdjustmentPath& path, double rho, double t_max,
                    double theta, double dt);

}  // namespace tpsim
