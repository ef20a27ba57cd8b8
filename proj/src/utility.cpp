#include "tpsim/utility.hpp"

#include <cmath>
#include <string>

namespace tpsim {

double rho_from_phi(double phi) {
    if (!(phi > 0.0 && phi < 1.0))
        throw std::domain_error("rho_from_phi: discount factor must lie in (0,1)");
    return -std::log(phi);
}

UtilityAccumulator accumulate(UtilityAccumulator acc, double rho,
                              double c_from, double c_to,
                              double t_from, double t_to, double theta) {
    if (t_from != acc.t_last)
        throw std::invalid_argument(
            "accumulate: segment start " + std::to_string(t_from) +
            " does not continue from t_last " + std::to_string(acc.t_last));
    if (t_to < t_from)
        throw std::invalid_argument("accumulate: time must not go backwards");
    if (t_to == t_from) return acc;

    const double f0 = std::exp(-rho * t_from) * instantaneous_utility(c_from, theta);
    const double f1 = std::exp(-rho * t_to) * instantaneous_utility(c_to, theta);
    acc.total += 0.5 * (t_to - t_from) * (f0 + f1);
    acc.t_last = t_to;
    return acc;
}

double tail_utility(const AdjustmentPath& path, double rho, double t_max,
                    double theta, double dt) {
    if (!(rho > 0.0))
        throw std::domain_error("tail_utility: discount rate must be positive");
    if (!(dt > 0.0))
        throw std::domain_error("tail_utility: step must be positive");
    if (t_max < path.t_anchor)
        throw std::domain_error("tail_utility: t_max precedes the path anchor");

    const double tol = 1e-9 * path.c_target;
    double gap = (path.c_anchor - path.c_target) *
                 std::exp(path.mu * (t_max - path.t_anchor));

    double total = 0.0;
    double t_switch = t_max;
    if (std::abs(gap) >= tol) {
        const double gap_step = std::exp(path.mu * dt);
        if (!(gap_step < 1.0))
            throw std::domain_error("tail_utility: step too small to make progress");
        const double disc_step = std::exp(-rho * dt);
        double disc = std::exp(-rho * t_max);
        double f_prev = disc * instantaneous_utility(path.c_target + gap, theta);
        long long steps = 0;
        do {
            gap *= gap_step;
            disc *= disc_step;
            const double f = disc * instantaneous_utility(path.c_target + gap, theta);
            total += 0.5 * dt * (f_prev + f);
            f_prev = f;
            ++steps;
        } while (std::abs(gap) >= tol);
        t_switch = t_max + static_cast<double>(steps) * dt;
    }
    total += std::exp(-rho * t_switch) *
             instantaneous_utility(path.c_target, theta) / rho;
    return total;
}

}  // namespace tpsim
