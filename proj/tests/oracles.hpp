#pragma once

// Test-only oracles. Everything here is independent of the library code
// paths it checks: the integrator consumes the raw vector field, the Gini
// oracle is the O(n^2) definition, and the chi-square tail uses a direct
// incomplete-gamma evaluation.

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct State {
    double k = 0.0;
    double c = 0.0;
};

// Classic RK4 over [0, t] with fixed step h.
inline State rk4_fixed(const std::function<State(State)>& f, State y, double t,
                       double h) {
    const auto n = static_cast<long long>(std::llround(t / h));
    for (long long i = 0; i < n; ++i) {
        const State a = f(y);
        const State b = f({y.k + 0.5 * h * a.k, y.c + 0.5 * h * a.c});
        const State c = f({y.k + 0.5 * h * b.k, y.c + 0.5 * h * b.c});
        const State d = f({y.k + h * c.k, y.c + h * c.c});
        y.k += h / 6.0 * (a.k + 2.0 * b.k + 2.0 * c.k + d.k);
        y.c += h / 6.0 * (a.c + 2.0 * b.c + 2.0 * c.c + d.c);
    }
    return y;
}

// Step-halving control: refine until two successive grids agree.
inline State rk4_adaptive(const std::function<State(State)>& f, State y0,
                          double t, double tol = 1e-10) {
    double h = t / 64.0;
    State prev = rk4_fixed(f, y0, t, h);
    for (int iter = 0; iter < 12; ++iter) {
        h *= 0.5;
        const State next = rk4_fixed(f, y0, t, h);
        if (std::abs(next.k - prev.k) < tol && std::abs(next.c - prev.c) < tol)
            return next;
        prev = next;
    }
    return prev;
}

// Gini by the raw pairwise definition, O(n^2).
inline double gini_bruteforce(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    double sum = 0.0, diff = 0.0;
    for (double x : xs) sum += x;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            diff += std::abs(xs[i] - xs[j]);
    return diff / (2.0 * n * n * (sum / n));
}

// Regularized incomplete gamma Q(a, x) via series / continued fraction.
inline double gammln(double x) { return std::lgamma(x); }

inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gammln(a));
}

inline double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gammln(a)) * h;
}

inline double gammq(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::domain_error("gammq: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

// Pearson chi-square goodness of fit of integer counts against Poisson(mean),
// pooling bins so every expected count is at least 5. Returns the p-value.
inline double chi_square_poisson_pvalue(const std::vector<long>& counts,
                                        double mean) {
    long max_count = 0;
    for (long c : counts) max_count = std::max(max_count, c);
    const double n = static_cast<double>(counts.size());

    std::vector<double> expected;
    std::vector<double> observed;
    double pmf = std::exp(-mean);  // P(0)
    double exp_acc = 0.0, obs_acc = 0.0, tail_prob = 1.0;
    for (long k = 0; k <= max_count; ++k) {
        if (k > 0) pmf *= mean / static_cast<double>(k);
        tail_prob -= pmf;
        exp_acc += n * pmf;
        long obs_k = 0;
        for (long c : counts) obs_k += (c == k) ? 1 : 0;
        obs_acc += static_cast<double>(obs_k);
        if (exp_acc >= 5.0) {
            expected.push_back(exp_acc);
            observed.push_back(obs_acc);
            exp_acc = 0.0;
            obs_acc = 0.0;
        }
    }
    // Everything beyond max_count plus any unflushed remainder.
    exp_acc += n * tail_prob;
    if (!expected.empty() && exp_acc < 5.0) {
        expected.back() += exp_acc;
        observed.back() += obs_acc;
    } else {
        expected.push_back(exp_acc);
        observed.push_back(obs_acc);
    }

    double stat = 0.0;
    for (std::size_t b = 0; b < expected.size(); ++b) {
        const double d = observed[b] - expected[b];
        stat += d * d / expected[b];
    }
    const double dof = static_cast<double>(expected.size()) - 1.0;
    return gammq(0.5 * dof, 0.5 * stat);
}

}  // namespace oracle
