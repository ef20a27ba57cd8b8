#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpsim/econ.hpp"
#include "tpsim/errors.hpp"
#include "tpsim/interaction.hpp"
#include "tpsim/rng.hpp"
#include "tpsim/utility.hpp"

// The simulation loop. N agents start at the saddle point of a common
// initial discount rate. Time advances in steps of dt; once per interaction
// period t_p a uniformly random pair meets and both agents' discount rates
// are updated from their current path positions. Each participant's path is
// then rebuilt toward the saddle of its new rate, with the capital anchor at
// the saddle it had been approaching and the exponential decay referenced to
// the run origin, i.e. k(t) = k*_new + e^(mu*t) (k*_old - k*_new) in
// absolute time, consumption likewise from its stable-arm jump value. Every
// agent accumulates discounted utility each step; at the horizon the
// infinite tail is added with rho frozen at its final value.
//
// Determinism contract: a run is a pure function of (config, seed). All
// randomness is consumed on the serial event path in a fixed order per
// event: pair index i uniform in [0,N), then j uniform in [0,N-1) mapped to
// skip i, then (mixed mode only) one coin. Per-agent work between events
// never touches the generator, so thread count does not affect results.

namespace tpsim {

struct SimConfig {
    int n_agents = 1000;
    double dt = 1.0 / 8760.0;   // step, years (hourly)
    double t_p = 1.0 / 365.0;   // interaction period, years (daily)
    double t_max = 10.0;        // horizon, years
    double rho0 = 0.223;        // initial discount rate, all agents
    double u0 = 0.0;            // initial utility
    EconomyParams econ;
    InteractionParams interaction;
    std::uint64_t seed = 1;
    std::vector<int> sample_agents;  // agents with time-series capture
    int sample_stride = 24;          // steps between samples

    // Empty when valid; otherwise one message per violated constraint.
    std::vector<std::string> violations() const;
};

struct AgentState {
    int id = 0;
    double rho = 0.0;
    AdjustmentPath path;
    UtilityAccumulator utility;
    long n_interactions = 0;
};

struct EventRecord {
    long long step = 0;
    double t = 0.0;
    int i = 0;
    int j = 0;
    double rho_i_old = 0.0, rho_i_new = 0.0;
    double rho_j_old = 0.0, rho_j_new = 0.0;
    char mode = 'f';  // 'f' fixed; 'k'/'c' the branch chosen in mixed mode
};

struct SamplePoint {
    long long step = 0;
    double t = 0.0;
    double rho = 0.0, k = 0.0, c = 0.0, utility = 0.0;
};

struct AgentResult {
    int id = 0;
    double rho = 0.0;      // rho at the horizon
    double k = 0.0;        // k(t_max)
    double c = 0.0;        // c(t_max)
    double utility = 0.0;  // lifetime utility including the infinite tail
    long n_interactions = 0;
};

struct RunResult {
    SimConfig config;  // resolved config echo; config.seed is the run seed
    std::vector<AgentResult> agents;
    std::vector<EventRecord> events;
    std::vector<std::vector<SamplePoint>> series;  // parallel to sample_agents
    long long floor_hits = 0;  // times the rho floor clamped an update
};

class Simulation {
public:
    // Validates the config (throws config_error listing every violation) and
    // puts all agents at the rho0 saddle with utility u0.
    explicit Simulation(const SimConfig& config, int threads = 1);

    // Advance one step: handle the interaction event if this is an event
    // step, then accumulate every agent's utility over [t-dt, t]. The
    // trapezoid endpoints of an interacting agent straddle its jump: the
    // left endpoint is on the pre-event path, the right on the new one.
    void step();

    void run_to_end();

    // After the final step: adds each agent's infinite-horizon tail and
    // gathers the outputs. Call once.
    RunResult result() const;

    long long step_index() const { return step_index_; }
    long long total_steps() const { return n_steps_; }
    long long steps_per_event() const { return steps_per_event_; }
    double time() const { return static_cast<double>(step_index_) * config_.dt; }
    const std::vector<AgentState>& agents() const { return agents_; }
    const std::vector<EventRecord>& events() const { return events_; }
    long long floor_hits() const { return floor_hits_; }

private:
    // Per-agent recurrence state for the utility integrand. The exponential
    // factors are marched multiplicatively between events (one multiply per
    // step instead of one exp) and recomputed exactly at each retarget.
    struct AgentCache {
        double decay = 1.0;           // e^(mu*(t - t_anchor))
        double step_decay = 1.0;      // e^(mu*dt)
        double disc = 1.0;            // e^(-rho*t)
        double step_disc = 1.0;       // e^(-rho*dt)
        double last_integrand = 0.0;  // e^(-rho*t) u(c(t)) at the prior step
        bool fresh = false;           // factors already sit at the current t
    };

    void do_event(double t);
    void apply_retarget(int agent_id, double rho_new, double anchor_k, double t);
    void advance_agents(double t);
    void record_samples(double t);

    SimConfig config_;
    int threads_ = 1;
    Rng rng_;
    long long n_steps_ = 0;
    long long steps_per_event_ = 0;
    long long step_index_ = 0;
    long long floor_hits_ = 0;
    std::vector<AgentState> agents_;
    std::vector<AgentCache> caches_;
    std::vector<EventRecord> events_;
    std::vector<std::vector<SamplePoint>> series_;
};

// Run a full simulation. `threads` parallelizes only per-agent work (the
// horizon tails); results are identical for any thread count.
RunResult run(const SimConfig& config, int threads = 1);

}  // namespace tpsim
