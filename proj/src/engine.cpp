#include "tpsim/engine.hpp"

#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tpsim {

namespace {

// Static split of [0, n) across worker threads; each index is touched by
// exactly one thread, so results cannot depend on the thread count. The
// first exception from any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(long long n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    const long long workers = std::min<long long>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::mutex mu;
    std::exception_ptr first_error;
    for (long long w = 0; w < workers; ++w) {
        const long long lo = n * w / workers;
        const long long hi = n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn, &mu, &first_error] {
            try {
                for (long long i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<std::string> SimConfig::violations() const {
    std::vector<std::string> v;
    if (n_agents < 2) v.push_back("n_agents must be >= 2");
    if (!(dt > 0.0)) v.push_back("dt must be > 0");
    if (!(t_p > 0.0)) v.push_back("t_p must be > 0");
    if (!(t_max > 0.0)) v.push_back("t_max must be > 0");
    if (dt > 0.0 && t_p > 0.0) {
        const double ratio = t_p / dt;
        const double rounded = std::round(ratio);
        if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * ratio)
            v.push_back("t_p must be a positive integer multiple of dt");
    }
    if (!(rho0 > 0.0)) v.push_back("rho0 must be > 0");
    if (sample_stride < 1) v.push_back("sample_stride must be >= 1");
    for (int id : sample_agents)
        if (id < 0 || id >= n_agents)
            v.push_back("sample_agents entry " + std::to_string(id) +
                        " is outside [0, n_agents)");
    auto econ_v = econ.violations();
    v.insert(v.end(), econ_v.begin(), econ_v.end());
    auto inter_v = interaction.violations();
    v.insert(v.end(), inter_v.begin(), inter_v.end());
    return v;
}

Simulation::Simulation(const SimConfig& config, int threads)
    : config_(config), threads_(threads < 1 ? 1 : threads), rng_(config.seed) {
    auto v = config_.violations();
    if (!v.empty()) throw config_error(std::move(v));

    steps_per_event_ = std::llround(config_.t_p / config_.dt);
    // ceil(t_max/dt), guarded against the quotient landing a hair above an
    // integer and adding a spurious step.
    n_steps_ = static_cast<long long>(
        std::ceil(config_.t_max / config_.dt - 1e-9));

    const SteadyState s0 = saddle_point(config_.rho0, config_.econ);
    const double mu0 = stable_eigenvalue(config_.rho0, s0, config_.econ);
    const double u_at_saddle = instantaneous_utility(s0.c, config_.econ.theta);

    agents_.resize(static_cast<std::size_t>(config_.n_agents));
    caches_.resize(agents_.size());
    for (std::size_t i = 0; i < agents_.size(); ++i) {
        AgentState& a = agents_[i];
        a.id = static_cast<int>(i);
        a.rho = config_.rho0;
        a.path = {s0.k, s0.c, s0.k, s0.c, mu0, 0.0};
        a.utility = {config_.u0, 0.0};
        a.n_interactions = 0;
        AgentCache& cc = caches_[i];
        cc.decay = 1.0;
        cc.step_decay = std::exp(mu0 * config_.dt);
        cc.disc = 1.0;  // e^(-rho*0)
        cc.step_disc = std::exp(-config_.rho0 * config_.dt);
        cc.last_integrand = u_at_saddle;
        cc.fresh = false;
    }

    series_.resize(config_.sample_agents.size());
    record_samples(0.0);
}

void Simulation::do_event(double t) {
    const auto n = static_cast<std::uint64_t>(config_.n_agents);
    const int i = static_cast<int>(rng_.next_below(n));
    int j = static_cast<int>(rng_.next_below(n - 1));
    if (j >= i) ++j;

    InteractionParams eff = config_.interaction;
    char mode = 'f';
    if (config_.interaction.mode == InteractionMode::mixed) {
        const bool capital = rng_.next_below(2) == 0;
        eff = mixed_branch(config_.interaction, capital);
        mode = capital ? 'k' : 'c';
    }

    AgentState& ai = agents_[static_cast<std::size_t>(i)];
    AgentState& aj = agents_[static_cast<std::size_t>(j)];

    // The kernel compares the agents' positions on their current paths.
    const PathPoint si = path_eval(ai.path, t);
    const PathPoint sj = path_eval(aj.path, t);

    const InteractionResult res =
        interact(ai.rho, aj.rho, si.k, sj.k, si.c, sj.c, eff);
    floor_hits_ += (res.floored_i ? 1 : 0) + (res.floored_j ? 1 : 0);

    events_.push_back({step_index_, t, i, j, ai.rho, res.rho_i, aj.rho,
                       res.rho_j, mode});

    // The new path re-anchors capital at the saddle the agent had been
    // approaching (its current target), and the decay factor stays
    // referenced to the run origin. An update that left the rate bitwise
    // unchanged (possible only when every strength is zero) rebuilds the
    // identical path, so it is skipped.
    if (res.rho_i != ai.rho) apply_retarget(i, res.rho_i, ai.path.k_target, t);
    if (res.rho_j != aj.rho) apply_retarget(j, res.rho_j, aj.path.k_target, t);
    ++ai.n_interactions;
    ++aj.n_interactions;
}

void Simulation::apply_retarget(int agent_id, double rho_new, double anchor_k,
                                double t) {
    AgentState& a = agents_[static_cast<std::size_t>(agent_id)];
    try {
        // t_anchor = 0: the whole run shares one clock, so the decay weight
        // on the anchor-target gap is e^(mu*t) in absolute time.
        a.path = retarget_path(anchor_k, rho_new, 0.0, config_.econ);
    } catch (const model_error& e) {
        throw model_error("agent " + std::to_string(agent_id) + " at step " +
                          std::to_string(step_index_) + ": " + e.what());
    }
    a.rho = rho_new;

    AgentCache& cc = caches_[static_cast<std::size_t>(agent_id)];
    cc.decay = std::exp(a.path.mu * t);
    cc.step_decay = std::exp(a.path.mu * config_.dt);
    // Absolute-time discounting: right after a change at time t the factor
    // is e^(-rho_new*t), a discontinuous drop in the discount weight.
    cc.disc = std::exp(-rho_new * t);
    cc.step_disc = std::exp(-rho_new * config_.dt);
    cc.fresh = true;
}

void Simulation::advance_agents(double t) {
    const double half_dt = 0.5 * config_.dt;
    const double theta = config_.econ.theta;
    for (std::size_t idx = 0; idx < agents_.size(); ++idx) {
        AgentState& a = agents_[idx];
        AgentCache& cc = caches_[idx];
        if (cc.fresh) {
            cc.fresh = false;  // factors were recomputed at this very t
        } else {
            cc.decay *= cc.step_decay;
            cc.disc *= cc.step_disc;
        }
        const double c = a.path.c_target + cc.decay * (a.path.c_anchor - a.path.c_target);
        const double f = cc.disc * instantaneous_utility(c, theta);
        a.utility.total += half_dt * (cc.last_integrand + f);
        a.utility.t_last = t;
        cc.last_integrand = f;
    }
}

void Simulation::record_samples(double t) {
    for (std::size_t s = 0; s < series_.size(); ++s) {
        const AgentState& a =
            agents_[static_cast<std::size_t>(config_.sample_agents[s])];
        const PathPoint p = path_eval(a.path, t);
        series_[s].push_back({step_index_, t, a.rho, p.k, p.c, a.utility.total});
    }
}

void Simulation::step() {
    ++step_index_;
    const double t = static_cast<double>(step_index_) * config_.dt;
    if (step_index_ % steps_per_event_ == 0) do_event(t);
    advance_agents(t);
    if (!series_.empty() && step_index_ % config_.sample_stride == 0)
        record_samples(t);
}

void Simulation::run_to_end() {
    while (step_index_ < n_steps_) step();
}

RunResult Simulation::result() const {
    if (step_index_ != n_steps_)
        throw std::logic_error("result: simulation has not reached t_max");
    const double t_end = static_cast<double>(n_steps_) * config_.dt;

    RunResult r;
    r.config = config_;
    r.events = events_;
    r.series = series_;
    r.floor_hits = floor_hits_;
    r.agents.resize(agents_.size());
    parallel_for(static_cast<long long>(agents_.size()), threads_,
                 [&](long long i) {
                     const AgentState& a = agents_[static_cast<std::size_t>(i)];
                     const PathPoint p = path_eval(a.path, t_end);
                     const double tail = tail_utility(a.path, a.rho, t_end,
                                                      config_.econ.theta,
                                                      config_.dt);
                     r.agents[static_cast<std::size_t>(i)] = {
                         a.id, a.rho, p.k, p.c, a.utility.total + tail,
                         a.n_interactions};
                 });
    return r;
}

RunResult run(const SimConfig& config, int threads) {
    Simulation sim(config, threads);
    sim.run_to_end();
    return sim.result();
}

}  // namespace tpsim
