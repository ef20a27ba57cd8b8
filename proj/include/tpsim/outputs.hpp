#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tpsim/engine.hpp"
#include "tpsim/metrics.hpp"
#include "tpsim/scenario.hpp"

// File outputs. Every float is emitted with 17 significant digits so the
// files reproduce the run bit-for-bit. Fixed schemas:
//   agents.csv      agent_id,rho_final,k_final,c_final,utility,n_interactions
//   events.csv      step,t,i,j,rho_i_old,rho_i_new,rho_j_old,rho_j_new,mode
//   timeseries.csv  agent_id,step,t,rho,k,c,utility
//   histogram_X.csv bin_left,bin_right,count        (X in rho, k, c, U)
//   summary.json    resolved config + seed echo, per-variable statistics
//   aggregate.json  across-seed means and standard errors per variable

namespace tpsim {

// Per-variable final cross sections of a run, keyed "rho", "k", "c", "U".
std::map<std::string, std::vector<double>> final_variables(const RunResult& r);

void write_agents_csv(const std::filesystem::path& file, const RunResult& r);
void write_events_csv(const std::filesystem::path& file, const RunResult& r);
void write_timeseries_csv(const std::filesystem::path& file, const RunResult& r);
void write_histogram_csv(const std::filesystem::path& file, const Histogram& h);

std::string summary_json(const Scenario& scenario, const RunResult& r,
                         const std::map<std::string, SummaryStats>& stats);

// Across-seed aggregate: for each variable the mean of per-seed means, mean
// CV, mean Gini, mean skewness/kurtosis, each with its standard error.
std::string aggregate_json(const Scenario& scenario,
                           const std::vector<std::map<std::string, SummaryStats>>& per_seed);

// Run every seed of a scenario, writing
//   <out_dir>/<scenario.name>/seed_<seed>/{agents.csv, events.csv,
//       timeseries.csv, histogram_{rho,k,c,U}.csv, summary.json}
// and <out_dir>/<scenario.name>/aggregate.json. Returns the per-seed stats
// that went into the aggregate.
std::vector<std::map<std::string, SummaryStats>> run_scenario(
    const Scenario& scenario, const std::filesystem::path& out_dir,
    int threads = 1);

}  // namespace tpsim
