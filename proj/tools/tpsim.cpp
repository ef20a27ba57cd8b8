// tpsim command line: run scenarios, sweep a parameter, list presets.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tpsim/outputs.hpp"
#include "tpsim/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void report(const tpsim::Scenario& sc,
            const std::vector<std::map<std::string, tpsim::SummaryStats>>& per_seed) {
    double mean_rho = 0.0, mean_k = 0.0, cv_k = 0.0;
    for (const auto& stats : per_seed) {
        mean_rho += stats.at("rho").mean;
        mean_k += stats.at("k").mean;
        cv_k += stats.at("k").cv;
    }
    const double n = static_cast<double>(per_seed.size());
    std::cout << sc.name << ": " << per_seed.size() << " seed(s), mean rho "
              << mean_rho / n << ", mean k " << mean_k / n << ", CV(k) "
              << cv_k / n << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agent-based simulator of time-preference interactions "
                 "coupled to Ramsey capital/consumption dynamics"};
    app.require_subcommand(1);

    std::string preset_name, config_path, out_dir = "out", vary;
    std::int64_t seed = -1;
    int seeds = 0, threads = 1;

    CLI::App* run_cmd = app.add_subcommand("run", "Run a preset or a config file");
    run_cmd->add_option("--preset", preset_name, "Built-in scenario name");
    run_cmd->add_option("--config", config_path, "Path to a JSON config");
    run_cmd->add_option("--seed", seed, "Override the base seed");
    run_cmd->add_option("--seeds", seeds, "Override the number of seeds");
    run_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    run_cmd->add_option("--threads", threads, "Worker threads per run")
        ->capture_default_str();

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Run a config once per value of one key");
    sweep_cmd->add_option("--config", config_path, "Path to a JSON config")
        ->required();
    sweep_cmd->add_option("--vary", vary, "key=v1,v2,... (dotted key)")->required();
    sweep_cmd->add_option("--seeds", seeds, "Override the number of seeds");
    sweep_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sweep_cmd->add_option("--threads", threads, "Worker threads per run")
        ->capture_default_str();

    CLI::App* presets_cmd = app.add_subcommand("presets", "List built-in scenarios");

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<tpsim::Scenario> scenarios;

        if (presets_cmd->parsed()) {
            for (const auto& name : tpsim::preset_names()) {
                const auto group = tpsim::preset(name);
                std::cout << name;
                if (group.size() > 1)
                    std::cout << " (" << group.size() << " cells)";
                const auto& ip = group.front().config.interaction;
                std::cout << ": eps_k=" << ip.eps_k << " eps_c=" << ip.eps_c
                          << " eps_rho=" << ip.eps_rho << " mode="
                          << (ip.mode == tpsim::InteractionMode::mixed
                                  ? "mixed"
                                  : "fixed")
                          << "\n";
            }
            return 0;
        }

        if (run_cmd->parsed()) {
            if (preset_name.empty() == config_path.empty()) {
                std::cerr << "run: give exactly one of --preset or --config\n";
                return 2;
            }
            scenarios = preset_name.empty()
                            ? std::vector{tpsim::parse_scenario(read_file(config_path))}
                            : tpsim::preset(preset_name);
        } else if (sweep_cmd->parsed()) {
            const auto eq = vary.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= vary.size()) {
                std::cerr << "sweep: --vary expects key=v1,v2,...\n";
                return 2;
            }
            const std::string key = vary.substr(0, eq);
            std::vector<std::string> values;
            std::string rest = vary.substr(eq + 1);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                const std::size_t comma = rest.find(',', pos);
                if (comma == std::string::npos) {
                    values.push_back(rest.substr(pos));
                    break;
                }
                values.push_back(rest.substr(pos, comma - pos));
                pos = comma + 1;
            }
            scenarios = tpsim::expand_sweep(read_file(config_path), key, values);
        }

        for (auto& sc : scenarios) {
            if (seed >= 0) sc.base_seed = static_cast<std::uint64_t>(seed);
            if (seeds > 0) sc.n_seeds = seeds;
            const auto per_seed = tpsim::run_scenario(sc, out_dir, threads);
            report(sc, per_seed);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
