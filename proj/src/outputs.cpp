#include "tpsim/outputs.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace tpsim {

using nlohmann::json;

namespace {

struct File {
    explicit File(const std::filesystem::path& p)
        : f(std::fopen(p.string().c_str(), "wb")), path(p) {
        if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
    }
    ~File() {
        if (f) std::fclose(f);
    }
    File(const File&) = delete;
    File& operator=(const File&) = delete;
    std::FILE* f;
    std::filesystem::path path;
};

const char* mode_name(char m) {
    switch (m) {
        case 'k': return "mixed_k";
        case 'c': return "mixed_c";
        default: return "fixed";
    }
}

json stats_json(const SummaryStats& s) {
    json j = {{"mean", s.mean},         {"cv", s.cv},
              {"skewness", s.skewness}, {"kurtosis", s.kurtosis},
              {"n", s.n},
              {"histogram",
               {{"edges", s.histogram.edges}, {"counts", s.histogram.counts}}}};
    if (s.gini)
        j["gini"] = *s.gini;
    else
        j["gini"] = nullptr;
    return j;
}

// Mean and standard error of the mean across seeds.
json mean_se(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double se = xs.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return {{"mean", mean}, {"se", se}};
}

}  // namespace

std::map<std::string, std::vector<double>> final_variables(const RunResult& r) {
    std::map<std::string, std::vector<double>> vars;
    auto& rho = vars["rho"];
    auto& k = vars["k"];
    auto& c = vars["c"];
    auto& u = vars["U"];
    for (const auto& a : r.agents) {
        rho.push_back(a.rho);
        k.push_back(a.k);
        c.push_back(a.c);
        u.push_back(a.utility);
    }
    return vars;
}

void write_agents_csv(const std::filesystem::path& file, const RunResult& r) {
    File out(file);
    std::fprintf(out.f, "agent_id,rho_final,k_final,c_final,utility,n_interactions\n");
    for (const auto& a : r.agents)
        std::fprintf(out.f, "%d,%.17g,%.17g,%.17g,%.17g,%ld\n", a.id, a.rho,
                     a.k, a.c, a.utility, a.n_interactions);
}

void write_events_csv(const std::filesystem::path& file, const RunResult& r) {
    File out(file);
    std::fprintf(out.f, "step,t,i,j,rho_i_old,rho_i_new,rho_j_old,rho_j_new,mode\n");
    for (const auto& e : r.events)
        std::fprintf(out.f, "%lld,%.17g,%d,%d,%.17g,%.17g,%.17g,%.17g,%s\n",
                     e.step, e.t, e.i, e.j, e.rho_i_old, e.rho_i_new,
                     e.rho_j_old, e.rho_j_new, mode_name(e.mode));
}

void write_timeseries_csv(const std::filesystem::path& file, const RunResult& r) {
    File out(file);
    std::fprintf(out.f, "agent_id,step,t,rho,k,c,utility\n");
    for (std::size_t s = 0; s < r.series.size(); ++s) {
        const int id = r.config.sample_agents[s];
        for (const auto& p : r.series[s])
            std::fprintf(out.f, "%d,%lld,%.17g,%.17g,%.17g,%.17g,%.17g\n", id,
                         p.step, p.t, p.rho, p.k, p.c, p.utility);
    }
}

void write_histogram_csv(const std::filesystem::path& file, const Histogram& h) {
    File out(file);
    std::fprintf(out.f, "bin_left,bin_right,count\n");
    for (std::size_t b = 0; b < h.counts.size(); ++b)
        std::fprintf(out.f, "%.17g,%.17g,%lld\n", h.edges[b], h.edges[b + 1],
                     h.counts[b]);
}

std::string summary_json(const Scenario& scenario, const RunResult& r,
                         const std::map<std::string, SummaryStats>& stats) {
    json doc;
    doc["scenario"] = scenario.name;
    doc["seed"] = r.config.seed;
    doc["config"] = json::parse(serialize_scenario(
        Scenario{scenario.name, r.config, scenario.n_seeds, scenario.base_seed}));
    doc["events"] = r.events.size();
    doc["floor_hits"] = r.floor_hits;
    json js;
    for (const auto& [name, s] : stats) js[name] = stats_json(s);
    doc["stats"] = js;
    return doc.dump(2);
}

std::string aggregate_json(
    const Scenario& scenario,
    const std::vector<std::map<std::string, SummaryStats>>& per_seed) {
    if (per_seed.empty())
        throw std::invalid_argument("aggregate_json: no per-seed stats");
    json vars;
    for (const auto& [name, first] : per_seed.front()) {
        (void)first;
        std::vector<double> means, cvs, ginis, skews, kurts;
        bool have_gini = true;
        for (const auto& seed_stats : per_seed) {
            const SummaryStats& s = seed_stats.at(name);
            means.push_back(s.mean);
            cvs.push_back(s.cv);
            skews.push_back(s.skewness);
            kurts.push_back(s.kurtosis);
            if (s.gini)
                ginis.push_back(*s.gini);
            else
                have_gini = false;
        }
        json v = {{"mean", mean_se(means)},
                  {"cv", mean_se(cvs)},
                  {"skewness", mean_se(skews)},
                  {"kurtosis", mean_se(kurts)}};
        v["gini"] = have_gini ? mean_se(ginis) : json(nullptr);
        vars[name] = v;
    }
    json doc = {{"scenario", scenario.name},
                {"n_seeds", scenario.n_seeds},
                {"base_seed", scenario.base_seed},
                {"variables", vars}};
    return doc.dump(2);
}

std::vector<std::map<std::string, SummaryStats>> run_scenario(
    const Scenario& scenario, const std::filesystem::path& out_dir,
    int threads) {
    namespace fs = std::filesystem;
    const fs::path root = out_dir / scenario.name;
    fs::create_directories(root);

    std::vector<std::map<std::string, SummaryStats>> per_seed;
    for (int s = 0; s < scenario.n_seeds; ++s) {
        SimConfig cfg = scenario.config;
        cfg.seed = scenario.base_seed + static_cast<std::uint64_t>(s);
        const RunResult r = run(cfg, threads);

        const fs::path dir = root / ("seed_" + std::to_string(cfg.seed));
        fs::create_directories(dir);
        write_agents_csv(dir / "agents.csv", r);
        write_events_csv(dir / "events.csv", r);
        write_timeseries_csv(dir / "timeseries.csv", r);

        std::map<std::string, SummaryStats> stats;
        for (const auto& [name, values] : final_variables(r))
            stats[name] = summary(values);
        write_histogram_csv(dir / "histogram_rho.csv", stats.at("rho").histogram);
        write_histogram_csv(dir / "histogram_k.csv", stats.at("k").histogram);
        write_histogram_csv(dir / "histogram_c.csv", stats.at("c").histogram);
        write_histogram_csv(dir / "histogram_U.csv", stats.at("U").histogram);

        File summary_out(dir / "summary.json");
        const std::string text = summary_json(scenario, r, stats);
        std::fwrite(text.data(), 1, text.size(), summary_out.f);

        per_seed.push_back(std::move(stats));
    }

    File agg_out(root / "aggregate.json");
    const std::string text = aggregate_json(scenario, per_seed);
    std::fwrite(text.data(), 1, text.size(), agg_out.f);
    return per_seed;
}

}  // namespace tpsim
