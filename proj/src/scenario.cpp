#include "tpsim/scenario.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace tpsim {

using nlohmann::json;

namespace {

// Collects "unknown key" and type complaints during the walk so one error
// report covers the whole document.
struct Reader {
    std::vector<std::string> problems;

    void check_keys(const json& obj, const std::string& prefix,
                    std::initializer_list<const char*> allowed) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (std::find_if(allowed.begin(), allowed.end(),
                             [&](const char* a) { return it.key() == a; }) ==
                allowed.end())
                problems.push_back("unknown key '" + prefix + it.key() + "'");
        }
    }

    template <typename T>
    void fetch(const json& obj, const char* key, const std::string& prefix,
               T& out) {
        auto it = obj.find(key);
        if (it == obj.end()) return;
        try {
            out = it->get<T>();
        } catch (const json::exception&) {
            problems.push_back("key '" + prefix + key + "' has the wrong type");
        }
    }
};

Scenario defaults() {
    Scenario sc;
    sc.name = "custom";
    sc.n_seeds = 1;
    sc.base_seed = 1;
    // SimConfig, EconomyParams and InteractionParams defaults already carry
    // the standard parameterization; only the sampling list needs filling.
    sc.config.sample_agents.clear();
    return sc;
}

void fill_default_samples(SimConfig& cfg) {
    const int n = std::min(cfg.n_agents, 10);
    for (int i = 0; i < n; ++i) cfg.sample_agents.push_back(i);
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = text.empty() ? json::object() : json::parse(text);
    } catch (const json::exception& e) {
        throw config_error({std::string("config is not valid JSON: ") + e.what()});
    }
    if (!doc.is_object())
        throw config_error({"config document must be a JSON object"});

    Reader rd;
    Scenario sc = defaults();
    bool samples_given = false;

    rd.check_keys(doc, "",
                  {"name", "seeds", "base_seed", "schedule", "econ", "initial",
                   "interaction"});
    rd.fetch(doc, "name", "", sc.name);
    rd.fetch(doc, "seeds", "", sc.n_seeds);
    rd.fetch(doc, "base_seed", "", sc.base_seed);

    if (auto it = doc.find("schedule"); it != doc.end() && it->is_object()) {
        const json& s = *it;
        rd.check_keys(s, "schedule.",
                      {"n_agents", "dt", "t_p", "t_max", "sample_agents",
                       "sample_stride"});
        rd.fetch(s, "n_agents", "schedule.", sc.config.n_agents);
        rd.fetch(s, "dt", "schedule.", sc.config.dt);
        rd.fetch(s, "t_p", "schedule.", sc.config.t_p);
        rd.fetch(s, "t_max", "schedule.", sc.config.t_max);
        if (s.contains("sample_agents")) {
            samples_given = true;
            rd.fetch(s, "sample_agents", "schedule.", sc.config.sample_agents);
        }
        rd.fetch(s, "sample_stride", "schedule.", sc.config.sample_stride);
    } else if (it != doc.end()) {
        rd.problems.push_back("key 'schedule' must be an object");
    }

    if (auto it = doc.find("econ"); it != doc.end() && it->is_object()) {
        const json& e = *it;
        rd.check_keys(e, "econ.", {"alpha", "delta", "theta", "lambda", "kappa"});
        rd.fetch(e, "alpha", "econ.", sc.config.econ.alpha);
        rd.fetch(e, "delta", "econ.", sc.config.econ.delta);
        rd.fetch(e, "theta", "econ.", sc.config.econ.theta);
        rd.fetch(e, "lambda", "econ.", sc.config.econ.lambda);
        rd.fetch(e, "kappa", "econ.", sc.config.econ.kappa);
    } else if (it != doc.end()) {
        rd.problems.push_back("key 'econ' must be an object");
    }

    if (auto it = doc.find("initial"); it != doc.end() && it->is_object()) {
        const json& i = *it;
        rd.check_keys(i, "initial.", {"rho0", "u0"});
        rd.fetch(i, "rho0", "initial.", sc.config.rho0);
        rd.fetch(i, "u0", "initial.", sc.config.u0);
    } else if (it != doc.end()) {
        rd.problems.push_back("key 'initial' must be an object");
    }

    if (auto it = doc.find("interaction"); it != doc.end() && it->is_object()) {
        const json& n = *it;
        rd.check_keys(n, "interaction.",
                      {"eps_k", "eps_c", "eps_rho", "beta_k", "beta_c",
                       "rho_norm", "mode"});
        InteractionParams& ip = sc.config.interaction;
        rd.fetch(n, "eps_k", "interaction.", ip.eps_k);
        rd.fetch(n, "eps_c", "interaction.", ip.eps_c);
        rd.fetch(n, "eps_rho", "interaction.", ip.eps_rho);
        rd.fetch(n, "beta_k", "interaction.", ip.beta_k);
        rd.fetch(n, "beta_c", "interaction.", ip.beta_c);
        rd.fetch(n, "rho_norm", "interaction.", ip.rho_norm);
        if (n.contains("mode")) {
            std::string mode;
            rd.fetch(n, "mode", "interaction.", mode);
            if (mode == "fixed")
                ip.mode = InteractionMode::fixed;
            else if (mode == "mixed")
                ip.mode = InteractionMode::mixed;
            else
                rd.problems.push_back(
                    "key 'interaction.mode' must be \"fixed\" or \"mixed\"");
        }
    } else if (it != doc.end()) {
        rd.problems.push_back("key 'interaction' must be an object");
    }

    if (!samples_given) fill_default_samples(sc.config);
    if (sc.n_seeds < 1) rd.problems.push_back("'seeds' must be >= 1");

    auto cfg_problems = sc.config.violations();
    rd.problems.insert(rd.problems.end(), cfg_problems.begin(),
                       cfg_problems.end());
    if (!rd.problems.empty()) throw config_error(std::move(rd.problems));
    return sc;
}

std::string serialize_scenario(const Scenario& sc) {
    const SimConfig& c = sc.config;
    json doc = {
        {"name", sc.name},
        {"seeds", sc.n_seeds},
        {"base_seed", sc.base_seed},
        {"schedule",
         {{"n_agents", c.n_agents},
          {"dt", c.dt},
          {"t_p", c.t_p},
          {"t_max", c.t_max},
          {"sample_agents", c.sample_agents},
          {"sample_stride", c.sample_stride}}},
        {"econ",
         {{"alpha", c.econ.alpha},
          {"delta", c.econ.delta},
          {"theta", c.econ.theta},
          {"lambda", c.econ.lambda},
          {"kappa", c.econ.kappa}}},
        {"initial", {{"rho0", c.rho0}, {"u0", c.u0}}},
        {"interaction",
         {{"eps_k", c.interaction.eps_k},
          {"eps_c", c.interaction.eps_c},
          {"eps_rho", c.interaction.eps_rho},
          {"beta_k", c.interaction.beta_k},
          {"beta_c", c.interaction.beta_c},
          {"rho_norm", c.interaction.rho_norm},
          {"mode",
           c.interaction.mode == InteractionMode::mixed ? "mixed" : "fixed"}}}};
    return doc.dump(2);
}

namespace {

Scenario named_cell(const std::string& name, double eps_k, double eps_c,
                    double eps_rho, InteractionMode mode) {
    Scenario sc = parse_scenario("");
    sc.name = name;
    sc.n_seeds = 10;
    sc.config.interaction.eps_k = eps_k;
    sc.config.interaction.eps_c = eps_c;
    sc.config.interaction.eps_rho = eps_rho;
    sc.config.interaction.mode = mode;
    return sc;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"baseline", "fig2", "fig4", "fig6-grid", "fig9e", "fig9g"};
}

std::vector<Scenario> preset(const std::string& name) {
    if (name == "baseline")
        return {named_cell("baseline", 0.0, 0.0, 0.0, InteractionMode::fixed)};
    if (name == "fig2")
        return {named_cell("fig2", 0.1, 0.0, 0.0, InteractionMode::fixed)};
    if (name == "fig4")
        return {named_cell("fig4", 0.0, 0.1, 0.0, InteractionMode::fixed)};
    if (name == "fig9e")
        return {named_cell("fig9e", 0.3, 0.3, 0.0, InteractionMode::mixed)};
    if (name == "fig9g")
        return {named_cell("fig9g", 0.3, 0.3, 0.1, InteractionMode::mixed)};
    if (name == "fig6-grid") {
        std::vector<Scenario> grid;
        for (double er : {0.0, 0.1}) {
            const std::string suffix = er == 0.0 ? "" : "-er0.1";
            for (double e : {0.1, 0.2, 0.3}) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "ek%.1f%s", e, suffix.c_str());
                grid.push_back(named_cell(buf, e, 0.0, er, InteractionMode::fixed));
            }
            for (double e : {0.1, 0.2, 0.3}) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "ec%.1f%s", e, suffix.c_str());
                grid.push_back(named_cell(buf, 0.0, e, er, InteractionMode::fixed));
            }
        }
        return grid;
    }
    throw config_error({"unknown preset '" + name + "'"});
}

std::vector<Scenario> expand_sweep(const std::string& base_text,
                                   const std::string& key,
                                   const std::vector<std::string>& values) {
    if (values.empty()) throw config_error({"sweep: no values given"});
    json base;
    try {
        base = base_text.empty() ? json::object() : json::parse(base_text);
    } catch (const json::exception& e) {
        throw config_error({std::string("config is not valid JSON: ") + e.what()});
    }

    // Dotted key -> nested object path.
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        const std::size_t dot = key.find('.', pos);
        if (dot == std::string::npos) {
            parts.push_back(key.substr(pos));
            break;
        }
        parts.push_back(key.substr(pos, dot - pos));
        pos = dot + 1;
    }
    if (parts.empty() || parts.front().empty())
        throw config_error({"sweep: empty key"});

    std::vector<Scenario> cells;
    for (const auto& value : values) {
        json doc = base;
        json* node = &doc;
        for (std::size_t p = 0; p + 1 < parts.size(); ++p)
            node = &(*node)[parts[p]];
        try {
            (*node)[parts.back()] = json::parse(value);
        } catch (const json::exception&) {
            (*node)[parts.back()] = value;  // fall back to a string literal
        }
        Scenario sc = parse_scenario(doc.dump());
        sc.name = key + "=" + value;
        cells.push_back(std::move(sc));
    }
    return cells;
}

}  // namespace tpsim
