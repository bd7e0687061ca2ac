#include "eulerblowup/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace eb {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

double require_number(const json& obj, const std::string& where,
                      const std::string& key) {
    if (!obj.contains(key))
        throw ConfigError("missing key '" + key + "' in " + where);
    if (!obj[key].is_number())
        throw ConfigError("key '" + key + "' in " + where + " must be a number");
    return obj[key].get<double>();
}

double number_or(const json& obj, const std::string& where,
                 const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        throw ConfigError("key '" + key + "' in " + where + " must be a number");
    return obj[key].get<double>();
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(root, "config",
                   {"case", "gas", "weight", "data", "horizon", "solver",
                    "seed", "phantom_budget", "out_dir"});

    ScenarioConfig sc;

    if (!root.contains("case") || !root["case"].is_string())
        throw ConfigError("config needs \"case\": \"I\" or \"II\"");
    sc.case_label = root["case"].get<std::string>();
    if (sc.case_label != "I" && sc.case_label != "II")
        throw ConfigError("\"case\" must be \"I\" or \"II\"");

    if (!root.contains("gas") || !root["gas"].is_object())
        throw ConfigError("config needs a \"gas\" object");
    const json& gas = root["gas"];
    reject_unknown(gas, "gas", {"n", "gamma"});
    const double n_raw = require_number(gas, "gas", "n");
    if (n_raw != static_cast<int>(n_raw) || n_raw < 1)
        throw ConfigError("gas.n must be a positive integer");
    const double gamma = require_number(gas, "gas", "gamma");
    if (!(gamma > 1.0)) throw ConfigError("gas.gamma must exceed 1");
    sc.gas = GasParameters{static_cast<int>(n_raw), gamma};

    if (!root.contains("weight") || !root["weight"].is_object())
        throw ConfigError("config needs a \"weight\" object");
    const json& weight = root["weight"];
    reject_unknown(weight, "weight", {"R", "k"});
    sc.weight_R = require_number(weight, "weight", "R");
    sc.weight_k = require_number(weight, "weight", "k");
    if (!(sc.weight_R > 0.0)) throw ConfigError("weight.R must be positive");
    if (!(sc.weight_k > sc.gas.n))
        throw ConfigError("weight.k must exceed gas.n");

    if (!root.contains("data") || !root["data"].is_object())
        throw ConfigError("config needs a \"data\" object");
    const json& data = root["data"];
    if (!data.contains("type") || !data["type"].is_string())
        throw ConfigError("data needs a \"type\"");
    const std::string type = data["type"].get<std::string>();
    if (type == "exact") {
        reject_unknown(data, "data", {"type", "a0"});
        sc.kind = DataKind::exact;
        sc.a0 = number_or(data, "data", "a0", 0.0);
        if (sc.gas.n != 1 || sc.gas.gamma != 3.0)
            throw ConfigError(
                "exact data exist only for n = 1, gamma = 3");
        if (sc.case_label != "I")
            throw ConfigError("exact data are Case I data");
    } else if (type == "case2") {
        reject_unknown(data, "data",
                       {"type", "rho_bar", "p_bar", "R0", "a_rho", "a_v", "a_p"});
        sc.kind = DataKind::case2;
        sc.rho_bar = require_number(data, "data", "rho_bar");
        sc.p_bar = require_number(data, "data", "p_bar");
        sc.R0 = require_number(data, "data", "R0");
        sc.a_rho = number_or(data, "data", "a_rho", 0.0);
        sc.a_v = number_or(data, "data", "a_v", 0.0);
        sc.a_p = number_or(data, "data", "a_p", 0.0);
        if (!(sc.rho_bar > 0.0) || !(sc.p_bar > 0.0))
            throw ConfigError("case2 background must be positive");
        if (!(sc.R0 > 0.0)) throw ConfigError("case2 R0 must be positive");
        if (sc.rho_bar + std::min(0.0, sc.a_rho) <= 0.0 ||
            sc.p_bar + std::min(0.0, sc.a_p) <= 0.0)
            throw ConfigError("case2 bump amplitudes break positivity");
        if (sc.case_label != "II")
            throw ConfigError("case2 data are Case II data");
        const double plateau = sc.weight_R * (sc.weight_k - 1.0) / sc.weight_k;
        if (!(sc.R0 < plateau))
            throw ConfigError(
                "case2 needs R0 < (k-1)R/k so the perturbation starts inside "
                "the weight plateau");
    } else if (type == "file") {
        reject_unknown(data, "data", {"type", "path"});
        sc.kind = DataKind::field_file;
        if (!data.contains("path") || !data["path"].is_string())
            throw ConfigError("file data needs a \"path\"");
        sc.field_path = data["path"].get<std::string>();
        if (sc.case_label != "I")
            throw ConfigError("file data are Case I data");
    } else {
        throw ConfigError("data.type must be \"exact\", \"case2\" or \"file\"");
    }

    sc.horizon = number_or(root, "config", "horizon", 1.0);
    if (!(sc.horizon > 0.0)) throw ConfigError("horizon must be positive");

    if (root.contains("solver")) {
        if (!root["solver"].is_object())
            throw ConfigError("\"solver\" must be an object");
        const json& sol = root["solver"];
        reject_unknown(sol, "solver", {"cells", "cfl", "x_min", "x_max"});
        SolverConfig cfg;
        const double cells = number_or(sol, "solver", "cells", cfg.cells);
        if (cells != static_cast<int>(cells) || cells < 16)
            throw ConfigError("solver.cells must be an integer >= 16");
        cfg.cells = static_cast<int>(cells);
        cfg.cfl = number_or(sol, "solver", "cfl", cfg.cfl);
        if (!(cfg.cfl > 0.0) || cfg.cfl > 0.9)
            throw ConfigError("solver.cfl must lie in (0, 0.9]");
        cfg.x_min = number_or(sol, "solver", "x_min", cfg.x_min);
        cfg.x_max = number_or(sol, "solver", "x_max", cfg.x_max);
        if (!(cfg.x_max > cfg.x_min))
            throw ConfigError("solver domain must have x_max > x_min");
        if (cfg.x_min > -sc.weight_R || cfg.x_max < sc.weight_R)
            throw ConfigError("solver domain must contain [-R, R]");
        sc.solver = cfg;
    }

    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned())
            throw ConfigError("seed must be a nonnegative integer");
        sc.seed = root["seed"].get<std::uint64_t>();
    }
    if (root.contains("phantom_budget")) {
        const double b = require_number(root, "config", "phantom_budget");
        if (b != static_cast<int>(b) || b < 0)
            throw ConfigError("phantom_budget must be a nonnegative integer");
        sc.phantom_budget = static_cast<int>(b);
    }
    if (root.contains("out_dir")) {
        if (!root["out_dir"].is_string())
            throw ConfigError("out_dir must be a string");
        sc.out_dir = root["out_dir"].get<std::string>();
    }
    return sc;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read config file: " + path);
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const ScenarioConfig& sc) {
    json root;
    root["case"] = sc.case_label;
    root["gas"] = {{"n", sc.gas.n}, {"gamma", sc.gas.gamma}};
    root["weight"] = {{"R", sc.weight_R}, {"k", sc.weight_k}};
    switch (sc.kind) {
        case DataKind::exact:
            root["data"] = {{"type", "exact"}, {"a0", sc.a0}};
            break;
        case DataKind::case2:
            root["data"] = {{"type", "case2"}, {"rho_bar", sc.rho_bar},
                            {"p_bar", sc.p_bar},  {"R0", sc.R0},
                            {"a_rho", sc.a_rho},  {"a_v", sc.a_v},
                            {"a_p", sc.a_p}};
            break;
        case DataKind::field_file:
            root["data"] = {{"type", "file"}, {"path", sc.field_path}};
            break;
    }
    root["horizon"] = sc.horizon;
    if (sc.solver) {
        root["solver"] = {{"cells", sc.solver->cells},
                          {"cfl", sc.solver->cfl},
                          {"x_min", sc.solver->x_min},
                          {"x_max", sc.solver->x_max}};
    }
    root["seed"] = sc.seed;
    root["phantom_budget"] = sc.phantom_budget;
    return root.dump(2);
}

}  // namespace eb
