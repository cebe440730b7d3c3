#include "neyman/config.hpp"

#include <fstream>

#include <json.hpp>

#include "neyman/errors.hpp"

namespace neyman {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key,
                      const std::string& where) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ConfigError(where + ": missing numeric key '" + key + "'");
    }
    return j[key].get<double>();
}

OutcomeDistribution parse_distribution(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ConfigError(where + ": expected {kind, params}");
    }
    const std::string kind = j["kind"].get<std::string>();
    const json params = j.value("params", json::object());
    if (kind == "bernoulli") {
        return OutcomeDistribution::bernoulli(
            require_number(params, "p", where + ".params"));
    }
    if (kind == "scaled-beta") {
        return OutcomeDistribution::scaled_beta(
            require_number(params, "a", where + ".params"),
            require_number(params, "b", where + ".params"));
    }
    if (kind == "point-mass") {
        return OutcomeDistribution::point_mass(
            require_number(params, "v", where + ".params"));
    }
    throw ConfigError(where + ": unknown distribution kind '" + kind + "'");
}

StrategySpec parse_strategy(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ConfigError(where + ": expected {kind, ...}");
    }
    const std::string kind = j["kind"].get<std::string>();
    StrategySpec spec;
    if (kind == "clipsmt") {
        spec.kind = StrategyKind::ClipSmt;
    } else if (kind == "clipogd") {
        spec.kind = StrategyKind::ClipOgd;
    } else if (kind == "etc") {
        spec.kind = StrategyKind::Etc;
    } else if (kind == "fixed") {
        spec.kind = StrategyKind::Fixed;
    } else if (kind == "neyman-oracle") {
        spec.kind = StrategyKind::NeymanOracle;
    } else if (kind == "balanced") {
        spec.kind = StrategyKind::Balanced;
    } else {
        throw ConfigError(where + ": unknown strategy kind '" + kind + "'");
    }
    const json params = j.value("params", json::object());
    if (params.contains("alpha")) spec.alpha = params["alpha"].get<double>();
    if (params.contains("eta0")) spec.eta0 = params["eta0"].get<double>();
    if (params.contains("clip_exponent")) {
        spec.ogd_clip_exponent = params["clip_exponent"].get<double>();
    }
    if (params.contains("pi")) spec.pi = params["pi"].get<double>();
    if (spec.kind == StrategyKind::Fixed && !params.contains("pi")) {
        throw ConfigError(where + ": fixed strategy needs params.pi");
    }
    spec.id = j.value("id", std::string(strategy_kind_name(spec.kind)));
    return spec;
}

ExperimentConfig parse_json(const json& root) {
    if (!root.is_object()) throw ConfigError("config: top level must be an object");
    ExperimentConfig config;

    if (!root.contains("instances") || !root["instances"].is_array()) {
        throw ConfigError("config: 'instances' array required");
    }
    std::size_t idx = 0;
    for (const auto& j : root["instances"]) {
        const std::string where = "instances[" + std::to_string(idx) + "]";
        if (!j.is_object() || !j.contains("control") || !j.contains("treatment")) {
            throw ConfigError(where + ": needs 'control' and 'treatment'");
        }
        NamedInstance named{
            j.value("id", "instance_" + std::to_string(idx)),
            ProblemInstance{parse_distribution(j["control"], where + ".control"),
                            parse_distribution(j["treatment"],
                                               where + ".treatment")}};
        config.instances.push_back(std::move(named));
        ++idx;
    }

    if (!root.contains("strategies") || !root["strategies"].is_array()) {
        throw ConfigError("config: 'strategies' array required");
    }
    idx = 0;
    for (const auto& j : root["strategies"]) {
        config.strategies.push_back(
            parse_strategy(j, "strategies[" + std::to_string(idx) + "]"));
        ++idx;
    }

    if (!root.contains("horizons") || !root["horizons"].is_array()) {
        throw ConfigError("config: 'horizons' array required");
    }
    for (const auto& j : root["horizons"]) {
        if (!j.is_number_integer()) {
            throw ConfigError("config: horizons must be integers");
        }
        config.horizons.push_back(j.get<std::int64_t>());
    }

    config.replications = root.value("replications", config.replications);
    config.seed = root.value("seed", config.seed);
    config.delta = root.value("delta", config.delta);
    config.output_dir = root.value("output_dir", config.output_dir);

    validate(config);
    return config;
}

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path.string());
    json root;
    try {
        is >> root;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path.string() + ": " +
                          e.what());
    }
    return parse_json(root);
}

ExperimentConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_json(root);
}

}  // namespace neyman
