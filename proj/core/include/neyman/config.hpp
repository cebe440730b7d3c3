#pragma once

#include <filesystem>
#include <string>

#include "neyman/experiment.hpp"

namespace neyman {

/// Load a JSON experiment config. Throws ConfigError with the offending key
/// on malformed input. Schema:
///
///   {
///     "instances": [
///       { "id": "...",                        // optional
///         "control":   {"kind": "bernoulli", "params": {"p": 0.3}},
///         "treatment": {"kind": "scaled-beta", "params": {"a": 2, "b": 5}} }
///     ],
///     "strategies": [
///       { "kind": "clipsmt", "id": "...",     // id optional
///         "params": {"alpha": 0.3333333333333333} },
///       { "kind": "clipogd", "params": {"eta0": 1.0, "clip_exponent": 0.2} },
///       { "kind": "etc" }, { "kind": "fixed", "params": {"pi": 0.3} },
///       { "kind": "neyman-oracle" }, { "kind": "balanced" }
///     ],
///     "horizons": [1000, 2000],
///     "replications": 5000,
///     "seed": 20240612,
///     "delta": 0.05,
///     "output_dir": "out"
///   }
///
/// Distribution kinds: "bernoulli" {p}, "scaled-beta" {a,b},
/// "point-mass" {v}.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Parse a config from a JSON string (used by tests).
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace neyman
