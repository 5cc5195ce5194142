#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsp/problems/noise.hpp"
#include "rsp/problems/zdt.hpp"
#include "rsp/racing/generation.hpp"

namespace rsp {

// One experimental setting. Defaults follow the reference protocol:
// population 100, proximity threshold 0.5, 100k evaluations (500k on
// ZDT6), 25 runs seeded consecutively from 1.
struct ExperimentConfig {
    ZdtId problem = ZdtId::Zdt1;
    std::size_t dimension = 0; // 0: problem default
    NoiseKind noise = NoiseKind::Dirac;
    Algorithm algorithm = Algorithm::Implicit;
    std::size_t budget = 1;
    double confidence = 0.95; // races only; delta = 1 - confidence
    double proximity_threshold = 0.5;
    std::size_t population_size = 100;
    std::optional<std::uint64_t> max_evaluations;
    std::size_t max_generations = 0; // 0: until the evaluation budget runs out
    std::vector<std::uint64_t> seeds = consecutive_seeds(1, 25);
    std::string output;

    static std::vector<std::uint64_t> consecutive_seeds(std::uint64_t master, std::size_t count);

    std::uint64_t effective_max_evaluations() const noexcept;
    SelectorConfig selector() const;

    // Drops parameters the algorithm ignores (budget of implicit averaging,
    // confidence of static averaging) so equivalent settings compare equal.
    ExperimentConfig canonical() const;
    // Throws ConfigError.
    void validate() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

using KeyValues = std::map<std::string, std::string>;

// Flat `key=value` text, one pair per line; '#' starts a comment line.
KeyValues parse_key_values(const std::string& text);

// Unknown keys and invalid values throw ConfigError naming the valid choices.
ExperimentConfig config_from_key_values(const KeyValues& kv);
std::string serialize_config(const ExperimentConfig& cfg);
ExperimentConfig parse_config(const std::string& text);

// Grid file: the same keys, where problem, noise, algo, budget, confidence,
// pop, evals and dimension accept comma-separated lists. Expands to the
// cartesian product in file order, canonicalized and deduplicated.
struct GridSpec {
    std::vector<ExperimentConfig> configs;
    std::size_t threads = 1;
};
GridSpec parse_grid(const std::string& text);

} // namespace rsp
