#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsp/harness/config.hpp"

namespace rsp {

// Cumulative accounting after one generation (generation 0 is the
// initial population).
struct GenerationRow {
    std::size_t generation = 0;
    std::uint64_t evaluations = 0;
    std::array<std::uint64_t, 4> stop_tally{}; // indexed by StopReason
    double mean_race_length = 0.0;

    friend bool operator==(const GenerationRow&, const GenerationRow&) = default;
};

struct RunRecord {
    ExperimentConfig config; // canonical, seeds = {seed}
    std::uint64_t seed = 0;
    std::size_t variant = 0; // position of the config inside its batch
    std::vector<GenerationRow> rows;
    // Noiseless objectives of the final population, in population order.
    std::vector<ObjectivePoint> final_objectives;
    std::optional<double> delta_hv;

    std::uint64_t evaluations() const noexcept { return rows.empty() ? 0 : rows.back().evaluations; }
    double mean_race_length() const noexcept { return rows.empty() ? 0.0 : rows.back().mean_race_length; }

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Uniform random initial population (one real evaluation each), then NSGA-II
// generations for as long as the next generation's worst-case evaluation
// count fits in the remaining budget.
RunRecord run_experiment(const ExperimentConfig& cfg, std::uint64_t seed);

// Text form of a run: "# rsp-run v1", the config as "# key=value" lines,
// then a [trace] table and a [final] table of objective pairs.
std::string format_run(const RunRecord& record);
RunRecord parse_run(const std::string& text);

} // namespace rsp
