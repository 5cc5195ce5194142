#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rsp/moea/nsga2.hpp"
#include "rsp/racing/race.hpp"

namespace rsp {

enum class Algorithm { Implicit, StaticAvg, StaticMed, RspI, RspAvg, RspMed };

std::string_view to_string(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
EstimatorKind estimator_of(Algorithm algo) noexcept;
bool is_race(Algorithm algo) noexcept;
bool is_static(Algorithm algo) noexcept;

// Survivor selection strategy of one generation. `budget` is the static
// sample count or the maximum race length.
struct SelectorConfig {
    Algorithm algorithm = Algorithm::Implicit;
    std::size_t budget = 1;
    double delta = 0.75;
    double proximity_threshold = 0.5;

    RaceConfig race_config() const;
    // Evaluations one generation may spend on `offspring` new individuals.
    std::uint64_t worst_case_evaluations(std::size_t offspring) const noexcept;
};

RaceResult select_survivors(std::span<Individual> pool, std::size_t mu, const SelectorConfig& selector,
                            NoisyProblem& problem, RngStream& rng);

// Rank and crowding of the parents under the selector's estimator, used for
// mating tournaments.
SelectionOutcome mating_outcome(std::span<const Individual> parents, EstimatorKind estimator);

struct GenerationReport {
    RaceResult selection;
    std::size_t offspring = 0;
    std::size_t clones = 0;
};

// One NSGA-II generation: tournament + SBX + polynomial mutation produce as
// many offspring as there are parents; offspring identical to one of their
// parents inherit its archive and are flagged unchanged; the selector then
// keeps parents.size() survivors out of parents + offspring.
std::vector<Individual> nsga2_generation(std::vector<Individual> parents, const SelectorConfig& selector,
                                         const VariationParams& variation, NoisyProblem& problem,
                                         RngStream& variation_rng, RngStream& selection_rng,
                                         GenerationReport* report = nullptr);

} // namespace rsp
