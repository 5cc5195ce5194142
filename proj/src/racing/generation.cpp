#include "rsp/racing/generation.hpp"

#include "rsp/core/error.hpp"

namespace rsp {

std::string_view to_string(Algorithm algo) noexcept {
    switch (algo) {
    case Algorithm::Implicit: return "implicit";
    case Algorithm::StaticAvg: return "static-avg";
    case Algorithm::StaticMed: return "static-med";
    case Algorithm::RspI: return "rsp-i";
    case Algorithm::RspAvg: return "rsp-avg";
    case Algorithm::RspMed: return "rsp-med";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (Algorithm a : {Algorithm::Implicit, Algorithm::StaticAvg, Algorithm::StaticMed, Algorithm::RspI,
                        Algorithm::RspAvg, Algorithm::RspMed}) {
        if (name == to_string(a)) {
            return a;
        }
    }
    return std::nullopt;
}

EstimatorKind estimator_of(Algorithm algo) noexcept {
    switch (algo) {
    case Algorithm::StaticAvg:
    case Algorithm::RspAvg: return EstimatorKind::Mean;
    case Algorithm::StaticMed:
    case Algorithm::RspMed: return EstimatorKind::Median;
    default: return EstimatorKind::Last;
    }
}

bool is_race(Algorithm algo) noexcept {
    return algo == Algorithm::RspI || algo == Algorithm::RspAvg || algo == Algorithm::RspMed;
}

bool is_static(Algorithm algo) noexcept { return algo == Algorithm::StaticAvg || algo == Algorithm::StaticMed; }

RaceConfig SelectorConfig::race_config() const {
    RaceConfig cfg;
    cfg.delta = delta;
    cfg.t_max = budget;
    cfg.proximity_threshold = proximity_threshold;
    cfg.estimator = estimator_of(algorithm);
    return cfg;
}

std::uint64_t SelectorConfig::worst_case_evaluations(std::size_t offspring) const noexcept {
    return algorithm == Algorithm::Implicit ? offspring : offspring * budget;
}

RaceResult select_survivors(std::span<Individual> pool, std::size_t mu, const SelectorConfig& selector,
                            NoisyProblem& problem, RngStream& rng) {
    if (is_race(selector.algorithm)) {
        return race_select(pool, mu, selector.race_config(), problem, rng);
    }
    if (is_static(selector.algorithm)) {
        return static_select(pool, mu, selector.budget, estimator_of(selector.algorithm), problem, rng);
    }
    return implicit_select(pool, mu, problem, rng);
}

SelectionOutcome mating_outcome(std::span<const Individual> parents, EstimatorKind estimator) {
    std::vector<ObjectivePoint> reps;
    reps.reserve(parents.size());
    for (const Individual& p : parents) {
        reps.push_back(estimator_value(p.archive, estimator));
    }
    return environmental_select(reps, reps.size());
}

std::vector<Individual> nsga2_generation(std::vector<Individual> parents, const SelectorConfig& selector,
                                         const VariationParams& variation, NoisyProblem& problem,
                                         RngStream& variation_rng, RngStream& selection_rng,
                                         GenerationReport* report) {
    const std::size_t mu = parents.size();
    if (mu == 0) {
        throw Error("invalid-argument", "generation over an empty parent set");
    }
    const Bounds& bounds = problem.problem().bounds();
    const double pm = variation.mutation_prob < 0.0 ? 1.0 / static_cast<double>(bounds.size())
                                                   : variation.mutation_prob;
    const SelectionOutcome mating = mating_outcome(parents, estimator_of(selector.algorithm));

    std::vector<Individual> pool = parents;
    for (Individual& p : pool) {
        p.unchanged = true;
    }
    std::size_t clones = 0;
    auto add_child = [&](DecisionVector genome, const Individual& a, const Individual& b) {
        Individual child;
        if (genome == a.genome || genome == b.genome) {
            const Individual& source = genome == a.genome ? a : b;
            child.archive = source.archive;
            child.unchanged = true;
            ++clones;
        }
        child.genome = std::move(genome);
        pool.push_back(std::move(child));
    };

    while (pool.size() < 2 * mu) {
        const Individual& a = parents[binary_tournament(mating, variation_rng)];
        const Individual& b = parents[binary_tournament(mating, variation_rng)];
        auto [c1, c2] = sbx_crossover(a.genome, b.genome, bounds, variation.crossover_eta,
                                      variation.crossover_prob, variation_rng);
        add_child(polynomial_mutation(c1, bounds, variation.mutation_eta, pm, variation_rng), a, b);
        DecisionVector m2 = polynomial_mutation(c2, bounds, variation.mutation_eta, pm, variation_rng);
        if (pool.size() < 2 * mu) {
            add_child(std::move(m2), a, b);
        }
    }

    RaceResult selection = select_survivors(pool, mu, selector, problem, selection_rng);
    std::vector<Individual> survivors;
    survivors.reserve(mu);
    for (std::size_t i : selection.selected) {
        survivors.push_back(std::move(pool[i]));
        survivors.back().unchanged = true;
    }
    if (report != nullptr) {
        report->selection = std::move(selection);
        report->offspring = mu;
        report->clones = clones;
    }
    return survivors;
}

} // namespace rsp
