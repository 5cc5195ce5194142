#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "rsp/core/estimator.hpp"
#include "rsp/core/rng.hpp"
#include "rsp/core/types.hpp"
#include "rsp/problems/noisy_problem.hpp"

namespace rsp {

// Hoeffding confidence radius R * sqrt(ln(2 / delta) / (2 t)).
// Throws Error("invalid-argument") for t == 0, delta outside (0, 1) or R <= 0.
double hoeffding_radius(std::uint64_t t, double delta, double range_width = 1.0);

struct RaceConfig {
    double delta = 0.75;            // confidence level is 1 - delta
    std::size_t t_max = 15;         // maximum race length
    double proximity_threshold = 0.5;
    EstimatorKind estimator = EstimatorKind::Last;
    double range_width = 1.0;       // selection indicators live in [0, 1]

    void validate() const;
};

enum class RacerStatus { Racing, Selected, Discarded };

struct RacerState {
    RacerStatus status = RacerStatus::Racing;
    std::uint64_t t = 0; // iterations raced
    std::uint64_t s = 0; // iterations in which it was selected
    double p_hat = 0.0;
    double lower = 0.0;
    double upper = 1.0;
};

enum class StopReason { QuotaSelected, QuotaDiscarded, TMax, Proximity };

std::string_view to_string(StopReason reason) noexcept;

struct RaceResult {
    std::vector<std::size_t> selected; // ascending, size mu
    std::uint64_t evaluations_used = 0;
    std::size_t iterations = 0;
    StopReason stop_reason = StopReason::TMax;
};

// Bookkeeping of a (mu, lambda) Hoeffding race on selection probabilities,
// independent of how the per-iteration selection indicators are produced.
class HoeffdingRace {
public:
    HoeffdingRace(std::size_t lambda, std::size_t mu, double delta, double range_width = 1.0);

    // Feeds one round of indicators (one per individual; entries of retired
    // individuals are ignored), refreshes the bounds of every racer, then
    // retires racers until the decision rules reach a fixed point.
    void record(const std::vector<bool>& chosen);

    std::span<const RacerState> racers() const noexcept { return racers_; }
    std::size_t lambda() const noexcept { return racers_.size(); }
    std::size_t mu() const noexcept { return mu_; }
    std::size_t iterations() const noexcept { return iterations_; }
    std::size_t selected_count() const noexcept { return selected_; }
    std::size_t discarded_count() const noexcept { return discarded_; }
    std::size_t racing_count() const noexcept { return racers_.size() - selected_ - discarded_; }

    bool quota_selected() const noexcept { return selected_ == mu_; }
    bool quota_discarded() const noexcept { return discarded_ == racers_.size() - mu_; }

    // Sum of |p_i - p_j| over unordered pairs of racers still in the race.
    double proximity() const;

private:
    void decide();

    std::vector<RacerState> racers_;
    std::size_t mu_;
    double delta_;
    double range_width_;
    std::size_t iterations_ = 0;
    std::size_t selected_ = 0;
    std::size_t discarded_ = 0;
};

// Uniform draw with replacement from the archive's real samples.
// Throws Error("empty-archive").
const ObjectivePoint& bootstrap_draw(const SampleArchive& archive, RngStream& rng);

// Called after every race iteration with the iteration number and states.
using RaceObserver = std::function<void(std::size_t, const HoeffdingRace&)>;

// Racing Selection Probability: repeatedly resamples the uncertain
// individuals, applies NSGA-II environmental selection to the whole
// population's representatives, and races the resulting selection
// frequencies until mu individuals are certain, lambda - mu are certainly
// out, the racers are tied, or t_max rounds have run.
//
// Modified racers receive real evaluations (appended to their archives);
// unchanged and retired individuals are represented by bootstrap draws.
// A round that would overrun the problem's evaluation cap is not started
// and the race finishes as if t_max had been reached.
RaceResult race_select(std::span<Individual> population, std::size_t mu, const RaceConfig& cfg,
                       NoisyProblem& problem, RngStream& rng, const RaceObserver& observer = {});

// Static averaging: n_samples fresh evaluations per modified individual,
// then one environmental selection on the estimator values.
RaceResult static_select(std::span<Individual> population, std::size_t mu, std::size_t n_samples,
                         EstimatorKind estimator, NoisyProblem& problem, RngStream& rng);

// Implicit averaging: one fresh evaluation per modified individual.
RaceResult implicit_select(std::span<Individual> population, std::size_t mu, NoisyProblem& problem,
                           RngStream& rng);

} // namespace rsp
