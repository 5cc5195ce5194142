#include "rsp/racing/race.hpp"

#include <algorithm>
#include <cmath>

#include "rsp/core/error.hpp"
#include "rsp/moea/nsga2.hpp"

namespace rsp {

double hoeffding_radius(std::uint64_t t, double delta, double range_width) {
    if (t == 0) {
        throw Error("invalid-argument", "Hoeffding radius needs t >= 1");
    }
    if (!(delta > 0.0 && delta < 1.0) || !(range_width > 0.0)) {
        throw Error("invalid-argument", "Hoeffding radius needs 0 < delta < 1 and R > 0");
    }
    return range_width * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(t)));
}

void RaceConfig::validate() const {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ConfigError("race delta must lie in (0, 1)");
    }
    if (t_max < 1) {
        throw ConfigError("race t_max must be at least 1");
    }
    if (!(proximity_threshold >= 0.0)) {
        throw ConfigError("proximity threshold must be >= 0");
    }
    if (!(range_width > 0.0)) {
        throw ConfigError("range width must be positive");
    }
}

std::string_view to_string(StopReason reason) noexcept {
    switch (reason) {
    case StopReason::QuotaSelected: return "quota_selected";
    case StopReason::QuotaDiscarded: return "quota_discarded";
    case StopReason::TMax: return "t_max";
    case StopReason::Proximity: return "proximity";
    }
    return "?";
}

HoeffdingRace::HoeffdingRace(std::size_t lambda, std::size_t mu, double delta, double range_width)
    : racers_(lambda), mu_(mu), delta_(delta), range_width_(range_width) {
    if (mu < 1 || mu >= lambda) {
        throw Error("invalid-argument", "a race needs 1 <= mu < lambda");
    }
    hoeffding_radius(1, delta, range_width); // validates delta and R
}

void HoeffdingRace::record(const std::vector<bool>& chosen) {
    ++iterations_;
    for (std::size_t i = 0; i < racers_.size(); ++i) {
        RacerState& r = racers_[i];
        if (r.status != RacerStatus::Racing) {
            continue;
        }
        ++r.t;
        if (chosen[i]) {
            ++r.s;
        }
        r.p_hat = static_cast<double>(r.s) / static_cast<double>(r.t);
        const double eps = hoeffding_radius(r.t, delta_, range_width_);
        r.lower = std::max(0.0, r.p_hat - eps);
        r.upper = std::min(1.0, r.p_hat + eps);
    }
    decide();
}

void HoeffdingRace::decide() {
    // Decisions of one pass are applied together; at most mu_rem racers can
    // qualify for selection and lambda_rem - mu_rem for discarding, and no
    // racer qualifies for both, so the pass is order independent.
    std::vector<std::size_t> pool;
    std::vector<RacerStatus> verdict(racers_.size(), RacerStatus::Racing);
    for (;;) {
        if (quota_selected() || quota_discarded()) {
            return;
        }
        pool.clear();
        for (std::size_t i = 0; i < racers_.size(); ++i) {
            if (racers_[i].status == RacerStatus::Racing) {
                pool.push_back(i);
            }
        }
        const std::size_t mu_rem = mu_ - selected_;
        const std::size_t lambda_rem = pool.size();

        bool changed = false;
        for (std::size_t i : pool) {
            std::size_t beats = 0;
            std::size_t beaten = 0;
            for (std::size_t k : pool) {
                if (k == i) {
                    continue;
                }
                beats += racers_[i].lower > racers_[k].upper ? 1 : 0;
                beaten += racers_[i].upper < racers_[k].lower ? 1 : 0;
            }
            verdict[i] = RacerStatus::Racing;
            if (beats >= lambda_rem - mu_rem) {
                verdict[i] = RacerStatus::Selected;
                changed = true;
            } else if (beaten >= mu_rem) {
                verdict[i] = RacerStatus::Discarded;
                changed = true;
            }
        }
        if (!changed) {
            return;
        }
        for (std::size_t i : pool) {
            if (verdict[i] == RacerStatus::Selected) {
                racers_[i].status = RacerStatus::Selected;
                ++selected_;
            } else if (verdict[i] == RacerStatus::Discarded) {
                racers_[i].status = RacerStatus::Discarded;
                ++discarded_;
            }
        }
    }
}

double HoeffdingRace::proximity() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < racers_.size(); ++i) {
        if (racers_[i].status != RacerStatus::Racing) {
            continue;
        }
        for (std::size_t k = i + 1; k < racers_.size(); ++k) {
            if (racers_[k].status == RacerStatus::Racing) {
                sum += std::abs(racers_[i].p_hat - racers_[k].p_hat);
            }
        }
    }
    return sum;
}

const ObjectivePoint& bootstrap_draw(const SampleArchive& archive, RngStream& rng) {
    if (archive.empty()) {
        throw Error("empty-archive", "bootstrap from an empty archive");
    }
    return archive[rng.index(archive.size())];
}

namespace {

void check_population(std::span<const Individual> population) {
    for (const Individual& ind : population) {
        if (ind.unchanged && ind.archive.empty()) {
            throw Error("empty-archive", "unchanged individual without inherited samples");
        }
    }
}

std::size_t count_modified(std::span<const Individual> population) {
    return static_cast<std::size_t>(
        std::count_if(population.begin(), population.end(), [](const Individual& i) { return !i.unchanged; }));
}

} // namespace

RaceResult race_select(std::span<Individual> population, std::size_t mu, const RaceConfig& cfg,
                       NoisyProblem& problem, RngStream& rng, const RaceObserver& observer) {
    cfg.validate();
    const std::size_t lambda = population.size();
    if (mu < 1 || mu >= lambda) {
        throw Error("invalid-argument", "race_select needs 1 <= mu < population size");
    }
    check_population(population);

    HoeffdingRace race(lambda, mu, cfg.delta, cfg.range_width);
    RaceResult result;
    std::vector<ObjectivePoint> reps(lambda);
    std::vector<bool> chosen(lambda);
    const std::uint64_t start = problem.evaluations();

    auto fill = [&](StopReason reason) {
        result.stop_reason = reason;
        result.selected.clear();
        std::vector<std::size_t> racing;
        for (std::size_t i = 0; i < lambda; ++i) {
            const RacerStatus st = race.racers()[i].status;
            if (st == RacerStatus::Selected) {
                result.selected.push_back(i);
            } else if (st == RacerStatus::Racing) {
                racing.push_back(i);
            }
        }
        const std::size_t room = mu - result.selected.size();
        if (reason == StopReason::QuotaDiscarded || room == racing.size()) {
            result.selected.insert(result.selected.end(), racing.begin(), racing.end());
        } else if (room > 0) {
            std::vector<ObjectivePoint> racing_reps;
            racing_reps.reserve(racing.size());
            for (std::size_t i : racing) {
                racing_reps.push_back(reps[i]);
            }
            for (std::size_t p : environmental_select(racing_reps, room).selected) {
                result.selected.push_back(racing[p]);
            }
        }
        std::sort(result.selected.begin(), result.selected.end());
        result.evaluations_used = problem.evaluations() - start;
        result.iterations = race.iterations();
        return result;
    };

    for (std::size_t t = 1; t <= cfg.t_max; ++t) {
        std::size_t needed = 0;
        for (std::size_t i = 0; i < lambda; ++i) {
            if (race.racers()[i].status == RacerStatus::Racing && !population[i].unchanged) {
                ++needed;
            }
        }
        if (needed > problem.remaining()) {
            if (t == 1) {
                throw Error("budget-exhausted", "not enough evaluations left to start a race");
            }
            return fill(StopReason::TMax);
        }

        for (std::size_t i = 0; i < lambda; ++i) {
            Individual& ind = population[i];
            if (race.racers()[i].status == RacerStatus::Racing && !ind.unchanged) {
                ind.archive.append(problem.evaluate(ind.genome, rng));
                reps[i] = estimator_value(ind.archive, cfg.estimator);
            } else {
                const ObjectivePoint& draw = bootstrap_draw(ind.archive, rng);
                reps[i] = estimator_value(ind.archive, draw, cfg.estimator);
            }
        }

        const SelectionOutcome outcome = environmental_select(reps, mu);
        std::fill(chosen.begin(), chosen.end(), false);
        for (std::size_t i : outcome.selected) {
            chosen[i] = true;
        }
        race.record(chosen);
        if (observer) {
            observer(t, race);
        }

        if (race.quota_selected()) {
            return fill(StopReason::QuotaSelected);
        }
        if (race.quota_discarded()) {
            return fill(StopReason::QuotaDiscarded);
        }
        if (race.proximity() < cfg.proximity_threshold) {
            return fill(StopReason::Proximity);
        }
    }
    return fill(StopReason::TMax);
}

RaceResult static_select(std::span<Individual> population, std::size_t mu, std::size_t n_samples,
                         EstimatorKind estimator, NoisyProblem& problem, RngStream& rng) {
    if (n_samples < 1) {
        throw Error("invalid-argument", "static averaging needs at least one sample");
    }
    if (mu < 1 || mu > population.size()) {
        throw Error("invalid-argument", "static_select needs 1 <= mu <= population size");
    }
    check_population(population);
    if (count_modified(population) * n_samples > problem.remaining()) {
        throw Error("budget-exhausted", "not enough evaluations left for static averaging");
    }

    const std::uint64_t start = problem.evaluations();
    std::vector<ObjectivePoint> reps;
    reps.reserve(population.size());
    for (Individual& ind : population) {
        if (!ind.unchanged) {
            for (std::size_t r = 0; r < n_samples; ++r) {
                ind.archive.append(problem.evaluate(ind.genome, rng));
            }
        }
        reps.push_back(estimator_value(ind.archive, estimator));
    }

    RaceResult result;
    result.selected = environmental_select(reps, mu).selected;
    result.evaluations_used = problem.evaluations() - start;
    result.iterations = n_samples;
    result.stop_reason = StopReason::TMax;
    return result;
}

RaceResult implicit_select(std::span<Individual> population, std::size_t mu, NoisyProblem& problem,
                           RngStream& rng) {
    return static_select(population, mu, 1, EstimatorKind::Last, problem, rng);
}

} // namespace rsp
