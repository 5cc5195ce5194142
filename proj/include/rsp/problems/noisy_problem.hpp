#pragma once

#include <cstdint>
#include <limits>

#include "rsp/problems/noise.hpp"
#include "rsp/problems/zdt.hpp"

namespace rsp {

// A ZDT problem with additive noise, plus the evaluation counter of the run
// that owns it. Copies share nothing.
class NoisyProblem {
public:
    NoisyProblem(Problem problem, NoiseModel noise,
                 std::uint64_t max_evaluations = std::numeric_limits<std::uint64_t>::max())
        : problem_(std::move(problem)), noise_(noise), cap_(max_evaluations) {}

    const Problem& problem() const noexcept { return problem_; }
    const NoiseModel& noise() const noexcept { return noise_; }

    // true objectives + noise draw; counts one evaluation. Throws
    // Error("budget-exhausted") once the cap is reached.
    ObjectivePoint evaluate(const DecisionVector& x, RngStream& rng);

    std::uint64_t evaluations() const noexcept { return evaluations_; }
    std::uint64_t max_evaluations() const noexcept { return cap_; }
    std::uint64_t remaining() const noexcept { return cap_ - evaluations_; }

private:
    Problem problem_;
    NoiseModel noise_;
    std::uint64_t cap_;
    std::uint64_t evaluations_ = 0;
};

} // namespace rsp
