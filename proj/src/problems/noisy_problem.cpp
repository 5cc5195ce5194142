#include "rsp/problems/noisy_problem.hpp"

#include "rsp/core/error.hpp"

namespace rsp {

ObjectivePoint NoisyProblem::evaluate(const DecisionVector& x, RngStream& rng) {
    if (evaluations_ >= cap_) {
        throw Error("budget-exhausted", "evaluation cap reached");
    }
    ObjectivePoint f = problem_.evaluate(x);
    const ObjectivePoint e = noise_.draw(f.size(), rng);
    for (std::size_t j = 0; j < f.size(); ++j) {
        f[j] += e[j];
    }
    ++evaluations_;
    return f;
}

} // namespace rsp
