#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rsp/core/rng.hpp"
#include "rsp/core/types.hpp"

namespace rsp {

// Minimization Pareto dominance. Throws Error("length-mismatch").
bool dominates(const ObjectivePoint& a, const ObjectivePoint& b);

// Fronts in ascending rank; indices inside a front are ascending.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
};

// Fast nondominated sort. Equal points land in the same front.
FrontPartition nondominated_sort(std::span<const ObjectivePoint> points);

// Crowding distance of the points of one front, aligned with the input.
// Boundary points (first/last after a stable sort per objective) get +inf;
// objectives with zero range contribute nothing to interior points.
std::vector<double> crowding_distance(std::span<const ObjectivePoint> front);

struct SelectionOutcome {
    std::vector<std::size_t> selected; // ascending, size mu
    std::vector<std::size_t> rank;     // per input point
    std::vector<double> crowding;      // per input point, within its front
};

// NSGA-II truncation of `points` to `mu` survivors: whole fronts by rank,
// then the splitting front by descending crowding, lower index first on
// ties. Throws Error("invalid-argument") unless 1 <= mu <= points.size().
SelectionOutcome environmental_select(std::span<const ObjectivePoint> points, std::size_t mu);

// Crowded-comparison binary tournament over the population described by
// `outcome` (rank, then crowding, then a fair coin).
std::size_t binary_tournament(const SelectionOutcome& outcome, RngStream& rng);

struct VariationParams {
    double crossover_prob = 1.0;
    double crossover_eta = 20.0;
    double mutation_eta = 20.0;
    double mutation_prob = -1.0; // negative means 1 / dimension
};

// Spread factor of simulated binary crossover for a uniform draw u.
double sbx_beta(double u, double eta) noexcept;

// Simulated binary crossover. With probability pc each coordinate is, with
// probability 1/2, recombined using one spread factor for the pair and then
// exchanged between the children with probability 1/2; otherwise children
// copy their parents. Children are clipped to the bounds.
std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1, const DecisionVector& p2,
                                                        const Bounds& bounds, double eta, double pc,
                                                        RngStream& rng);

// Bounded polynomial perturbation of a single coordinate for a uniform
// draw u; the result stays inside [lo, hi].
double polynomial_perturb(double value, double lo, double hi, double u, double eta) noexcept;

DecisionVector polynomial_mutation(const DecisionVector& x, const Bounds& bounds, double eta, double pm,
                                   RngStream& rng);

} // namespace rsp
