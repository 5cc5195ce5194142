#pragma once

#include <span>
#include <vector>

#include "rsp/core/types.hpp"
#include "rsp/problems/zdt.hpp"

namespace rsp {

struct NormalizationFrame {
    ObjectivePoint ideal;
    ObjectivePoint nadir;

    // Throws Error("degenerate-frame") unless nadir_j > ideal_j for all j.
    void validate() const;

    // Ideal from the exact front; nadir from the front plus every point in
    // `generated`.
    static NormalizationFrame from_batch(std::span<const ObjectivePoint> front,
                                         std::span<const ObjectivePoint> generated);
    // Single-run fallback: the bounding box of the sampled exact front.
    static NormalizationFrame fallback(const Problem& problem, std::size_t front_resolution = 1000);
};

// (f - ideal) / (nadir - ideal), clipped to at most 1 per component.
std::vector<ObjectivePoint> normalize(std::span<const ObjectivePoint> points, const NormalizationFrame& frame);

// Exact area dominated by `points` and bounded by `ref`. Points that do not
// strictly dominate `ref` contribute nothing.
double hypervolume_2d(std::span<const ObjectivePoint> points, const ObjectivePoint& ref);

struct HvReport {
    double hv_front = 0.0;
    double hv_solution = 0.0;
    double delta_hv = 0.0;
};

constexpr std::size_t default_front_resolution = 1000;

// Hypervolume gap between the sampled exact front and the solution, both
// normalized by `frame`, with reference point (1, 1).
HvReport delta_hypervolume(std::span<const ObjectivePoint> solution, const Problem& problem,
                           const NormalizationFrame& frame,
                           std::size_t front_resolution = default_front_resolution);

enum class Alternative { TwoSided, Greater, Less };

// Wilcoxon signed-rank test on the paired differences a_i - b_i. Zero
// differences are dropped and tied magnitudes share average ranks. Exact
// null distribution for up to 20 nonzero differences, otherwise a normal
// approximation with tie and continuity corrections. `Greater` tests
// whether a tends to exceed b. All-zero differences give p = 1.
// Throws Error("invalid-argument") for unequal lengths or n < 5.
double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                            Alternative alternative = Alternative::TwoSided);

namespace detail {

struct SignedRanks {
    std::vector<double> ranks; // average ranks of |d|, nonzero d only
    std::vector<bool> positive;
    double w_plus = 0.0;
};
SignedRanks signed_ranks(std::span<const double> a, std::span<const double> b);
double wilcoxon_exact(const SignedRanks& sr, Alternative alternative);
double wilcoxon_normal(const SignedRanks& sr, Alternative alternative);

} // namespace detail

} // namespace rsp
