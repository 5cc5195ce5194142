#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rsp/core/types.hpp"

namespace rsp {

enum class ZdtId { Zdt1, Zdt2, Zdt3, Zdt4, Zdt6 };

std::string_view to_string(ZdtId id) noexcept;
std::optional<ZdtId> parse_problem(std::string_view name) noexcept;

// Deterministic two-objective ZDT benchmark. Default dimensions are 30 for
// ZDT1-3 and 10 for ZDT4/6.
class Problem {
public:
    explicit Problem(ZdtId id, std::size_t dimension = 0);

    ZdtId id() const noexcept { return id_; }
    std::string_view name() const noexcept { return to_string(id_); }
    std::size_t dimension() const noexcept { return bounds_.size(); }
    static constexpr std::size_t objectives() noexcept { return 2; }
    const Bounds& bounds() const noexcept { return bounds_; }

    // Noiseless objectives. Throws Error("domain-violation") when x has the
    // wrong length or leaves the box.
    ObjectivePoint evaluate(const DecisionVector& x) const;

    // `count` points on the exact front, evenly spaced in f1 inside each
    // nondominated f1 interval. count >= 2.
    std::vector<ObjectivePoint> true_front(std::size_t count) const;

private:
    ZdtId id_;
    Bounds bounds_;
};

std::size_t default_dimension(ZdtId id) noexcept;

// Nondominated f1 intervals of the ZDT3 front, frozen from
// scripts/derive_front_constants.py.
struct F1Interval {
    double lo;
    double hi;
};
std::span<const F1Interval> zdt3_front_intervals() noexcept;

// Smallest attainable f1 of ZDT6, 1 - exp(-4x) sin^6(6 pi x) at
// x = atan(9 pi) / (6 pi).
double zdt6_min_f1() noexcept;

} // namespace rsp
