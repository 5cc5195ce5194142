#pragma once

#include <optional>
#include <string_view>

#include "rsp/core/rng.hpp"
#include "rsp/core/types.hpp"

namespace rsp {

enum class NoiseKind { Dirac, Gaussian, Cauchy, Gumbel };

std::string_view to_string(NoiseKind kind) noexcept;
// Accepts "none" (and "dirac") for the deterministic setting.
std::optional<NoiseKind> parse_noise(std::string_view name) noexcept;

// Additive objective noise, i.i.d. across objectives and calls.
//   Gaussian: standard deviation 0.25
//   Cauchy:   location 0, scale 0.25
//   Gumbel:   scale 2, location 2 ln(ln 2), which puts the median at 0
struct NoiseModel {
    NoiseKind kind = NoiseKind::Dirac;

    static constexpr double gaussian_sigma = 0.25;
    static constexpr double cauchy_scale = 0.25;
    static constexpr double gumbel_scale = 2.0;
    static double gumbel_location() noexcept;
    static double gumbel_median() noexcept;

    // k independent draws. Non-finite draws are redrawn up to 100 times
    // before throwing Error("non-finite-noise").
    ObjectivePoint draw(std::size_t k, RngStream& rng) const;
};

} // namespace rsp
