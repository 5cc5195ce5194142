#include "rsp/problems/noise.hpp"

#include <cmath>
#include <numbers>

#include "rsp/core/error.hpp"

namespace rsp {

std::string_view to_string(NoiseKind kind) noexcept {
    switch (kind) {
    case NoiseKind::Dirac: return "none";
    case NoiseKind::Gaussian: return "gaussian";
    case NoiseKind::Cauchy: return "cauchy";
    case NoiseKind::Gumbel: return "gumbel";
    }
    return "?";
}

std::optional<NoiseKind> parse_noise(std::string_view name) noexcept {
    if (name == "none" || name == "dirac") return NoiseKind::Dirac;
    if (name == "gaussian") return NoiseKind::Gaussian;
    if (name == "cauchy") return NoiseKind::Cauchy;
    if (name == "gumbel") return NoiseKind::Gumbel;
    return std::nullopt;
}

double NoiseModel::gumbel_location() noexcept { return gumbel_scale * std::log(std::numbers::ln2); }

double NoiseModel::gumbel_median() noexcept {
    return gumbel_location() - gumbel_scale * std::log(std::numbers::ln2);
}

namespace {

double one_draw(NoiseKind kind, RngStream& rng) {
    switch (kind) {
    case NoiseKind::Dirac: return 0.0;
    case NoiseKind::Gaussian: return NoiseModel::gaussian_sigma * rng.standard_normal();
    case NoiseKind::Cauchy:
        return NoiseModel::cauchy_scale * std::tan(std::numbers::pi * (rng.uniform_open() - 0.5));
    case NoiseKind::Gumbel:
        return NoiseModel::gumbel_location() - NoiseModel::gumbel_scale * std::log(-std::log(rng.uniform_open()));
    }
    return 0.0;
}

constexpr int max_redraws = 100;

} // namespace

ObjectivePoint NoiseModel::draw(std::size_t k, RngStream& rng) const {
    ObjectivePoint out(k);
    for (std::size_t j = 0; j < k; ++j) {
        double v = one_draw(kind, rng);
        int redraws = 0;
        while (!std::isfinite(v)) {
            if (++redraws > max_redraws) {
                throw Error("non-finite-noise", "noise draw stayed non-finite after 100 redraws");
            }
            v = one_draw(kind, rng);
        }
        out[j] = v;
    }
    return out;
}

} // namespace rsp
