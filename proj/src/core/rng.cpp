#include "rsp/core/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace rsp {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& s : state_) {
        s = splitmix64(sm);
    }
}

std::uint64_t RngStream::next() noexcept {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

double RngStream::uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::index(std::uint64_t n) noexcept {
    // rejection on the top of the range keeps the draw unbiased
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t r = next();
    while (r >= limit) {
        r = next();
    }
    return r % n;
}

double RngStream::standard_normal() noexcept {
    // Box-Muller, one variate per call so the stream stays stateless
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream RngStream::split(std::uint64_t purpose) const {
    std::uint64_t sm = seed_ ^ (0xD1B54A32D192ED03ULL * (purpose + 1));
    splitmix64(sm);
    return RngStream(splitmix64(sm));
}

} // namespace rsp
