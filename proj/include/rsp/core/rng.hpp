#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace rsp {

// xoshiro256** seeded through splitmix64. Only hand-written transforms are
// used on top of it, so variate sequences are identical across standard
// libraries and platforms.
//
// Streams are derived hierarchically: split(purpose) returns a child stream
// that depends only on this stream's seed and the purpose tag, never on how
// many variates have been consumed.
class RngStream {
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() noexcept;
    result_type operator()() noexcept { return next(); }
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    // Uniform on (0, 1); safe as a logarithm argument.
    double uniform_open() noexcept;
    // Uniform integer in [0, n), unbiased. n must be positive.
    std::uint64_t index(std::uint64_t n) noexcept;
    bool coin() noexcept { return (next() >> 63) != 0; }

    double standard_normal() noexcept;

    RngStream split(std::uint64_t purpose) const;

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

} // namespace rsp
