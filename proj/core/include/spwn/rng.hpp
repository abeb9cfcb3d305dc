#pragma once

#include <cstdint>

namespace spwn {

/**
 * @brief Counter-based random stream addressed by (seed, stream_id).
 *
 * The generator is a SplitMix-style counter generator: the state advances
 * by a per-stream odd increment and each output is a strong 64-bit mix of
 * the counter. Both the starting counter and the increment are derived
 * from (seed, stream_id), so a stream is a pure value: the same pair
 * always yields the same sequence, no matter which thread consumes it or
 * in what order streams are created. That is what makes Monte Carlo runs
 * reproducible independently of the worker count.
 *
 * Streams are 24 bytes, trivially copyable, and cheap to construct in the
 * middle of a hot loop.
 */
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t stream_id() const { return stream_id_; }

    /// Next raw 64-bit word.
    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform on the open interval (0, 1); safe to pass to log().
    double uniform_pos();

    /// Standard normal draw (Marsaglia polar, one spare cached).
    double sample_std_normal();

    /// Standardised t3 draw: T / sqrt(3) with T ~ Student t, 3 df, so the
    /// result has mean 0 and variance 1. Built from three independent
    /// draws: a normal numerator and a chi-square(3) assembled as
    /// -2 log U + Z^2.
    double sample_std_t3();

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t counter_;
    std::uint64_t gamma_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace spwn
