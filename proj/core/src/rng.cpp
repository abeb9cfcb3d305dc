#include "spwn/rng.hpp"

#include <bit>
#include <cmath>

namespace spwn {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Stafford mix13 finalizer.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Per-stream increment: odd, and with enough bit transitions that the
// counter walk does not degenerate (the SplitMix gamma fix).
std::uint64_t fix_gamma(std::uint64_t g) {
    g |= 1ull;
    if (std::popcount(g ^ (g >> 1)) < 24) g ^= 0xAAAAAAAAAAAAAAAAull;
    return g;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::uint64_t h = mix64(mix64(seed + kGolden) + stream_id);
    counter_ = mix64(h + kGolden);
    gamma_ = fix_gamma(mix64(h + 2 * kGolden));
}

std::uint64_t RngStream::next_u64() {
    counter_ += gamma_;
    return mix64(counter_);
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::sample_std_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

double RngStream::sample_std_t3() {
    double z0 = sample_std_normal();
    double u = uniform_pos();
    double z1 = sample_std_normal();
    double chi3 = -2.0 * std::log(u) + z1 * z1;  // chi-square with 3 df
    // t3 = z0 / sqrt(chi3 / 3); dividing by sqrt(3) standardises it, since
    // Var(t3) = 3. The two cancel to z0 / sqrt(chi3).
    return z0 / std::sqrt(chi3);
}

}  // namespace spwn
