#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rcolor {

/// SplitMix64 finalizer. Used only to derive seeds for independent streams.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive the seed of a sub-stream. The rule is
///   s_0 = mix64(seed), s_{j+1} = mix64(s_j ^ ids[j])
/// so (seed, trial) and (seed, point, sample) never share a stream unless
/// every id matches.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) noexcept
{
    std::uint64_t s = mix64(seed);
    for (std::uint64_t id : ids)
        s = mix64(s ^ id);
    return s;
}

/**
 * Portable 64-bit generator.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard. The standard distributions are not, so the conversions to
 * doubles and bounded integers are done here with fixed arithmetic; the
 * same seed produces the same draws on every conforming platform.
 */
class Rng
{
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng for_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids)
    {
        return Rng(stream_seed(seed, ids));
    }

    std::uint64_t next() { return engine_(); }
    std::uint64_t operator()() { return engine_(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open0() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform on {0, ..., bound-1}; bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold)
                return x % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rcolor
