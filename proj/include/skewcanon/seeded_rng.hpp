#ifndef SKEWCANON_SEEDED_RNG_HPP
#define SKEWCANON_SEEDED_RNG_HPP

#include <cstdint>
#include <random>

namespace skewcanon {

/// Deterministic seeded randomness. All draws go through explicit helpers
/// built on the raw mt19937_64 stream, never through distribution objects,
/// so the same seed yields the same values on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// uniform integer in [lo, hi], rejection-sampled
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// uniform double in [0, 1) with 53 bits
    double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool flip() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

} // namespace skewcanon

#endif
