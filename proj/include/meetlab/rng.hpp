#pragma once
#include <cstdint>

namespace meetlab {

// SplitMix64 finalizer. All randomness in the library is built from this so
// that results are bit-identical across platforms, runs, and thread counts.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Sequential generator (SplitMix64) for one-shot uses such as graph sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n) via the multiply-shift reduction.
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

// Counter-addressed draw: the value is a pure function of (seed, stream,
// counter), so parallel trials can consume randomness in any order and still
// reproduce exactly.
inline std::uint64_t counter_rand(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (stream + 0xbf58476d1ce4e5b9ULL));
    return mix64(h ^ (counter + 0x94d049bb133111ebULL));
}

inline double counter_unit(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
    return static_cast<double>(counter_rand(seed, stream, counter) >> 11) * 0x1.0p-53;
}

inline std::uint32_t counter_below(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t counter, std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(counter_rand(seed, stream, counter)) * n) >> 64);
}

} // namespace meetlab
