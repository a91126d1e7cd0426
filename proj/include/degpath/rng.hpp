#pragma once

#include <cstdint>

namespace degpath {

// Counter-based splitmix64. Stateless: every draw is a pure function of its
// inputs, so trial i of a randomized routine can be replayed in isolation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Small sequential generator on top of splitmix64.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_++); }

    // Uniform in [0, bound). bound must be positive. Modulo bias is
    // negligible for the bounds used here (all far below 2^32).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Deterministic per-(seed, trial, item) draw used for coloring trials:
// trial i uses the stream keyed by seed^i.
inline std::uint64_t trial_draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t item) {
    return splitmix64(splitmix64(seed ^ trial) + item);
}

}  // namespace degpath
