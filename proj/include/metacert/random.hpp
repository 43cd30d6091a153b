#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace metacert {

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation-defined, which would break replay).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (engine_() >> 63) != 0; }
    /// True with probability num/den.
    bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// Independent per-instance seed (splitmix64 finaliser over seed and index).
[[nodiscard]] inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace metacert
