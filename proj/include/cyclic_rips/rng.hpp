#pragma once

#include <cstdint>
#include <random>

namespace cyclic_rips {

/// Deterministic generator with cheap derived streams: (seed, stream) pairs
/// give independent, reproducible sequences, so parallel trials can each own
/// stream = trial index and still replay bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        std::seed_seq seq{mix(s), mix(s), mix(s), mix(s)};
        gen_.seed(seq);
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform draw in [0, bound), unbiased by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

private:
    static std::uint32_t mix(std::uint64_t& state) {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<std::uint32_t>(z ^ (z >> 32));
    }

    std::mt19937_64 gen_;
};

} // namespace cyclic_rips
