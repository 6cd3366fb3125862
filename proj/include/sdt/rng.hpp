#ifndef SDT_RNG_HPP
#define SDT_RNG_HPP

#include <cstdint>
#include <vector>

namespace sdt {

/// Deterministic 64-bit generator (SplitMix64, Steele et al.). The state is a
/// counter advanced by the golden-gamma constant and passed through a fixed
/// finalizer, so the i-th output is a pure function of (seed, i). Substreams
/// derive a fresh seed via mix64, keeping parallel workers reproducible:
/// stream(seed, w) never overlaps stream(seed, w') statistically.
///
/// All randomness in this project flows through this generator; given the same
/// seed every run produces identical bytes.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform value in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Derived generator for worker/substream `index`.
    Rng stream(std::uint64_t index) const {
        return Rng(mix64(state_ ^ mix64(index + 0x9E3779B97F4A7C15ull)));
    }

    /// Uniform k-subset of {0,...,n-1} via partial Fisher-Yates, sorted.
    std::vector<std::uint32_t> subset(std::uint32_t n, std::uint32_t k);

  private:
    std::uint64_t state_;
};

}  // namespace sdt

#endif
