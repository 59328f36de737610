#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace sprp {

// Deterministic 64-bit generator used by all instance generators.
//
// The generator is SplitMix64 (Steele, Lea & Flood 2014). A master seed is
// expanded into independent streams, one per random decision category, so
// that instances are reproducible bit-for-bit from (spec, seed) across
// implementations:
//
//   stream k state0 = mix64(seed) + (k+1) * 0x9E3779B97F4A7C15
//   next(s): s += 0x9E3779B97F4A7C15; return mix64'(s)   (SplitMix64 output)
//
// Bounded draws use the plain modulo method, uniform_int(lo,hi) =
// lo + next() % (hi-lo+1); the modulo bias is irrelevant at the range sizes
// used here and keeps the scheme trivial to re-implement.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // True with probability num/den.
    bool chance(std::int64_t num, std::int64_t den) { return uniform_int(0, den - 1) < num; }

    // k distinct values from [0, n) by Floyd's sampling; returned sorted.
    std::vector<std::int64_t> sample_distinct(std::int64_t n, std::int64_t k) {
        if (k > n) throw std::invalid_argument("sample_distinct: k > n");
        std::set<std::int64_t> chosen;
        for (std::int64_t j = n - k; j < n; ++j) {
            std::int64_t t = uniform_int(0, j);
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        return {chosen.begin(), chosen.end()};
    }

  private:
    std::uint64_t state_;
};

// Stream layout: every random decision category draws from its own stream.
enum class RngStream : std::uint64_t {
    RequiredPositions = 0,  // standard/decoupling/multidepot pick sampling
    SkuSeedPositions = 1,   // scattered: one guaranteed position per SKU
    FillClass = 2,          // scattered: class draw for remaining positions
    FillSku = 3,            // scattered: SKU draw within the class
    SupplyQty = 4,          // scattered: per-position item counts
    PickListSku = 5,        // scattered: pick-list composition
    DemandQty = 6,          // scattered: per-SKU demand
    EndDepotCoin = 7,       // multidepot: candidate coin per (aisle, side)
};

inline SplitMix64 make_stream(std::uint64_t seed, RngStream stream) {
    std::uint64_t base = SplitMix64::mix(seed);
    return SplitMix64(base + (static_cast<std::uint64_t>(stream) + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace sprp
