#pragma once

#include <cstdint>
#include <optional>

#include "elastoshock/states.hpp"

namespace elastoshock {

/// splitmix64: tiny, platform-independent generator so that a fixed seed gives
/// byte-identical outputs everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  private:
    std::uint64_t state_;
};

/// One pair draw of the verification recipe: polytropic k = 1, gamma in [1,3],
/// rho- in [0.5,2], F- = I + entries in [-0.3,0.3] rescaled to rho det F = 1,
/// R in [1.05,4]. Returns nothing when the draw fails the Lax conditions.
struct PairSample {
    PlanarShockPair pair;
    DimensionlessShock shock;
};

std::optional<PairSample> draw_pair_shock(Rng& rng);

/// Rejection loop around draw_pair_shock.
PairSample random_pair_shock(Rng& rng);

/// Direct dimensionless draw under the Lax constraints: F entries in
/// [-1.2, 1.2], M strictly between m1 and mstar, R in [1.05, 8], upstream Mach
/// above its Lax bound. Both uniform and weak margins occur.
DimensionlessShock random_dimensionless_shock(Rng& rng);

}  // namespace elastoshock
