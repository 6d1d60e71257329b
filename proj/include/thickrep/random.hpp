#pragma once

#include <cstdint>
#include <random>

namespace thickrep {

/// Every randomized routine takes one of these, seeded explicitly by the caller.
/// Draws use plain modular reduction instead of <random> distributions so the
/// streams are identical across standard library implementations.
using Rng = std::mt19937_64;

inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

inline std::int64_t draw_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace thickrep
