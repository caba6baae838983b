#pragma once

// Platform-stable draws on top of std::mt19937_64. The standard
// distributions are implementation-defined, so seeded runs would not
// reproduce across standard libraries.

#include "mwgap/rational.hpp"

#include <cstdint>
#include <random>

namespace mwgap {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound >= 1. Rejection sampling.
template <class Engine>
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

/// True with probability p (exact rational in [0, 1]).
template <class Engine>
bool bernoulli(Engine& rng, const Rational& p) {
  if (sgn(p) <= 0) return false;
  if (p >= 1) return true;
  const std::uint64_t den = p.get_den().get_ui();
  const std::uint64_t num = p.get_num().get_ui();
  return uniform_below(rng, den) < num;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

/// Independent stream `stream` of a master seed.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

}  // namespace mwgap
