#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "albert/rational.hpp"

namespace albert {

// SplitMix64: tiny, portable, fully deterministic across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

// Derives independent child seeds from a master seed and a label, so every
// suite draws from its own reproducible stream.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ seed;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  SplitMix64 mix(h);
  return mix.next();
}

// Small-height rational sampler: numerators in [-num_bound, num_bound],
// denominators in [1, den_bound].
struct Sampler {
  SplitMix64 rng;
  long num_bound = 4;
  long den_bound = 3;

  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  std::uint64_t index(std::uint64_t n) { return n == 0 ? 0 : rng.next() % n; }

  long int_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(index(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rational rational() {
    long num = int_in(-num_bound, num_bound);
    long den = int_in(1, den_bound);
    return Rational(num, den);
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  std::vector<Rational> vec(std::size_t n) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = rational();
    return v;
  }
};

}  // namespace albert
