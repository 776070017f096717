#pragma once

#include <cstdint>
#include <random>

#include "fbc/words.hpp"

namespace fbc {

/// Seeded generator used by every randomized routine; draws go through
/// `below` so that sequences only depend on the engine, not on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  /// True with probability approximately p.
  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Uniformly random letter over a rank-n alphabet, avoiding `avoid` if given.
Letter random_letter(Rng& rng, std::size_t rank);
Letter random_letter_except(Rng& rng, std::size_t rank, Letter avoid);

/// Freely reduced word of exactly `length` letters (rank >= 1; for rank 1
/// the only choices are powers of one letter).
Word random_reduced_word(Rng& rng, std::size_t rank, std::size_t length);

/// Cyclically reduced word of exactly `length` letters.
Word random_cyclic_word(Rng& rng, std::size_t rank, std::size_t length);

}  // namespace fbc
