#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/rational.hpp"

namespace fbc {

enum class GrowthMode { based, cyclic };

/// Lengths along the orbit w, phi(w), ..., phi^N(w).
struct GrowthTable {
  Word word;
  std::size_t horizon = 0;
  GrowthMode mode = GrowthMode::cyclic;
  std::vector<std::size_t> based_lengths;   // |phi^i(w)|
  std::vector<std::size_t> cyclic_lengths;  // ||phi^i(w)||
  /// max_i len[i] / (len[0] + len[N]) for the table's mode; 0 when the
  /// denominator vanishes.
  Rational k_emp;
};

/// The cyclic orbit is followed as cyclic_reduce(phi(core)) per step.
GrowthTable growth_table(const Automorphism& phi, const Word& w,
                         std::size_t horizon, GrowthMode mode);

/// max_{i<=N} len[i] / (len[0] + len[N]) over the first N+1 entries;
/// 0 if the denominator is 0.
Rational k_ratio(std::span<const std::size_t> lengths, std::size_t horizon);

struct WorkCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultWorkCap = 50'000'000;

/// Maximum of k_emp over every reduced word (cyclic mode: one cyclically
/// reduced representative per rotation class) of length 1..max_len and every
/// horizon n <= N. Throws WorkCapExceeded when words * (N+1) exceeds the cap.
Rational k_exhaustive(const Automorphism& phi, std::size_t max_len,
                      std::size_t horizon, GrowthMode mode,
                      std::uint64_t work_cap = kDefaultWorkCap);
Rational k_exhaustive_serial(const Automorphism& phi, std::size_t max_len,
                             std::size_t horizon, GrowthMode mode,
                             std::uint64_t work_cap = kDefaultWorkCap);

/// Seeded random corpus: `count` reduced words with lengths uniform in
/// [1, max_len]; each word is checked at every 0 <= i <= N <= max_horizon.
struct CorpusSpec {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t max_len = 30;
  std::size_t max_horizon = 12;
};

std::vector<Word> corpus_words(std::size_t rank, const CorpusSpec& spec);

struct BrinkmannViolation {
  std::size_t corpus_index = 0;
  Word word;
  std::size_t i = 0;
  std::size_t horizon = 0;
  std::size_t lhs = 0;       // len(phi^i(w))
  std::size_t endpoints = 0; // len(w) + len(phi^N(w))
};

struct BrinkmannReport {
  Rational K;
  GrowthMode mode = GrowthMode::cyclic;
  std::size_t words_checked = 0;
  std::size_t inequalities_checked = 0;
  std::size_t violation_count = 0;
  /// First violations in corpus order, at most kMaxWitnesses.
  std::vector<BrinkmannViolation> witnesses;

  static constexpr std::size_t kMaxWitnesses = 20;
  bool ok() const { return violation_count == 0; }
};

/// Tests len(phi^i(w)) <= K (len(w) + len(phi^N(w))) on the corpus.
/// K must be non-negative.
BrinkmannReport check_brinkmann(const Automorphism& phi, const Rational& K,
                                const CorpusSpec& spec,
                                GrowthMode mode = GrowthMode::cyclic);
BrinkmannReport check_brinkmann_serial(const Automorphism& phi,
                                       const Rational& K,
                                       const CorpusSpec& spec,
                                       GrowthMode mode = GrowthMode::cyclic);

/// Every reduced word of length exactly `len` (cyclic: cyclically reduced,
/// least rotation in its class).
std::vector<Word> enumerate_words(std::size_t rank, std::size_t len,
                                  GrowthMode mode);

}  // namespace fbc
