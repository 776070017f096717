#include "fbc/growth.hpp"

#include <algorithm>

#include <omp.h>

#include "fbc/random.hpp"

namespace fbc {

namespace {

std::vector<std::size_t> orbit_lengths(const Automorphism& phi, const Word& w,
                                       std::size_t horizon, GrowthMode mode) {
  std::vector<std::size_t> out;
  out.reserve(horizon + 1);
  Word cur = mode == GrowthMode::cyclic ? cyclic_reduce(w).core.word() : w;
  out.push_back(cur.size());
  for (std::size_t i = 0; i < horizon; ++i) {
    cur = phi.apply(cur);
    if (mode == GrowthMode::cyclic) cur = cyclic_reduce(cur).core.word();
    out.push_back(cur.size());
  }
  return out;
}

// Largest k_ratio over horizons 0..N, as a fraction num/den.
struct Frac {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
};

Frac best_ratio(const std::vector<std::size_t>& len) {
  Frac best;
  std::size_t running_max = 0;
  for (std::size_t n = 0; n < len.size(); ++n) {
    running_max = std::max(running_max, len[n]);
    std::size_t den = len[0] + len[n];
    if (den == 0) continue;
    Frac f{running_max, den};
    if (best < f) best = f;
  }
  return best;
}

std::uint64_t count_words(std::size_t rank, std::size_t max_len) {
  std::uint64_t total = 0;
  std::uint64_t layer = 2 * rank;
  for (std::size_t len = 1; len <= max_len; ++len) {
    total += layer;
    if (total > (std::uint64_t{1} << 60)) return total;
    layer *= 2 * rank - 1;
  }
  return total;
}

bool is_least_rotation(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = w[(i + k) % n];
      if (a < w[i]) return false;
      if (w[i] < a) break;
    }
  }
  return true;
}

std::vector<Word> all_words(std::size_t rank, std::size_t max_len,
                            GrowthMode mode, std::size_t horizon,
                            std::uint64_t work_cap) {
  std::uint64_t est = count_words(rank, max_len);
  if (est > work_cap / (horizon + 1))
    throw WorkCapExceeded("enumeration of " + std::to_string(est) +
                          " words x " + std::to_string(horizon + 1) +
                          " steps exceeds the work cap of " +
                          std::to_string(work_cap));
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto layer = enumerate_words(rank, len, mode);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

Rational to_rational(const Frac& f) {
  return Rational(static_cast<std::int64_t>(f.num),
                  static_cast<std::int64_t>(f.den));
}

}  // namespace

Rational k_ratio(std::span<const std::size_t> lengths, std::size_t horizon) {
  if (lengths.size() <= horizon)
    throw std::out_of_range("horizon beyond the table");
  std::size_t den = lengths[0] + lengths[horizon];
  if (den == 0) return Rational(0);
  std::size_t top = *std::max_element(lengths.begin(),
                                      lengths.begin() + static_cast<std::ptrdiff_t>(horizon) + 1);
  return Rational(static_cast<std::int64_t>(top), static_cast<std::int64_t>(den));
}

GrowthTable growth_table(const Automorphism& phi, const Word& w,
                         std::size_t horizon, GrowthMode mode) {
  GrowthTable t;
  t.word = w;
  t.horizon = horizon;
  t.mode = mode;
  t.based_lengths = orbit_lengths(phi, w, horizon, GrowthMode::based);
  t.cyclic_lengths = orbit_lengths(phi, w, horizon, GrowthMode::cyclic);
  t.k_emp = k_ratio(mode == GrowthMode::cyclic ? t.cyclic_lengths
                                               : t.based_lengths,
                    horizon);
  return t;
}

std::vector<Word> enumerate_words(std::size_t rank, std::size_t len,
                                  GrowthMode mode) {
  std::vector<Word> out;
  if (len == 0) return out;
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < 2 * rank; ++k)
    letters.emplace_back(k / 2, (k % 2) ? -1 : 1);
  std::vector<Letter> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == len) {
      if (mode == GrowthMode::cyclic) {
        if (len >= 2 && cur.front().cancels(cur.back())) return;
        if (!is_least_rotation(cur)) return;
      }
      out.push_back(Word::from_reduced(cur));
      return;
    }
    for (Letter x : letters) {
      if (!cur.empty() && cur.back().cancels(x)) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

Rational k_exhaustive_serial(const Automorphism& phi, std::size_t max_len,
                             std::size_t horizon, GrowthMode mode,
                             std::uint64_t work_cap) {
  auto words = all_words(phi.rank(), max_len, mode, horizon, work_cap);
  Frac best;
  for (const auto& w : words) {
    Frac f = best_ratio(orbit_lengths(phi, w, horizon, mode));
    if (best < f) best = f;
  }
  return to_rational(best);
}

Rational k_exhaustive(const Automorphism& phi, std::size_t max_len,
                      std::size_t horizon, GrowthMode mode,
                      std::uint64_t work_cap) {
  auto words = all_words(phi.rank(), max_len, mode, horizon, work_cap);
  std::vector<Frac> per_word(words.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < words.size(); ++i)
    per_word[i] = best_ratio(orbit_lengths(phi, words[i], horizon, mode));
  Frac best;
  for (const auto& f : per_word)
    if (best < f) best = f;
  return to_rational(best);
}

std::vector<Word> corpus_words(std::size_t rank, const CorpusSpec& spec) {
  if (spec.max_len == 0) throw PreconditionError("corpus max_len must be >= 1");
  Rng rng(spec.seed);
  std::vector<Word> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i)
    out.push_back(random_reduced_word(rng, rank, rng.between(1, spec.max_len)));
  return out;
}

namespace {

struct WordCheck {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<BrinkmannViolation> witnesses;
};

WordCheck check_word(const Automorphism& phi, const Word& w, std::size_t index,
                     const Rational& K, std::size_t max_horizon,
                     GrowthMode mode) {
  WordCheck out;
  auto len = orbit_lengths(phi, w, max_horizon, mode);
  const auto num = static_cast<unsigned __int128>(K.numerator());
  const auto den = static_cast<unsigned __int128>(K.denominator());
  for (std::size_t n = 0; n <= max_horizon; ++n) {
    const std::size_t ends = len[0] + len[n];
    for (std::size_t i = 0; i <= n; ++i) {
      ++out.checked;
      // len[i] <= (num/den) * ends
      if (static_cast<unsigned __int128>(len[i]) * den > num * ends) {
        ++out.violations;
        if (out.witnesses.size() < BrinkmannReport::kMaxWitnesses)
          out.witnesses.push_back({index, w, i, n, len[i], ends});
      }
    }
  }
  return out;
}

BrinkmannReport merge(const Rational& K, GrowthMode mode,
                      std::vector<WordCheck>& parts) {
  BrinkmannReport r;
  r.K = K;
  r.mode = mode;
  r.words_checked = parts.size();
  for (auto& p : parts) {
    r.inequalities_checked += p.checked;
    r.violation_count += p.violations;
    for (auto& v : p.witnesses)
      if (r.witnesses.size() < BrinkmannReport::kMaxWitnesses)
        r.witnesses.push_back(std::move(v));
  }
  return r;
}

void check_k(const Rational& K) {
  if (K < Rational(0)) throw PreconditionError("K must be non-negative");
}

}  // namespace

BrinkmannReport check_brinkmann_serial(const Automorphism& phi,
                                       const Rational& K,
                                       const CorpusSpec& spec,
                                       GrowthMode mode) {
  check_k(K);
  auto words = corpus_words(phi.rank(), spec);
  std::vector<WordCheck> parts;
  for (std::size_t i = 0; i < words.size(); ++i)
    parts.push_back(check_word(phi, words[i], i, K, spec.max_horizon, mode));
  return merge(K, mode, parts);
}

BrinkmannReport check_brinkmann(const Automorphism& phi, const Rational& K,
                                const CorpusSpec& spec, GrowthMode mode) {
  check_k(K);
  auto words = corpus_words(phi.rank(), spec);
  std::vector<WordCheck> parts(words.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < words.size(); ++i)
    parts[i] = check_word(phi, words[i], i, K, spec.max_horizon, mode);
  return merge(K, mode, parts);
}

}  // namespace fbc
