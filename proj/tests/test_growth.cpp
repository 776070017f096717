#include <doctest.h>

#include "fbc/growth.hpp"
#include "fbc/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbc;

namespace {

using Lens = std::vector<std::size_t>;

Word word(const Automorphism& phi, const char* text) {
  return phi.alphabet().parse(text);
}

}  // namespace

TEST_CASE("growth_table examples") {
  auto perm = fixtures::phi("permutation");
  auto t = growth_table(perm, word(perm, "a"), 5, GrowthMode::cyclic);
  CHECK(t.cyclic_lengths == Lens(6, 1));
  CHECK(t.based_lengths == Lens(6, 1));
  CHECK(t.k_emp == Rational(1, 2));

  auto fib = fixtures::phi("fib");
  auto f = growth_table(fib, word(fib, "a"), 5, GrowthMode::based);
  CHECK(f.based_lengths == Lens{1, 2, 3, 5, 8, 13});
  CHECK(f.based_lengths == oracle::fibonacci_lengths(6));
  CHECK(f.k_emp == Rational(13, 14));

  auto dip = growth_table(fib, word(fib, "a^-1 b b"), 4, GrowthMode::based);
  CHECK(dip.based_lengths == Lens{3, 2, 1, 1, 2});
  CHECK(dip.k_emp == Rational(3, 5));

  auto empty = growth_table(fib, Word{}, 3, GrowthMode::cyclic);
  CHECK(empty.k_emp == Rational(0));
}

TEST_CASE("based lengths follow the substitution oracle") {
  for (const auto& name : fixtures::bundled()) {
    auto phi = fixtures::phi(name);
    oracle::Endo e(phi);
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      auto w = random_reduced_word(rng, phi.rank(), rng.below(12));
      auto t = growth_table(phi, w, 6, GrowthMode::based);
      auto cur = oracle::codes(w);
      for (std::size_t i = 0; i <= 6; ++i) {
        REQUIRE(t.based_lengths[i] == cur.size());
        REQUIRE(t.based_lengths[i] >= t.cyclic_lengths[i]);
        cur = e.power(cur, 1);
      }
    }
  }
}

TEST_CASE("cyclic lengths are conjugacy and rotation invariant") {
  for (const auto& name : fixtures::bundled()) {
    auto phi = fixtures::phi(name);
    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      auto w = random_reduced_word(rng, phi.rank(), 1 + rng.below(15));
      auto v = random_reduced_word(rng, phi.rank(), rng.below(8));
      auto base = growth_table(phi, w, 6, GrowthMode::cyclic);
      auto conj = growth_table(phi, concat(v, concat(w, invert(v))), 6,
                               GrowthMode::cyclic);
      REQUIRE(base.cyclic_lengths == conj.cyclic_lengths);
      auto core = cyclic_reduce(w).core;
      auto rot = growth_table(phi, rotate(core, rng.below(core.size() + 1)), 6,
                              GrowthMode::cyclic);
      REQUIRE(base.cyclic_lengths == rot.cyclic_lengths);
      REQUIRE(base.k_emp >= Rational(1, 2));
    }
  }
}

TEST_CASE("k_exhaustive fixtures") {
  // Frozen from an independent Python enumeration.
  struct Row {
    const char* name;
    Rational cyclic;
    Rational based;
  };
  const Row rows[] = {
      {"fib", Rational(55, 56), Rational(55, 56)},
      {"psi", Rational(9, 10), Rational(9, 10)},
      {"permutation", Rational(1, 2), Rational(1, 2)},
      {"rank3", Rational(12, 13), Rational(12, 13)},
      {"identity", Rational(1, 2), Rational(1, 2)},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    auto phi = fixtures::phi(r.name);
    CHECK(k_exhaustive(phi, 6, 8, GrowthMode::cyclic) == r.cyclic);
    CHECK(k_exhaustive(phi, 6, 8, GrowthMode::based) == r.based);
  }
  CHECK(k_exhaustive(fixtures::phi("inversion"), 4, 4, GrowthMode::cyclic) ==
        Rational(1, 2));
}

TEST_CASE("k_exhaustive is monotone and respects the work cap") {
  auto fib = fixtures::phi("fib");
  Rational prev(0);
  for (std::size_t len = 1; len <= 5; ++len) {
    auto k = k_exhaustive(fib, len, 6, GrowthMode::cyclic);
    CHECK(k >= prev);
    prev = k;
  }
  prev = Rational(0);
  for (std::size_t n = 0; n <= 6; ++n) {
    auto k = k_exhaustive(fib, 4, n, GrowthMode::based);
    CHECK(k >= prev);
    prev = k;
  }
  CHECK_THROWS_AS(k_exhaustive(fib, 6, 8, GrowthMode::cyclic, 1000),
                  WorkCapExceeded);
}

TEST_CASE("enumerate_words counts") {
  CHECK(enumerate_words(2, 3, GrowthMode::based).size() == 4 * 3 * 3);
  // Necklace count of cyclically reduced words of length 2 in rank 2:
  // aa, AA, bb, BB, ab, aB, Ab, AB -> 8 classes.
  CHECK(enumerate_words(2, 2, GrowthMode::cyclic).size() == 8);
  CHECK(enumerate_words(2, 0, GrowthMode::based).empty());
}

TEST_CASE("check_brinkmann examples") {
  auto perm = fixtures::phi("permutation");
  CorpusSpec spec{7, 500, 30, 12};
  auto r = check_brinkmann(perm, Rational(1), spec);
  CHECK(r.ok());
  CHECK(r.words_checked == 500);
  CHECK(r.inequalities_checked == 500 * 91);

  auto zero = check_brinkmann(perm, Rational(0), spec);
  CHECK_FALSE(zero.ok());
  CHECK(zero.witnesses.size() == BrinkmannReport::kMaxWitnesses);
  CHECK(zero.witnesses.front().i == 0);

  CHECK_THROWS_AS(check_brinkmann(perm, Rational(-1), spec), PreconditionError);

  auto fib = fixtures::phi("fib");
  auto K = 2 * k_exhaustive(fib, 6, 8, GrowthMode::cyclic);
  CHECK(check_brinkmann(fib, K, {11, 2000, 30, 12}).ok());
}

TEST_CASE("corpus is reproducible") {
  CorpusSpec spec{99, 50, 30, 12};
  auto a = corpus_words(3, spec);
  CHECK(a == corpus_words(3, spec));
  for (const auto& w : a) {
    CHECK(w.size() >= 1);
    CHECK(w.size() <= 30);
  }
  spec.seed = 100;
  CHECK(a != corpus_words(3, spec));
  spec.max_len = 0;
  CHECK_THROWS_AS(corpus_words(3, spec), PreconditionError);
}
