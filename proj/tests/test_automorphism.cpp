#include <doctest.h>

#include "fbc/automorphism.hpp"
#include "fbc/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fbc;

TEST_CASE("bundled automorphisms load with expected constants") {
  CHECK(fixtures::phi("fib").lipschitz() == 2);
  CHECK(fixtures::phi("fib").inverse_lipschitz() == 2);
  CHECK(fixtures::phi("identity").lipschitz() == 1);
  CHECK(fixtures::phi("inversion").rank() == 1);
  CHECK(fixtures::phi("rank3").rank() == 3);
}

TEST_CASE("phi and its inverse compose to the identity") {
  for (const auto& name : fixtures::bundled()) {
    CAPTURE(name);
    auto phi = fixtures::phi(name);
    oracle::Endo e(phi);
    Rng rng(1000);
    for (int trial = 0; trial < 10000; ++trial) {
      Word x = random_reduced_word(rng, phi.rank(), rng.below(51));
      REQUIRE(phi.apply_inverse(phi.apply(x)) == x);
      REQUIRE(phi.apply(phi.apply_inverse(x)) == x);
      if (trial % 10 == 0)
        REQUIRE(oracle::codes(phi.apply(x)) == e.power(oracle::codes(x), 1));
    }
  }
}

TEST_CASE("powers") {
  auto phi = fixtures::phi("fib");
  const auto& a = phi.alphabet();
  CHECK(phi.apply_power(a.parse("a"), 2) == a.parse("a b a"));
  CHECK(phi.apply_power(a.parse("a"), 0) == a.parse("a"));
  CHECK(phi.apply_power(a.parse("a"), -3) == a.parse("a^-1 b b"));
  CHECK(phi.letter_power(Letter(0, -1), 1) == a.parse("b^-1 a^-1"));
  auto p3 = power(phi, 3);
  CHECK(p3.apply(a.parse("a")) == a.parse("a b a a b"));
  auto inv = inverse(phi);
  CHECK(inv.apply(a.parse("a b")) == a.parse("a"));
}

TEST_CASE("constructor rejects bad data") {
  auto ab = Alphabet::standard(2);
  auto w = [&](const char* t) { return ab.parse(t); };
  CHECK_THROWS_AS(Automorphism(ab, {w("a b"), w("a")}, {w("b"), w("a")}),
                  SpecError);
  CHECK_THROWS_AS(Automorphism(ab, {w("a b")}, {w("b")}), SpecError);
  CHECK_THROWS_AS(Automorphism(Alphabet::standard(0), {}, {}), SpecError);
  try {
    Automorphism(ab, {w("a b"), w("a")}, {w("b"), w("a")});
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find('a') != std::string::npos);
  }
}
