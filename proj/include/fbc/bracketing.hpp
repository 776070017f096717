#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/rational.hpp"
#include "fbc/torus.hpp"

namespace fbc {

/// A bracket w1 (w2) w3 given by the positions of its sentinels in the
/// literal word; `content_value` is the element of F equal to w2.
struct Bracket {
  std::size_t open = 0;
  std::size_t close = 0;
  Word content_value;

  friend bool operator==(const Bracket&, const Bracket&) = default;
};

/// A set of brackets on a fixed word, sorted by `open`.
struct Bracketing {
  GroupWord word;
  std::vector<Bracket> brackets;
};

/// Matches t-letters the way free reduction of the t-skeleton cancels them:
/// scanning left to right, each t^e pairs with the nearest unmatched t^-e on
/// top of the stack. Throws PreconditionError if w is not the identity.
Bracketing canonical_bracketing(const GroupWord& w, const Automorphism& phi);

struct BracketingReport {
  bool sentinels = true;   // open/close are t-letters of opposite sign
  bool compatible = true;  // ranges pairwise nested or disjoint
  bool t_complete = true;  // every t is a sentinel of exactly one bracket
  bool contents = true;    // content_value matches an independent recompute
  std::vector<std::string> issues;

  bool ok() const { return sentinels && compatible && t_complete && contents; }
};

/// Checks every invariant of a t-complete bracketing. Contents are
/// recomputed bottom-up from the nesting (a bracket t^e X t^-e evaluates to
/// phi^-e(X) with children substituted), not by re-running the scan.
BracketingReport validate(const Bracketing& b, const Automorphism& phi);

/// max |content_value| / |word|. Throws PreconditionError for an empty word.
Rational content_bound_ratio(const Bracketing& b);

struct OracleResult {
  Bracketing best;
  Rational ratio;
  std::size_t matchings = 0;  // number of bracketings enumerated
};

inline constexpr std::size_t kOracleMaxTLetters = 12;

/// Exhaustive search over all non-crossing, opposite-sign perfect matchings
/// of the t-positions; returns one minimising the largest content (ties
/// broken by the lexicographically first matching).
OracleResult optimal_bracketing_oracle(const GroupWord& w,
                                       const Automorphism& phi);

}  // namespace fbc
