#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/words.hpp"

namespace fbc {

/// A letter of F ⋊ Z: either a free-group letter or the stable letter t^±1.
class TorusLetter {
 public:
  constexpr TorusLetter() = default;
  static constexpr TorusLetter f(Letter l) { return TorusLetter(l.code()); }
  static constexpr TorusLetter t(int sign) {
    return TorusLetter(sign < 0 ? -kStable : kStable);
  }

  constexpr bool is_t() const { return code_ == kStable || code_ == -kStable; }
  constexpr Letter letter() const { return Letter::from_code(code_); }
  constexpr int t_sign() const { return code_ < 0 ? -1 : 1; }
  constexpr TorusLetter inverse() const { return TorusLetter(-code_); }
  constexpr bool cancels(TorusLetter o) const { return code_ == -o.code_; }

  friend constexpr bool operator==(TorusLetter, TorusLetter) = default;

 private:
  static constexpr std::int32_t kStable = INT32_MAX;
  constexpr explicit TorusLetter(std::int32_t c) : code_(c) {}
  std::int32_t code_ = 1;
};

/// A word over F's generators and t. Not necessarily reduced: boundary
/// words of diagrams are arbitrary.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<TorusLetter> letters)
      : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  TorusLetter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const TorusLetter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(TorusLetter l) { letters_.push_back(l); }
  void append(const GroupWord& w) {
    letters_.insert(letters_.end(), w.begin(), w.end());
  }
  void append(const Word& w) {
    for (Letter x : w) letters_.push_back(TorusLetter::f(x));
  }
  void append_t(long exponent) {
    for (long i = 0; i < exponent; ++i) push_back(TorusLetter::t(1));
    for (long i = 0; i > exponent; --i) push_back(TorusLetter::t(-1));
  }

  /// Sum of the t exponents.
  long t_exponent() const;
  std::size_t t_count() const;
  /// Subword [first, last).
  GroupWord slice(std::size_t first, std::size_t last) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<TorusLetter> letters_;
};

GroupWord invert(const GroupWord& w);
GroupWord concat(const GroupWord& u, const GroupWord& v);
/// Free reduction over F's generators and t.
GroupWord free_reduce(const GroupWord& w);
/// Embeds a free-group word.
GroupWord lift(const Word& w);

/// Word syntax plus tokens `t` / `t^-1` (or the name given as
/// `stable_name`, e.g. "tau" for words in the p-th power group).
GroupWord parse_group_word(const Alphabet& alphabet, std::string_view text,
                           std::string_view stable_name = "t");
std::string format_group_word(const Alphabet& alphabet, const GroupWord& w,
                              std::string_view stable_name = "t");

/// The element t^s u of F ⋊ Z.
struct NormalForm {
  long t_exponent = 0;
  Word tail;

  bool is_identity() const { return t_exponent == 0 && tail.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Renders as "t^s · u".
std::string format_normal_form(const Alphabet& alphabet, const NormalForm& nf);

struct NormalFormRun {
  NormalForm result;
  std::size_t peak_tail = 0;  // longest intermediate tail during the scan
};

/// Left-to-right fold maintaining t^s u: a free letter x gives u := u x
/// reduced; t^e gives (s + e, phi^e(u)).
NormalFormRun solve(const GroupWord& w, const Automorphism& phi);
NormalForm normal_form(const GroupWord& w, const Automorphism& phi);
bool is_identity(const GroupWord& w, const Automorphism& phi);

/// One more fold step: the normal form of (t^s1 u1)(t^s2 u2).
NormalForm multiply(const NormalForm& a, const NormalForm& b,
                    const Automorphism& phi);
/// The group inverse: (-s, phi^s(u^-1)).
NormalForm group_inverse(const NormalForm& a, const Automorphism& phi);

struct NullWordShape {
  std::size_t length_budget = 0;  // maximum length of the emitted word
  double t_density = 0.3;         // probability that a letter of v is t^±1
};

/// A seeded word equal to the identity: v u^-1 t^-s where (s, u) is the
/// normal form of a random freely reduced v. Deterministic per seed.
GroupWord random_null_word(const Automorphism& phi, std::uint64_t seed,
                           const NullWordShape& shape);

class Rng;
/// Freely reduced random word over F's generators and t, exactly `length`
/// letters, each t^±1 with probability `t_density`.
GroupWord random_group_word(Rng& rng, std::size_t rank, std::size_t length,
                            double t_density);

}  // namespace fbc
