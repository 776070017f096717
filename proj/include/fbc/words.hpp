#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fbc {

/// Raised for malformed input: bad word syntax, invalid spec files.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition does not hold for its input.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A generator of the free group or its inverse, stored as a signed index:
/// +(g+1) for generator g, -(g+1) for its inverse.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t generator, int sign)
      : code_(sign < 0 ? -static_cast<std::int32_t>(generator + 1)
                       : static_cast<std::int32_t>(generator + 1)) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::size_t generator() const {
    return static_cast<std::size_t>((code_ < 0 ? -code_ : code_) - 1);
  }
  constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  constexpr std::int32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }
  constexpr bool cancels(Letter other) const { return code_ == -other.code_; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::int32_t code_ = 1;
};

/// Appends `x` to a letter stack, cancelling against the top if inverse.
/// Returns true when a cancellation happened.
inline bool push_reduced(std::vector<Letter>& stack, Letter x) {
  if (!stack.empty() && stack.back().cancels(x)) {
    stack.pop_back();
    return true;
  }
  stack.push_back(x);
  return false;
}

/// A freely reduced word in the free group. The empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Reduces its argument.
  explicit Word(std::vector<Letter> raw);
  Word(std::initializer_list<Letter> raw) : Word(std::vector<Letter>(raw)) {}

  /// Caller guarantees `letters` is freely reduced.
  static Word from_reduced(std::vector<Letter> letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  const std::vector<Letter>& vec() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// A cyclically reduced word: reduced, and first/last letters not inverse.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Caller guarantees `core` is cyclically reduced.
  static CyclicWord from_cyclically_reduced(Word core) {
    CyclicWord c;
    c.core_ = std::move(core);
    return c;
  }
  std::size_t size() const { return core_.size(); }
  bool empty() const { return core_.empty(); }
  const Word& word() const { return core_; }
  std::span<const Letter> letters() const { return core_.letters(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word core_;
};

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

Word reduce(std::span<const Letter> raw);
CyclicReduction cyclic_reduce(const Word& w);
Word concat(const Word& u, const Word& v);
Word invert(const Word& u);

/// Length of the cyclic reduction.
inline std::size_t cyclic_length(const Word& w) {
  return cyclic_reduce(w).core.size();
}

/// All cyclic rotations of a cyclically reduced word are conjugate; this
/// returns rotation `k` (letters k.. followed by ..k-1).
Word rotate(const CyclicWord& w, std::size_t k);

/// Generator names for a fixed rank, plus the text syntax shared by all
/// word-valued input and output: whitespace-separated `name` or `name^-1`,
/// with `1` for the empty word.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  /// Generators named a, b, c, ... (rank <= 26).
  static Alphabet standard(std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t g) const { return names_.at(g); }
  /// Index of a generator name, or rank() if unknown.
  std::size_t find(std::string_view name) const;

  /// Parses without reducing. Throws SpecError on unknown tokens.
  std::vector<Letter> parse_raw(std::string_view text) const;
  Word parse(std::string_view text) const { return Word(parse_raw(text)); }

  std::string format(std::span<const Letter> letters) const;
  std::string format(const Word& w) const { return format(w.letters()); }
  std::string format(Letter l) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

bool is_generator_name(std::string_view name);

/// Splits on ASCII whitespace.
std::vector<std::string_view> tokenize(std::string_view text);

}  // namespace fbc
