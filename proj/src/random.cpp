#include "fbc/random.hpp"

#include <stdexcept>

#include "fbc/rational.hpp"

namespace fbc {

Letter random_letter(Rng& rng, std::size_t rank) {
  auto k = rng.below(2 * rank);
  return Letter(k / 2, (k % 2) ? -1 : 1);
}

Letter random_letter_except(Rng& rng, std::size_t rank, Letter avoid) {
  // 2*rank - 1 admissible letters; skip over the excluded one.
  auto k = rng.below(2 * rank - 1);
  const std::uint64_t skip = 2 * avoid.generator() + (avoid.sign() < 0 ? 1 : 0);
  if (k >= skip) ++k;
  return Letter(k / 2, (k % 2) ? -1 : 1);
}

namespace {

std::vector<Letter> all_letters(std::size_t rank) {
  std::vector<Letter> out;
  for (std::size_t k = 0; k < 2 * rank; ++k)
    out.emplace_back(k / 2, (k % 2) ? -1 : 1);
  return out;
}

}  // namespace

Word random_reduced_word(Rng& rng, std::size_t rank, std::size_t length) {
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(out.empty() ? random_letter(rng, rank)
                              : random_letter_except(rng, rank,
                                                     out.back().inverse()));
  }
  return Word::from_reduced(std::move(out));
}

Word random_cyclic_word(Rng& rng, std::size_t rank, std::size_t length) {
  if (length < 2) return random_reduced_word(rng, rank, length);
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t i = 0; i + 1 < length; ++i) {
    out.push_back(out.empty() ? random_letter(rng, rank)
                              : random_letter_except(rng, rank,
                                                     out.back().inverse()));
  }
  std::vector<Letter> choices;
  for (Letter l : all_letters(rank))
    if (!l.cancels(out.back()) && !l.cancels(out.front())) choices.push_back(l);
  out.push_back(choices[rng.below(choices.size())]);
  return Word::from_reduced(std::move(out));
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    auto n = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad rational");
    return Rational(n);
  }
  auto num_text = text.substr(0, slash);
  auto den_text = text.substr(slash + 1);
  auto n = std::stoll(num_text, &used);
  if (used != num_text.size()) throw std::invalid_argument("bad rational");
  auto d = std::stoll(den_text, &used);
  if (used != den_text.size() || d == 0)
    throw std::invalid_argument("bad rational");
  return Rational(n, d);
}

}  // namespace fbc
