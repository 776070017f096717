#include "fbc/words.hpp"

#include <algorithm>
#include <regex>
#include <unordered_set>

namespace fbc {

Word::Word(std::vector<Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter x : raw) push_reduced(letters_, x);
}

Word reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter x : raw) push_reduced(out, x);
  return Word::from_reduced(std::move(out));
}

CyclicReduction cyclic_reduce(const Word& w) {
  // Peel matching ends symmetrically; the peeled prefix is the conjugator.
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
    ++lo;
    --hi;
  }
  auto first = w.begin();
  return CyclicReduction{
      CyclicWord::from_cyclically_reduced(
          Word::from_reduced({first + static_cast<std::ptrdiff_t>(lo),
                              first + static_cast<std::ptrdiff_t>(hi)})),
      Word::from_reduced({first, first + static_cast<std::ptrdiff_t>(lo)})};
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  for (Letter x : v) push_reduced(out, x);
  return Word::from_reduced(std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.vec().rbegin(); it != u.vec().rend(); ++it)
    out.push_back(it->inverse());
  return Word::from_reduced(std::move(out));
}

Word rotate(const CyclicWord& w, std::size_t k) {
  const auto& v = w.word().vec();
  if (v.empty()) return {};
  k %= v.size();
  std::vector<Letter> out;
  out.reserve(v.size());
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return Word::from_reduced(std::move(out));
}

bool is_generator_name(std::string_view name) {
  static const std::regex pattern("[a-z][a-z0-9_]*");
  return std::regex_match(name.begin(), name.end(), pattern);
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !space(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_generator_name(n))
      throw SpecError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw SpecError("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::standard(std::size_t rank) {
  if (rank > 26) throw SpecError("standard alphabet supports rank <= 26");
  std::vector<std::string> names;
  for (std::size_t g = 0; g < rank; ++g)
    names.emplace_back(1, static_cast<char>('a' + g));
  return Alphabet(std::move(names));
}

std::size_t Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<Letter> Alphabet::parse_raw(std::string_view text) const {
  std::vector<Letter> out;
  auto tokens = tokenize(text);
  if (tokens.size() == 1 && tokens[0] == "1") return out;
  for (auto tok : tokens) {
    int sign = 1;
    std::string_view base = tok;
    if (base.ends_with("^-1")) {
      sign = -1;
      base.remove_suffix(3);
    } else if (base.ends_with("^1")) {
      base.remove_suffix(2);
    }
    std::size_t g = find(base);
    if (g == rank())
      throw SpecError("unknown token '" + std::string(tok) + "'");
    out.emplace_back(g, sign);
  }
  return out;
}

std::string Alphabet::format(Letter l) const {
  std::string s = name(l.generator());
  if (l.sign() < 0) s += "^-1";
  return s;
}

std::string Alphabet::format(std::span<const Letter> letters) const {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += format(letters[i]);
  }
  return out;
}

}  // namespace fbc
