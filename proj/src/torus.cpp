#include "fbc/torus.hpp"

#include <algorithm>

#include "fbc/random.hpp"

namespace fbc {

long GroupWord::t_exponent() const {
  long s = 0;
  for (auto l : letters_)
    if (l.is_t()) s += l.t_sign();
  return s;
}

std::size_t GroupWord::t_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(),
                    [](TorusLetter l) { return l.is_t(); }));
}

GroupWord GroupWord::slice(std::size_t first, std::size_t last) const {
  return GroupWord(std::vector<TorusLetter>(
      letters_.begin() + static_cast<std::ptrdiff_t>(first),
      letters_.begin() + static_cast<std::ptrdiff_t>(last)));
}

GroupWord invert(const GroupWord& w) {
  std::vector<TorusLetter> out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(w[i].inverse());
  return GroupWord(std::move(out));
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
  GroupWord out = u;
  out.append(v);
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  std::vector<TorusLetter> out;
  for (auto l : w) {
    if (!out.empty() && out.back().cancels(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return GroupWord(std::move(out));
}

GroupWord lift(const Word& w) {
  GroupWord out;
  out.append(w);
  return out;
}

GroupWord parse_group_word(const Alphabet& alphabet, std::string_view text,
                           std::string_view stable_name) {
  GroupWord out;
  auto tokens = tokenize(text);
  if (tokens.size() == 1 && tokens[0] == "1") return out;
  for (auto tok : tokens) {
    std::string_view base = tok;
    int sign = 1;
    if (base.ends_with("^-1")) {
      sign = -1;
      base.remove_suffix(3);
    } else if (base.ends_with("^1")) {
      base.remove_suffix(2);
    }
    if (base == stable_name) {
      out.push_back(TorusLetter::t(sign));
      continue;
    }
    std::size_t g = alphabet.find(base);
    if (g == alphabet.rank())
      throw SpecError("unknown token '" + std::string(tok) + "'");
    out.push_back(TorusLetter::f(Letter(g, sign)));
  }
  return out;
}

std::string format_group_word(const Alphabet& alphabet, const GroupWord& w,
                              std::string_view stable_name) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    if (w[i].is_t()) {
      out += stable_name;
      if (w[i].t_sign() < 0) out += "^-1";
    } else {
      out += alphabet.format(w[i].letter());
    }
  }
  return out;
}

std::string format_normal_form(const Alphabet& alphabet, const NormalForm& nf) {
  return "t^" + std::to_string(nf.t_exponent) + " · " +
         alphabet.format(nf.tail);
}

NormalFormRun solve(const GroupWord& w, const Automorphism& phi) {
  NormalFormRun run;
  long s = 0;
  std::vector<Letter> u;
  for (auto l : w) {
    if (l.is_t()) {
      // t^s u t^e = t^(s+e) phi^e(u)
      Word tail = Word::from_reduced(std::move(u));
      tail = l.t_sign() > 0 ? phi.apply(tail) : phi.apply_inverse(tail);
      u = tail.vec();
      s += l.t_sign();
    } else {
      push_reduced(u, l.letter());
    }
    run.peak_tail = std::max(run.peak_tail, u.size());
  }
  run.result = NormalForm{s, Word::from_reduced(std::move(u))};
  return run;
}

NormalForm normal_form(const GroupWord& w, const Automorphism& phi) {
  return solve(w, phi).result;
}

bool is_identity(const GroupWord& w, const Automorphism& phi) {
  return normal_form(w, phi).is_identity();
}

NormalForm multiply(const NormalForm& a, const NormalForm& b,
                    const Automorphism& phi) {
  // t^s1 u1 t^s2 u2 = t^(s1+s2) phi^s2(u1) u2
  return {a.t_exponent + b.t_exponent,
          concat(phi.apply_power(a.tail, b.t_exponent), b.tail)};
}

NormalForm group_inverse(const NormalForm& a, const Automorphism& phi) {
  // u^-1 t^-s = t^-s phi^-s(u^-1)
  return {-a.t_exponent, phi.apply_power(invert(a.tail), -a.t_exponent)};
}

GroupWord random_group_word(Rng& rng, std::size_t rank, std::size_t length,
                            double t_density) {
  GroupWord out;
  TorusLetter prev;
  for (std::size_t i = 0; i < length; ++i) {
    TorusLetter next;
    do {
      next = rng.chance(t_density)
                 ? TorusLetter::t(rng.below(2) ? -1 : 1)
                 : TorusLetter::f(random_letter(rng, rank));
    } while (i > 0 && next.cancels(prev));
    out.push_back(next);
    prev = next;
  }
  return out;
}

GroupWord random_null_word(const Automorphism& phi, std::uint64_t seed,
                           const NullWordShape& shape) {
  Rng rng(seed);
  std::size_t cap = shape.length_budget;
  while (cap > 0) {
    const std::size_t m = rng.between(1, cap);
    GroupWord v = random_group_word(rng, phi.rank(), m, shape.t_density);
    NormalForm nf = normal_form(v, phi);
    GroupWord out = v;
    out.append(invert(nf.tail));
    out.append_t(-nf.t_exponent);
    if (out.size() <= shape.length_budget) return out;
    cap = m - 1;
  }
  return {};
}

}  // namespace fbc
