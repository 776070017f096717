#include "fbc/powers.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace fbc {

const char* to_string(PieceKind k) {
  switch (k) {
    case PieceKind::flat: return "flat";
    case PieceKind::up_bump: return "up-bump";
    case PieceKind::down_bump: return "down-bump";
    case PieceKind::up_step: return "up-step";
    case PieceKind::down_step: return "down-step";
  }
  return "?";
}

namespace {

bool divisible(long h, std::size_t p) {
  return h % static_cast<long>(p) == 0;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace

std::size_t two_sided_lipschitz(const Automorphism& phi) {
  return std::max(phi.lipschitz(), phi.inverse_lipschitz());
}

LatticeDecomposition lattice_decompose(const GroupWord& w, std::size_t p) {
  if (p == 0) throw PreconditionError("p must be at least 1");
  if (!divisible(w.t_exponent(), p))
    throw PreconditionError("final height " + std::to_string(w.t_exponent()) +
                            " is not a multiple of p = " + std::to_string(p));
  LatticeDecomposition d{w, p, {}};
  long h = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    LatticePiece piece;
    piece.begin = i;
    piece.start_height = h;
    if (!w[i].is_t()) {
      while (i < w.size() && !w[i].is_t()) ++i;
      piece.kind = PieceKind::flat;
    } else {
      const int first = w[i].t_sign();
      do {
        if (w[i].is_t()) h += w[i].t_sign();
        ++i;
      } while (i < w.size() && !(w[i - 1].is_t() && divisible(h, p)));
      if (h == piece.start_height)
        piece.kind = first > 0 ? PieceKind::up_bump : PieceKind::down_bump;
      else
        piece.kind = h > piece.start_height ? PieceKind::up_step
                                            : PieceKind::down_step;
    }
    piece.end = i;
    piece.end_height = h;
    d.pieces.push_back(piece);
  }
  return d;
}

std::uint64_t corridor_bound(const LatticeDecomposition& d,
                             const Automorphism& phi) {
  std::size_t longest = 0;
  for (const auto& piece : d.pieces)
    if (!piece.is_flat()) longest = std::max(longest, piece.size());
  if (longest == 0) return 0;
  return saturating_mul(saturating_pow(two_sided_lipschitz(phi), d.p - 1),
                        longest);
}

GroupWord expand_tau(const GroupWord& w, std::size_t p) {
  GroupWord out;
  for (auto l : w) {
    if (l.is_t())
      out.append_t(static_cast<long>(p) * l.t_sign());
    else
      out.push_back(l);
  }
  return out;
}

PowerRewrite rewrite_power(const GroupWord& w, const Automorphism& phi,
                           std::size_t p) {
  auto d = lattice_decompose(w, p);
  PowerRewrite r;
  r.original = w;
  r.p = p;
  r.lipschitz = two_sided_lipschitz(phi);

  // phi^k(x) for |k| < p, cached per (letter code, k).
  std::map<std::pair<std::int32_t, long>, Word> cache;
  auto pushed = [&](Letter x, long k) -> const Word& {
    auto key = std::make_pair(x.code(), k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, phi.letter_power(x, k)).first;
    return it->second;
  };

  for (const auto& piece : d.pieces) {
    if (piece.is_flat()) {
      for (std::size_t i = piece.begin; i < piece.end; ++i)
        r.tilde.push_back(w[i]);
      continue;
    }
    // Every free letter at height h is moved to the target height H of the
    // piece: t^h a t^-h = t^H phi^(H-h)(a) t^-H.
    const long target = piece.is_step() ? piece.end_height : piece.start_height;
    std::vector<Letter> u;
    long h = piece.start_height;
    for (std::size_t i = piece.begin; i < piece.end; ++i) {
      if (w[i].is_t()) {
        h += w[i].t_sign();
        continue;
      }
      for (Letter y : pushed(w[i].letter(), target - h)) push_reduced(u, y);
    }
    if (piece.is_step())
      r.tilde.append_t(piece.end_height - piece.start_height);
    r.tilde.append(Word::from_reduced(std::move(u)));
  }

  // Left to right, each run of p equal-signed t-letters becomes tau^{+-1}.
  GroupWord tokens;
  for (std::size_t i = 0; i < r.tilde.size();) {
    if (!r.tilde[i].is_t()) {
      tokens.push_back(r.tilde[i++]);
      continue;
    }
    const int sign = r.tilde[i].t_sign();
    std::size_t run = 0;
    while (run < p && i + run < r.tilde.size() && r.tilde[i + run].is_t() &&
           r.tilde[i + run].t_sign() == sign)
      ++run;
    if (run != p)
      throw std::logic_error("rewritten word has a t-run not divisible by p");
    tokens.push_back(TorusLetter::t(sign));
    i += p;
  }
  r.result = free_reduce(tokens);

  r.corridor_bound = corridor_bound(d, phi);
  r.length_bound = saturating_mul(saturating_pow(r.lipschitz, p - 1), w.size());
  r.length_ok =
      r.result.size() <= r.tilde.size() && r.tilde.size() <= r.length_bound;
  r.equal_in_group =
      is_identity(concat(w, invert(r.tilde)), phi) &&
      is_identity(concat(w, invert(expand_tau(r.result, p))), phi);
  return r;
}

}  // namespace fbc
