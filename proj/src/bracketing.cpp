#include "fbc/bracketing.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include <omp.h>

namespace fbc {

namespace {

Word content_of(const GroupWord& w, std::size_t open, std::size_t close,
                const Automorphism& phi) {
  return normal_form(w.slice(open, close + 1), phi).tail;
}

std::string range_str(const Bracket& b) {
  return "(" + std::to_string(b.open) + "," + std::to_string(b.close) + ")";
}

using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

// All non-crossing perfect matchings of t-positions pos[lo, hi) that pair
// opposite signs. Pairs are indices into `pos`.
void enumerate_matchings(const std::vector<std::size_t>& pos,
                         const GroupWord& w, std::size_t lo, std::size_t hi,
                         Matching& current, std::vector<Matching>& out) {
  if (lo == hi) {
    out.push_back(current);
    return;
  }
  for (std::size_t j = lo + 1; j < hi; j += 2) {
    if (w[pos[lo]].t_sign() == w[pos[j]].t_sign()) continue;
    // Inner range [lo+1, j) and outer range [j+1, hi) are independent.
    std::vector<Matching> inner;
    Matching scratch;
    enumerate_matchings(pos, w, lo + 1, j, scratch, inner);
    for (auto& in : inner) {
      std::size_t mark = current.size();
      current.emplace_back(lo, j);
      current.insert(current.end(), in.begin(), in.end());
      enumerate_matchings(pos, w, j + 1, hi, current, out);
      current.resize(mark);
    }
  }
}

}  // namespace

Bracketing canonical_bracketing(const GroupWord& w, const Automorphism& phi) {
  if (!is_identity(w, phi))
    throw PreconditionError("word does not represent the identity");
  Bracketing b{w, {}};
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_t()) continue;
    if (!stack.empty() && w[stack.back()].cancels(w[i])) {
      b.brackets.push_back({stack.back(), i, {}});
      stack.pop_back();
    } else {
      stack.push_back(i);
    }
  }
  std::sort(b.brackets.begin(), b.brackets.end(),
            [](const Bracket& x, const Bracket& y) { return x.open < y.open; });
  for (auto& br : b.brackets)
    br.content_value = content_of(w, br.open, br.close, phi);
  return b;
}

BracketingReport validate(const Bracketing& b, const Automorphism& phi) {
  BracketingReport r;
  const auto& w = b.word;
  const auto& br = b.brackets;

  for (const auto& x : br) {
    if (x.open >= x.close || x.close >= w.size() || !w[x.open].is_t() ||
        !w[x.close].is_t() || w[x.open].t_sign() == w[x.close].t_sign()) {
      r.sentinels = false;
      r.issues.push_back("bad sentinels " + range_str(x));
    }
  }
  if (!r.sentinels) {
    // Nothing further is meaningful on out-of-range or non-t sentinels.
    r.compatible = r.t_complete = r.contents = false;
    return r;
  }

  for (std::size_t i = 0; i < br.size(); ++i) {
    for (std::size_t j = i + 1; j < br.size(); ++j) {
      const auto& x = br[i];
      const auto& y = br[j];
      bool disjoint = x.close < y.open || y.close < x.open;
      bool nested = (x.open <= y.open && y.close <= x.close) ||
                    (y.open <= x.open && x.close <= y.close);
      if (!disjoint && !nested) {
        r.compatible = false;
        r.issues.push_back("crossing brackets " + range_str(x) + " " +
                           range_str(y));
      }
    }
  }

  std::vector<int> uses(w.size(), 0);
  for (const auto& x : br) {
    ++uses[x.open];
    ++uses[x.close];
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_t() && uses[i] != 1) {
      r.t_complete = false;
      r.issues.push_back("t at position " + std::to_string(i) + " is a sentinel of " +
                         std::to_string(uses[i]) + " brackets");
    }
  }

  if (r.compatible && r.t_complete) {
    // Evaluate bottom-up along the nesting: process brackets by increasing
    // width, so children are known when their parent is evaluated.
    std::vector<std::size_t> order(br.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
      return br[a].close - br[a].open < br[c].close - br[c].open;
    });
    std::map<std::size_t, std::pair<std::size_t, Word>> value_at_open;
    for (auto idx : order) {
      const auto& x = br[idx];
      std::vector<Letter> interior;
      for (std::size_t i = x.open + 1; i < x.close;) {
        if (w[i].is_t()) {
          const auto& [close, v] = value_at_open.at(i);
          for (Letter l : v) push_reduced(interior, l);
          i = close + 1;
        } else {
          push_reduced(interior, w[i].letter());
          ++i;
        }
      }
      Word inner = Word::from_reduced(std::move(interior));
      // t^e X t^-e = phi^-e(X)
      Word v = phi.apply_power(inner, -w[x.open].t_sign());
      if (v != x.content_value) {
        r.contents = false;
        r.issues.push_back("content mismatch at " + range_str(x));
      }
      value_at_open[x.open] = {x.close, std::move(v)};
    }
  } else {
    for (const auto& x : br) {
      NormalForm nf = normal_form(w.slice(x.open, x.close + 1), phi);
      if (nf.t_exponent != 0 || nf.tail != x.content_value) {
        r.contents = false;
        r.issues.push_back("content mismatch at " + range_str(x));
      }
    }
  }
  return r;
}

Rational content_bound_ratio(const Bracketing& b) {
  if (b.word.empty())
    throw PreconditionError("content ratio is undefined for the empty word");
  std::size_t best = 0;
  for (const auto& x : b.brackets) best = std::max(best, x.content_value.size());
  return Rational(static_cast<std::int64_t>(best),
                  static_cast<std::int64_t>(b.word.size()));
}

OracleResult optimal_bracketing_oracle(const GroupWord& w,
                                       const Automorphism& phi) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].is_t()) pos.push_back(i);
  if (pos.size() > kOracleMaxTLetters)
    throw PreconditionError("oracle is limited to " +
                            std::to_string(kOracleMaxTLetters) + " t-letters");
  if (!is_identity(w, phi))
    throw PreconditionError("word does not represent the identity");

  // Contents of every admissible pair, computed once.
  const std::size_t m = pos.size();
  std::vector<std::vector<std::optional<Word>>> content(
      m, std::vector<std::optional<Word>>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; c += 2)
      if (w[pos[a]].t_sign() != w[pos[c]].t_sign())
        content[a][c] = content_of(w, pos[a], pos[c], phi);

  auto score = [&](const Matching& mt) {
    std::size_t s = 0;
    for (auto [a, c] : mt) s = std::max(s, content[a][c]->size());
    return s;
  };
  auto sorted = [](Matching mt) {
    std::sort(mt.begin(), mt.end());
    return mt;
  };

  // Split the search over the partner of the first t-letter.
  std::vector<std::size_t> partners;
  for (std::size_t j = 1; j < m; j += 2)
    if (w[pos[0]].t_sign() != w[pos[j]].t_sign()) partners.push_back(j);

  struct Best {
    std::optional<Matching> matching;
    std::size_t score = 0;
    std::size_t count = 0;
  };
  std::vector<Best> per_branch(partners.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < partners.size(); ++k) {
    const std::size_t j = partners[k];
    std::vector<Matching> inner, all;
    Matching scratch;
    enumerate_matchings(pos, w, 1, j, scratch, inner);
    for (auto& in : inner) {
      Matching cur{{0, j}};
      cur.insert(cur.end(), in.begin(), in.end());
      enumerate_matchings(pos, w, j + 1, m, cur, all);
    }
    Best& b = per_branch[k];
    for (auto& mt : all) {
      ++b.count;
      auto s = score(mt);
      auto ms = sorted(mt);
      if (!b.matching || s < b.score || (s == b.score && ms < *b.matching)) {
        b.matching = std::move(ms);
        b.score = s;
      }
    }
  }

  Best best;
  if (m == 0) {
    best.matching = Matching{};
    best.count = 1;
  }
  for (auto& b : per_branch) {
    best.count += b.count;
    if (!b.matching) continue;
    if (!best.matching || b.score < best.score ||
        (b.score == best.score && *b.matching < *best.matching)) {
      best.matching = b.matching;
      best.score = b.score;
    }
  }

  OracleResult out;
  out.best.word = w;
  for (auto [a, c] : *best.matching)
    out.best.brackets.push_back({pos[a], pos[c], *content[a][c]});
  out.ratio = w.empty() ? Rational(0) : content_bound_ratio(out.best);
  out.matchings = best.count;
  return out;
}

}  // namespace fbc
