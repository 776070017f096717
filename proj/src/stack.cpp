#include "fbc/stack.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace fbc {

const std::vector<std::size_t>& StackDiagram::layer(std::size_t k) const {
  if (k > rows_.size()) throw std::out_of_range("layer out of range");
  return k == 0 ? rows_.front().bottom : rows_[k - 1].top;
}

std::vector<OrientedEdge> StackDiagram::layer_labels(std::size_t k) const {
  std::vector<OrientedEdge> out;
  for (auto id : layer(k)) out.push_back(edges_[id].label);
  return out;
}

std::vector<std::size_t> StackDiagram::children(std::size_t id) const {
  const auto& e = edge(id);
  std::vector<std::size_t> out;
  if (e.cancelled || e.layer >= rows_.size()) return out;
  for (auto c : rows_[e.layer].top)
    if (edges_[c].ancestor == id) out.push_back(c);
  return out;
}

namespace {

// Left-to-right stack cancellation over naive-top positions `order`.
// Returns survivors in order and appends cancelled pairs to the log.
std::vector<std::size_t> tighten_phase(const std::vector<DiagramEdge>& edges,
                                       const std::vector<std::size_t>& naive,
                                       const std::vector<std::size_t>& order,
                                       CancelPhase phase,
                                       std::vector<CancelledPair>& log) {
  std::vector<std::size_t> stack;
  for (auto pos : order) {
    if (!stack.empty() &&
        edges[naive[stack.back()]].label.cancels(edges[naive[pos]].label)) {
      auto lp = stack.back();
      stack.pop_back();
      const auto& a = edges[naive[lp]];
      const auto& b = edges[naive[pos]];
      log.push_back({a.id, b.id, lp, pos, phase, a.colour == b.colour});
    } else {
      stack.push_back(pos);
    }
  }
  return stack;
}

}  // namespace

StackDiagram build_stack(const GraphMap& f,
                         const std::vector<EdgePath>& segments, std::size_t l) {
  const auto& g = f.graph();
  std::vector<Letter> rho;
  std::vector<std::size_t> colour_of;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (s.is_trivial())
      throw PreconditionError("segment " + std::to_string(i) + " is empty");
    check_composable(g, s.origin, s.edges.letters());
    if (i > 0 && s.origin != path_terminus(g, segments[i - 1]))
      throw PreconditionError("segments " + std::to_string(i - 1) + " and " +
                              std::to_string(i) + " do not compose");
    rho.insert(rho.end(), s.edges.begin(), s.edges.end());
    colour_of.insert(colour_of.end(), s.size(), i);
  }
  if (reduce(rho).size() != rho.size())
    throw PreconditionError("concatenated path is not tight");

  std::vector<DiagramEdge> edges;
  std::vector<StackRow> rows;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    edges.push_back({edges.size(), rho[i], colour_of[i], std::nullopt, 0, false});
    current.push_back(edges.back().id);
  }

  for (std::size_t k = 0; k <= l; ++k) {
    StackRow row;
    row.bottom = current;

    // Naive top, and the naive-top position ranges of each colour block.
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t prev_colour = SIZE_MAX;
    for (auto id : row.bottom) {
      const DiagramEdge parent = edges[id];
      if (parent.colour != prev_colour) {
        blocks.emplace_back();
        prev_colour = parent.colour;
      }
      for (Letter x : f.image(parent.label)) {
        edges.push_back({edges.size(), x, parent.colour, id, k + 1, false});
        blocks.back().push_back(row.naive_top.size());
        row.naive_top.push_back(edges.back().id);
      }
    }

    std::vector<std::size_t> survivors;
    for (const auto& block : blocks) {
      auto s = tighten_phase(edges, row.naive_top, block,
                             CancelPhase::within_colour, row.log);
      survivors.insert(survivors.end(), s.begin(), s.end());
    }
    auto final_positions = tighten_phase(edges, row.naive_top, survivors,
                                         CancelPhase::across_colours, row.log);
    for (const auto& p : row.log) {
      edges[p.left].cancelled = true;
      edges[p.right].cancelled = true;
    }
    for (auto pos : final_positions) row.top.push_back(row.naive_top[pos]);
    current = row.top;
    rows.push_back(std::move(row));
  }
  return StackDiagram(std::move(edges), std::move(rows), segments.size(),
                      f.lipschitz());
}

std::vector<ColourInterval> colour_intervals(const StackDiagram& d,
                                             std::size_t layer) {
  const auto& ids = d.layer(layer);
  std::vector<ColourInterval> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto c = d.edge(ids[i]).colour;
    if (!out.empty() && out.back().colour == c && out.back().last + 1 == i)
      out.back().last = i;
    else
      out.push_back({c, layer, i, i});
  }
  return out;
}

std::vector<std::vector<std::size_t>> trace_future(const StackDiagram& d,
                                                   std::size_t id) {
  const auto& e = d.edge(id);
  std::vector<std::vector<std::size_t>> out;
  if (e.cancelled) return out;
  std::vector<std::size_t> frontier{id};
  for (std::size_t k = e.layer + 1; k < d.layer_count(); ++k) {
    std::vector<std::size_t> next;
    for (auto x : frontier) {
      auto ch = d.children(x);
      next.insert(next.end(), ch.begin(), ch.end());
    }
    out.push_back(next);
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::size_t> trace_past(const StackDiagram& d, std::size_t id) {
  std::vector<std::size_t> out;
  auto cur = d.edge(id).ancestor;
  while (cur) {
    out.push_back(*cur);
    cur = d.edge(*cur).ancestor;
  }
  return out;
}

CorridorLengths corridor_lengths(const StackDiagram& d) {
  CorridorLengths out;
  for (const auto& r : d.rows()) {
    out.per_row.push_back(r.bottom.size());
    out.max = std::max(out.max, r.bottom.size());
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> dying_intervals(
    const StackDiagram& d, std::size_t row) {
  const auto& r = d.rows().at(row);
  std::vector<bool> survives(r.bottom.size(), false);
  std::vector<std::size_t> pos_of(d.edges().size(), SIZE_MAX);
  for (std::size_t i = 0; i < r.bottom.size(); ++i) pos_of[r.bottom[i]] = i;
  for (auto id : r.top) survives[pos_of[*d.edge(id).ancestor]] = true;

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < survives.size(); ++i) {
    if (survives[i]) continue;
    if (!out.empty() && out.back().second + 1 == i)
      out.back().second = i;
    else
      out.emplace_back(i, i);
  }
  return out;
}

std::vector<EdgePath> tight_paths(const MarkedGraph& g, std::size_t max_len) {
  std::vector<EdgePath> out;
  std::vector<Letter> cur;
  std::size_t start = 0;
  auto extend = [&](auto&& self, std::size_t at) -> void {
    if (!cur.empty())
      out.push_back({start, Word::from_reduced(cur)});
    if (cur.size() == max_len) return;
    for (Letter e : g.outgoing(at)) {
      if (!cur.empty() && cur.back().cancels(e)) continue;
      cur.push_back(e);
      self(self, g.terminus(e));
      cur.pop_back();
    }
  };
  for (start = 0; start < g.vertex_count(); ++start) extend(extend, start);
  return out;
}

namespace {

void finish(BccEstimate& est) {
  const auto& b = est.by_depth;
  if (b.size() < 2 || b[b.size() - 1] != b[b.size() - 2]) return;
  std::size_t d = b.size();
  while (d > 1 && b[d - 2] == b.back()) --d;
  est.stabilized_at = d;
}

std::size_t oriented_index(Letter e) {
  return 2 * e.generator() + (e.sign() < 0 ? 1 : 0);
}

std::size_t common_prefix(const std::vector<Letter>& a,
                          const std::vector<Letter>& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

}  // namespace

BccEstimate estimate_bcc_serial(const GraphMap& f, std::size_t depth) {
  const auto& g = f.graph();
  auto paths = tight_paths(g, depth);
  std::vector<Word> images;
  for (const auto& p : paths) images.push_back(apply_tight(f, p).edges);

  BccEstimate est;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto& u = paths[i];
      if (u.size() > d) continue;
      for (std::size_t j = 0; j < paths.size(); ++j) {
        const auto& v = paths[j];
        if (v.size() > d) continue;
        if (path_terminus(g, u) != v.origin) continue;
        if (u.edges.back().cancels(v.edges.front())) continue;
        std::size_t joined = concat(images[i], images[j]).size();
        best = std::max(best,
                        (images[i].size() + images[j].size() - joined) / 2);
      }
    }
    est.by_depth.push_back(best + 1);
  }
  finish(est);
  return est;
}

BccEstimate estimate_bcc(const GraphMap& f, std::size_t depth) {
  const auto& g = f.graph();
  const std::size_t n_oriented = 2 * g.edge_count();
  auto paths = tight_paths(g, depth);

  struct Entry {
    std::vector<Letter> image;
    std::size_t length;
  };
  std::vector<Entry> all(paths.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < paths.size(); ++i)
    all[i] = {apply_tight(f, paths[i]).edges.vec(), paths[i].size()};

  BccEstimate est;
  for (std::size_t d = 1; d <= depth; ++d) {
    // Images of paths of length <= d, grouped by first oriented edge.
    std::vector<std::vector<const std::vector<Letter>*>> groups(n_oriented);
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (all[i].length <= d)
        groups[oriented_index(paths[i].edges.front())].push_back(&all[i].image);
    for (auto& grp : groups)
      std::sort(grp.begin(), grp.end(),
                [](auto* a, auto* b) { return *a < *b; });

    struct Probe {
      std::size_t from, to, item;
    };
    std::vector<Probe> probes;
    for (std::size_t a = 0; a < n_oriented; ++a) {
      Letter ea(a / 2, (a % 2) ? -1 : 1);
      for (std::size_t y = 0; y < n_oriented; ++y) {
        Letter ey(y / 2, (y % 2) ? -1 : 1);
        if (a == y || g.origin(ea) != g.origin(ey)) continue;
        for (std::size_t k = 0; k < groups[a].size(); ++k)
          probes.push_back({a, y, k});
      }
    }

    std::size_t best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
    for (std::size_t p = 0; p < probes.size(); ++p) {
      const auto& pr = probes[p];
      const auto& key = *groups[pr.from][pr.item];
      const auto& other = groups[pr.to];
      auto it = std::lower_bound(other.begin(), other.end(), &key,
                                 [](auto* a, auto* b) { return *a < *b; });
      if (it != other.end()) best = std::max(best, common_prefix(key, **it));
      if (it != other.begin())
        best = std::max(best, common_prefix(key, **std::prev(it)));
    }
    est.by_depth.push_back(best + 1);
  }
  finish(est);
  return est;
}

}  // namespace fbc
