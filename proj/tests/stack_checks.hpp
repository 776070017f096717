#pragma once

// Structural invariants of a stack diagram, shared by the unit tests and the
// acceptance runner. Each check returns an empty string on success.

#include <set>
#include <string>

#include "fbc/stack.hpp"
#include "oracles.hpp"

namespace stack_checks {

inline std::string check_all(const fbc::GraphMap& f, const fbc::StackDiagram& d) {
  const auto& edges = d.edges();
  for (const auto& e : edges) {
    if (e.layer == 0) {
      if (e.ancestor) return "layer-0 edge " + std::to_string(e.id) + " has a parent";
      continue;
    }
    if (!e.ancestor) return "edge " + std::to_string(e.id) + " has no parent";
    const auto& p = d.edge(*e.ancestor);
    if (p.id >= e.id || p.layer + 1 != e.layer)
      return "ancestry of edge " + std::to_string(e.id) + " is not a forest";
    if (p.cancelled) return "cancelled edge " + std::to_string(p.id) + " has children";
    if (p.colour != e.colour) return "colour changed along ancestry";
  }

  for (std::size_t k = 0; k < d.layer_count(); ++k) {
    std::set<std::size_t> seen;
    std::size_t last_colour = 0;
    for (const auto& ci : fbc::colour_intervals(d, k)) {
      if (!seen.insert(ci.colour).second)
        return "colour " + std::to_string(ci.colour) + " split in layer " +
               std::to_string(k);
      if (!seen.empty() && ci.colour < last_colour)
        return "colour order broken in layer " + std::to_string(k);
      last_colour = ci.colour;
    }
  }

  for (std::size_t k = 0; k < d.rows().size(); ++k) {
    const auto& r = d.rows()[k];
    const auto row = "row " + std::to_string(k) + ": ";
    if (r.top.size() > d.lipschitz() * r.bottom.size()) return row + "|top| > L|bottom|";
    std::size_t naive = 0;
    for (auto id : r.bottom) naive += f.image(d.edge(id).label).size();
    if (naive != r.naive_top.size()) return row + "naive top has wrong size";
    if (r.naive_top.size() != r.top.size() + 2 * r.log.size())
      return row + "edge count not conserved";
    std::set<std::size_t> dead;
    for (const auto& p : r.log) {
      if (p.left_pos >= p.right_pos) return row + "log pair out of order";
      if (r.naive_top[p.left_pos] != p.left || r.naive_top[p.right_pos] != p.right)
        return row + "log positions disagree with ids";
      if (!d.edge(p.left).label.cancels(d.edge(p.right).label))
        return row + "log pairs non-inverse labels";
      if (!d.edge(p.left).cancelled || !d.edge(p.right).cancelled)
        return row + "logged edge not flagged cancelled";
      dead.insert(p.left);
      dead.insert(p.right);
      for (const auto& q : r.log) {
        bool crosses = (p.left_pos < q.left_pos && q.left_pos < p.right_pos &&
                        p.right_pos < q.right_pos);
        if (crosses) return row + "cancellation log crosses";
      }
    }
    if (dead.size() != 2 * r.log.size()) return row + "edge cancelled twice";
    // Everything strictly inside a cancelled pair must cancel too.
    for (const auto& p : r.log)
      for (auto pos = p.left_pos + 1; pos < p.right_pos; ++pos)
        if (!dead.count(r.naive_top[pos])) return row + "survivor inside a pair";
    oracle::Codes bottom_img;
    for (auto id : r.bottom) {
      auto img = oracle::codes(f.image(d.edge(id).label));
      bottom_img.insert(bottom_img.end(), img.begin(), img.end());
    }
    oracle::Codes top;
    for (auto id : r.top) top.push_back(d.edge(id).label.code());
    if (oracle::pair_delete(bottom_img) != top) return row + "top is not f_# of bottom";
    if (k + 1 < d.rows().size() && d.rows()[k + 1].bottom != r.top)
      return row + "next bottom differs from top";
  }
  return {};
}

}  // namespace stack_checks
