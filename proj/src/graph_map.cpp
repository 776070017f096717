#include "fbc/graph_map.hpp"

#include <algorithm>
#include <numeric>

namespace fbc {

namespace {

Alphabet edge_names(const std::vector<GraphEdge>& edges) {
  std::vector<std::string> names;
  names.reserve(edges.size());
  for (const auto& e : edges) names.push_back(e.name);
  return Alphabet(std::move(names));
}

}  // namespace

MarkedGraph::MarkedGraph(std::vector<std::string> vertex_names,
                         std::vector<GraphEdge> edges)
    : vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)),
      edge_alphabet_(edge_names(edges_)),
      outgoing_(vertex_names_.size()) {
  if (vertex_names_.empty()) throw SpecError("graph has no vertices");
  for (const auto& v : vertex_names_)
    if (!is_generator_name(v))
      throw SpecError("invalid vertex name '" + v + "'");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.origin >= vertex_count() || e.terminus >= vertex_count())
      throw SpecError("edge '" + e.name + "' has an unknown endpoint");
    outgoing_[e.origin].emplace_back(i, 1);
    outgoing_[e.terminus].emplace_back(i, -1);
  }

  // Connectivity by union-find over edge endpoints.
  std::vector<std::size_t> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) parent[find(e.origin)] = find(e.terminus);
  for (std::size_t v = 1; v < vertex_count(); ++v)
    if (find(v) != find(0)) throw SpecError("graph is not connected");
}

MarkedGraph MarkedGraph::rose(const Alphabet& alphabet) {
  std::vector<GraphEdge> edges;
  for (const auto& n : alphabet.names()) edges.push_back({n, 0, 0});
  return MarkedGraph({"v"}, std::move(edges));
}

void check_composable(const MarkedGraph& g, std::size_t origin,
                      std::span<const Letter> edges) {
  if (origin >= g.vertex_count())
    throw PreconditionError("path starts at an unknown vertex");
  std::size_t at = origin;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].generator() >= g.edge_count())
      throw PreconditionError("path uses an unknown edge");
    if (g.origin(edges[i]) != at)
      throw PreconditionError("path is not composable at position " +
                              std::to_string(i));
    at = g.terminus(edges[i]);
  }
}

std::size_t path_terminus(const MarkedGraph& g, const EdgePath& p) {
  return p.edges.empty() ? p.origin : g.terminus(p.edges.back());
}

EdgePath reverse(const MarkedGraph& g, const EdgePath& p) {
  return {path_terminus(g, p), invert(p.edges)};
}

GraphMap::GraphMap(MarkedGraph graph, std::vector<std::size_t> vertex_images,
                   std::vector<Word> edge_images)
    : graph_(std::move(graph)),
      vertex_images_(std::move(vertex_images)),
      edge_images_(std::move(edge_images)) {
  if (vertex_images_.size() != graph_.vertex_count())
    throw SpecError("vertex_image must cover every vertex");
  if (edge_images_.size() != graph_.edge_count())
    throw SpecError("edge_image must cover every edge");
  for (auto v : vertex_images_)
    if (v >= graph_.vertex_count())
      throw SpecError("vertex_image names an unknown vertex");
  for (std::size_t i = 0; i < graph_.edge_count(); ++i) {
    const auto& name = graph_.edges()[i].name;
    const auto& img = edge_images_[i];
    if (img.empty())
      throw SpecError("edge_image of '" + name + "' is a point");
    try {
      check_composable(graph_, vertex_images_[graph_.edges()[i].origin],
                       img.letters());
    } catch (const PreconditionError&) {
      throw SpecError("edge_image of '" + name +
                      "' is not a path from the image of its origin");
    }
    if (graph_.terminus(img.back()) !=
        vertex_images_[graph_.edges()[i].terminus])
      throw SpecError("edge_image of '" + name +
                      "' does not end at the image of its terminus");
    lipschitz_ = std::max(lipschitz_, img.size());
  }
}

Word GraphMap::image(OrientedEdge e) const {
  const Word& w = edge_images_[e.generator()];
  return e.sign() > 0 ? w : invert(w);
}

GraphMap rose_of(const Automorphism& phi) {
  return GraphMap(MarkedGraph::rose(phi.alphabet()), {0}, phi.images());
}

std::vector<Letter> naive_image(const GraphMap& f, const EdgePath& sigma) {
  check_composable(f.graph(), sigma.origin, sigma.edges.letters());
  std::vector<Letter> out;
  for (Letter e : sigma.edges) {
    const auto& img = f.edge_image(e.generator()).vec();
    if (e.sign() > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return out;
}

EdgePath apply_tight(const GraphMap& f, const EdgePath& sigma) {
  return {f.vertex_image(sigma.origin), reduce(naive_image(f, sigma))};
}

std::vector<EdgePath> iterate(const GraphMap& f, const EdgePath& sigma,
                              std::size_t k) {
  check_composable(f.graph(), sigma.origin, sigma.edges.letters());
  std::vector<EdgePath> out;
  out.reserve(k + 1);
  out.push_back({sigma.origin, reduce(sigma.edges.letters())});
  for (std::size_t i = 0; i < k; ++i) out.push_back(apply_tight(f, out.back()));
  return out;
}

VanishingResult is_vanishing(const GraphMap& f, const EdgePath& sigma,
                             std::size_t k_max) {
  check_composable(f.graph(), sigma.origin, sigma.edges.letters());
  EdgePath cur{sigma.origin, reduce(sigma.edges.letters())};
  for (std::size_t j = 0;; ++j) {
    if (cur.is_trivial()) return {true, j};
    if (j == k_max) break;
    cur = apply_tight(f, cur);
  }
  return {false, std::nullopt};
}

VanishingResult is_vanishing(const GraphMap& f, const EdgePath& sigma) {
  return is_vanishing(f, sigma, 2 * f.graph().edge_count() + 1);
}

Presentation mapping_torus(const GraphMap& f) {
  const auto& g = f.graph();
  std::vector<std::string> names = g.edge_alphabet().names();
  const std::size_t t0 = names.size();
  for (const auto& v : g.vertex_names())
    names.push_back(g.vertex_count() == 1 ? std::string("t") : "t_" + v);

  Presentation p{Alphabet(std::move(names)), {}};
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    std::vector<Letter> rel;
    rel.emplace_back(t0 + e.origin, -1);
    rel.emplace_back(i, 1);
    rel.emplace_back(t0 + e.terminus, 1);
    const auto& u = f.edge_image(i).vec();
    for (auto it = u.rbegin(); it != u.rend(); ++it)
      rel.push_back(it->inverse());
    p.relators.push_back(std::move(rel));
  }
  return p;
}

}  // namespace fbc
