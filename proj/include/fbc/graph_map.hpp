#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/words.hpp"

namespace fbc {

// Oriented edges reuse Letter: Letter(e, +1) is edge e in its stored
// orientation, Letter(e, -1) its reverse. Edge paths are words over the edge
// alphabet, so tightening is free reduction.
using OrientedEdge = Letter;

struct GraphEdge {
  std::string name;
  std::size_t origin = 0;
  std::size_t terminus = 0;
};

/// A finite connected graph with a chosen orientation of each edge pair.
class MarkedGraph {
 public:
  MarkedGraph(std::vector<std::string> vertex_names,
              std::vector<GraphEdge> edges);
  /// One vertex, `alphabet.rank()` loops.
  static MarkedGraph rose(const Alphabet& alphabet);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const Alphabet& edge_alphabet() const { return edge_alphabet_; }

  std::size_t origin(OrientedEdge e) const {
    const auto& g = edges_[e.generator()];
    return e.sign() > 0 ? g.origin : g.terminus;
  }
  std::size_t terminus(OrientedEdge e) const { return origin(e.inverse()); }

  /// Oriented edges leaving vertex v.
  const std::vector<OrientedEdge>& outgoing(std::size_t v) const {
    return outgoing_[v];
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<GraphEdge> edges_;
  Alphabet edge_alphabet_;
  std::vector<std::vector<OrientedEdge>> outgoing_;
};

/// An edge path with an explicit start vertex, so trivial paths still
/// have a location.
struct EdgePath {
  std::size_t origin = 0;
  Word edges;

  bool is_trivial() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Throws PreconditionError unless consecutive edges compose and the first
/// edge leaves `origin`.
void check_composable(const MarkedGraph& g, std::size_t origin,
                      std::span<const Letter> edges);
std::size_t path_terminus(const MarkedGraph& g, const EdgePath& p);
EdgePath reverse(const MarkedGraph& g, const EdgePath& p);

/// A cellular map f: G -> G sending vertices to vertices and each edge to a
/// nonempty tight edge path.
class GraphMap {
 public:
  /// `edge_images[e]` is the image of edge e in its stored orientation.
  /// Throws SpecError on endpoint mismatch, non-tight or empty images.
  GraphMap(MarkedGraph graph, std::vector<std::size_t> vertex_images,
           std::vector<Word> edge_images);

  const MarkedGraph& graph() const { return graph_; }
  std::size_t vertex_image(std::size_t v) const { return vertex_images_[v]; }
  const std::vector<std::size_t>& vertex_images() const {
    return vertex_images_;
  }
  const Word& edge_image(std::size_t e) const { return edge_images_[e]; }
  const std::vector<Word>& edge_images() const { return edge_images_; }
  /// Image of an oriented edge (reversed for the -1 orientation).
  Word image(OrientedEdge e) const;
  /// max |edge_image(e)|.
  std::size_t lipschitz() const { return lipschitz_; }

 private:
  MarkedGraph graph_;
  std::vector<std::size_t> vertex_images_;
  std::vector<Word> edge_images_;
  std::size_t lipschitz_ = 0;
};

/// The one-vertex realisation of an automorphism.
GraphMap rose_of(const Automorphism& phi);

/// f_#(sigma): images concatenated and tightened. Throws PreconditionError
/// if sigma is not a path in f's graph.
EdgePath apply_tight(const GraphMap& f, const EdgePath& sigma);

/// Untightened concatenation of edge images, validated like apply_tight.
std::vector<Letter> naive_image(const GraphMap& f, const EdgePath& sigma);

/// [sigma, f_#(sigma), ..., f_#^k(sigma)]. Element 0 is sigma tightened.
std::vector<EdgePath> iterate(const GraphMap& f, const EdgePath& sigma,
                              std::size_t k);

struct VanishingResult {
  bool vanishes = false;
  std::optional<std::size_t> first_step;
};

/// Whether f_#^j(sigma) is trivial for some 0 <= j <= k_max, and the least
/// such j. Step 0 is sigma itself after tightening.
VanishingResult is_vanishing(const GraphMap& f, const EdgePath& sigma,
                             std::size_t k_max);
/// k_max defaults to 2 * edge_count + 1.
VanishingResult is_vanishing(const GraphMap& f, const EdgePath& sigma);

/// Presentation of the mapping torus: generators are the edges of G then one
/// t_v per vertex; one relator t_v^-1 e t_v' u^-1 per edge e: v -> v' with
/// u = f(e).
struct Presentation {
  Alphabet generators;
  std::vector<std::vector<Letter>> relators;  // cyclic words, not reduced

  std::string format_relator(std::size_t i) const {
    return generators.format(relators[i]);
  }
};

Presentation mapping_torus(const GraphMap& f);

}  // namespace fbc
