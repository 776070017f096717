#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fbc/graph_map.hpp"

namespace fbc {

/// An edge of a stack diagram. Layer 0 is the bottom of the first corridor;
/// layer k+1 is the top of corridor k. Edges that cancel while tightening a
/// naive top keep an id (they appear in the cancellation log) but are
/// flagged `cancelled` and belong to no layer.
struct DiagramEdge {
  std::size_t id = 0;
  OrientedEdge label;
  std::size_t colour = 0;
  std::optional<std::size_t> ancestor;
  std::size_t layer = 0;
  bool cancelled = false;
};

enum class CancelPhase { within_colour, across_colours };

struct CancelledPair {
  std::size_t left = 0;   // edge ids
  std::size_t right = 0;
  std::size_t left_pos = 0;  // positions in the row's naive top
  std::size_t right_pos = 0;
  CancelPhase phase = CancelPhase::within_colour;
  bool same_colour = true;
};

/// One corridor: bottom, the untightened image of the bottom, and the top.
struct StackRow {
  std::vector<std::size_t> bottom;
  std::vector<std::size_t> naive_top;
  std::vector<std::size_t> top;
  std::vector<CancelledPair> log;
};

class StackDiagram {
 public:
  StackDiagram(std::vector<DiagramEdge> edges, std::vector<StackRow> rows,
               std::size_t colours, std::size_t lipschitz)
      : edges_(std::move(edges)),
        rows_(std::move(rows)),
        colours_(colours),
        lipschitz_(lipschitz) {}

  const std::vector<StackRow>& rows() const { return rows_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  /// Throws std::out_of_range for an unknown id.
  const DiagramEdge& edge(std::size_t id) const { return edges_.at(id); }
  std::size_t colour_count() const { return colours_; }
  std::size_t lipschitz() const { return lipschitz_; }

  /// Number of layers: rows().size() + 1.
  std::size_t layer_count() const { return rows_.size() + 1; }
  /// Edge ids of layer k, left to right.
  const std::vector<std::size_t>& layer(std::size_t k) const;
  std::vector<OrientedEdge> layer_labels(std::size_t k) const;
  /// Surviving edges whose ancestor is `id`.
  std::vector<std::size_t> children(std::size_t id) const;

 private:
  std::vector<DiagramEdge> edges_;
  std::vector<StackRow> rows_;
  std::size_t colours_ = 0;
  std::size_t lipschitz_ = 0;
};

/// Simulates the stack of corridors with bottom rho = segments[0] ...
/// segments[k-1] (segment i gets colour i) for rows 0..l: row j has bottom
/// f_#^j(rho). Each top is tightened in two left-to-right phases: first the
/// image of each colour on its own, then the concatenation.
/// Throws PreconditionError if a segment is empty or the concatenation is
/// not a tight path.
StackDiagram build_stack(const GraphMap& f, const std::vector<EdgePath>& segments,
                         std::size_t l);

struct ColourInterval {
  std::size_t colour = 0;
  std::size_t layer = 0;
  std::size_t first = 0;  // inclusive positions within the layer
  std::size_t last = 0;

  friend bool operator==(const ColourInterval&, const ColourInterval&) = default;
};

/// Maximal monochromatic intervals of a layer, left to right.
std::vector<ColourInterval> colour_intervals(const StackDiagram& d,
                                             std::size_t layer);

/// Surviving descendants of an edge, one entry per later layer (possibly
/// empty once the future dies). Throws std::out_of_range for unknown ids.
std::vector<std::vector<std::size_t>> trace_future(const StackDiagram& d,
                                                   std::size_t id);
/// Ancestors of an edge, nearest first; empty for boundary-born edges.
std::vector<std::size_t> trace_past(const StackDiagram& d, std::size_t id);

struct CorridorLengths {
  std::vector<std::size_t> per_row;  // bottom length of each corridor
  std::size_t max = 0;
};

CorridorLengths corridor_lengths(const StackDiagram& d);

/// Maximal intervals [first, last] of row `row`'s bottom in which every edge
/// has no surviving child.
std::vector<std::pair<std::size_t, std::size_t>> dying_intervals(
    const StackDiagram& d, std::size_t row);

/// Empirical bounded-cancellation estimate. by_depth[d-1] is
/// 1 + max cancellation between f_#(u) and f_#(v) over tight u.v with
/// |u|, |v| <= d.
struct BccEstimate {
  std::vector<std::size_t> by_depth;
  /// Least depth from which the estimate stays constant through the last
  /// computed depth, provided the last two depths agree.
  std::optional<std::size_t> stabilized_at;

  std::size_t value() const { return by_depth.empty() ? 1 : by_depth.back(); }
  bool stabilized() const { return stabilized_at.has_value(); }
};

inline constexpr std::size_t kDefaultBccDepth = 4;

/// Sort-and-probe kernel: cancellation between f_#(u) and f_#(v) is the
/// common prefix of f_#(u^-1) and f_#(v), so only neighbours in sorted order
/// need comparing. Parallel over probes.
BccEstimate estimate_bcc(const GraphMap& f, std::size_t depth);

/// Reference implementation: every composable tight pair, tightened
/// directly. Quadratic in the number of paths.
BccEstimate estimate_bcc_serial(const GraphMap& f, std::size_t depth);

/// All tight paths of length 1..max_len in f's graph.
std::vector<EdgePath> tight_paths(const MarkedGraph& g, std::size_t max_len);

}  // namespace fbc
