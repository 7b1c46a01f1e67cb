#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lbp/grid.hpp"

namespace lbp {

/// A finite graph split into interior nodes and boundary nodes carrying fixed
/// +-1 values. Messages travel only on edges with at least one interior
/// endpoint; such an edge contributes two arcs (one per direction). Edges
/// between two boundary nodes are dropped at construction.
class GraphInstance {
 public:
  struct Arc {
    int from;
    int to;
  };

  /// `values[v]` is 0 for interior nodes and +-1 for boundary nodes.
  GraphInstance(std::vector<std::int8_t> values,
                const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(values_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  bool is_interior(int v) const { return values_[v] == 0; }
  int boundary_value(int v) const { return values_[v]; }
  int interior_count() const { return interior_count_; }

  const Arc& arc(int id) const { return arcs_[id]; }
  int reverse_arc(int id) const { return reverse_[id]; }
  const std::vector<int>& in_arcs(int v) const { return in_arcs_[v]; }
  const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }
  /// Arc id for from->to, or -1 when the arc does not exist.
  int arc_id(int from, int to) const;

  /// Undirected message-bearing edges (each arc pair once).
  std::vector<std::pair<int, int>> message_edges() const;

  /// Diameter of the undirected graph spanned by the message-bearing edges.
  /// Exact for trees (double sweep); the grid engine never needs it.
  int message_diameter() const;

 private:
  std::vector<std::int8_t> values_;
  std::vector<Arc> arcs_;
  std::vector<int> reverse_;
  std::vector<std::vector<int>> in_arcs_;
  std::vector<std::vector<int>> out_arcs_;
  int interior_count_ = 0;
};

/// Grid specialization: keeps the coord <-> vertex maps next to the generic
/// graph so traces can be addressed by lattice coordinates.
struct GridGraph {
  GridInstance grid;
  BoundaryConfig boundary;
  GraphInstance graph;

  static GridGraph build(const GridInstance& g, const BoundaryConfig& x);

  int vertex(Coord c) const { return c.b * grid.side() + c.a; }
  Coord coord(int v) const { return {v % grid.side(), v / grid.side()}; }
  /// Arc id for the directed lattice edge, -1 when that edge carries no message.
  int arc_id(Coord from, Coord to) const { return graph.arc_id(vertex(from), vertex(to)); }
  int arc_id(const DirectedEdge& e) const { return arc_id(e.from, e.to); }
};

}  // namespace lbp
