#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lbp/engine.hpp"
#include "lbp/graph.hpp"

namespace lbp {

/// Axis-aligned cell rectangle with both corners in the interior.
struct Rectangle {
  Coord lo, hi;  // lo <= hi componentwise

  Rectangle(Coord u, Coord v)
      : lo{std::min(u.a, v.a), std::min(u.b, v.b)}, hi{std::max(u.a, v.a), std::max(u.b, v.b)} {}

  bool contains(Coord c) const {
    return c.a >= lo.a && c.a <= hi.a && c.b >= lo.b && c.b <= hi.b;
  }
  int cell_count() const { return (hi.a - lo.a + 1) * (hi.b - lo.b + 1); }
  std::vector<Coord> cells() const;  // row-major from lo

  std::optional<Rectangle> intersect(const Rectangle& other) const;
};

/// Anchored rectangle with two outgoing directions: the far corner must sit in
/// the closed cone spanned by the two (orthogonal) direction vectors at the
/// anchor.
struct CompatibleTuple {
  Coord anchor;  // i1
  Coord far;     // i2
  Direction d1, d2;
};

bool is_compatible(const GridInstance& g, const CompatibleTuple& t);

/// Cells of the tuple's rectangle within L1 distance radius-1 of the anchor;
/// covers the whole rectangle once radius >= 2N-1.
std::vector<Coord> cut_rectangle(const CompatibleTuple& t, int radius);

/// The anchor's row and column clipped to the rectangle.
std::vector<Coord> l_region(const CompatibleTuple& t);

/// Directed edges entering S from direction D: tails outside S whose D-step
/// head lands in S. Tails may be boundary or interior nodes.
std::vector<DirectedEdge> messages_received_by(const GridInstance& g, const std::set<Coord>& s,
                                               Direction d);

/// Directed edges leaving S in direction D (heads inside or outside S).
std::vector<DirectedEdge> messages_sent_from(const GridInstance& g, const std::set<Coord>& s,
                                             Direction d);

/// Does every message received by the tuple's rectangle from its two
/// directions equal sigma at every iteration in [n0, trace end]?
bool check_fc(const GridGraph& gg, const Trace& trace, const CompatibleTuple& t, int sigma,
              int n0);

struct ConclusionViolation {
  DirectedEdge edge;
  int n = 0;
  int value = 0;
};

struct FcVerification {
  bool hypothesis_holds = false;
  bool conclusion_checked = false;  // trace long enough for a nonempty window
  bool conclusion_holds = false;
  std::optional<ConclusionViolation> first_violation;
  int checks = 0;  // (arc, iteration) pairs examined
};

/// Hypothesis: constant sigma received from both directions on [n0, n_max].
/// Conclusion: each cell at L1 distance l from the anchor sends sigma in both
/// directions at every n in [n0 + l + 1, n_max]; in particular the whole
/// rectangle does so from n0 + 2N - 1 on.
FcVerification verify_fc(const GridGraph& gg, const Trace& trace, const CompatibleTuple& t,
                         int sigma, int n0);

/// The direction missing from the union of the two tuples' direction sets,
/// when the sets share exactly one member.
std::optional<Direction> bc_direction(const CompatibleTuple& t1, const CompatibleTuple& t2);

/// Structural validity plus both FC hypotheses.
bool check_bc(const GridGraph& gg, const Trace& trace, const CompatibleTuple& t1,
              const CompatibleTuple& t2, int sigma, int n0);

struct BcVerification {
  bool structure_ok = false;
  bool hypotheses_hold = false;
  bool intersection_empty = false;  // conclusion vacuous
  bool conclusion_checked = false;
  bool conclusion_holds = false;
  std::optional<ConclusionViolation> first_violation;
  int checks = 0;
};

/// Conclusion: the rectangle intersection sends sigma in the missing direction
/// at every n in [n0 + 2N, n_max].
BcVerification verify_bc(const GridGraph& gg, const Trace& trace, const CompatibleTuple& t1,
                         const CompatibleTuple& t2, int sigma, int n0);

struct LemmaSweepStats {
  int tuples_considered = 0;   // compatible tuples times sigma choices
  int fc_hypotheses = 0;       // hypotheses satisfied at n0 = 0
  int fc_conclusions_ok = 0;
  int bc_pairs = 0;            // deduplicated valid pairs with both hypotheses
  int bc_vacuous = 0;
  int bc_conclusions_ok = 0;
  std::vector<std::string> violations;
};

/// Enumerates every compatible tuple and sigma, filters by the FC hypothesis
/// at n0 = 0, verifies all satisfied FC conclusions (with the distance-graded
/// deadlines) and all induced BC conclusions.
LemmaSweepStats lemma_sweep_boundary(const GridGraph& gg, int n_max);

}  // namespace lbp
