#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lbp/grid.hpp"
#include "lbp/oracle.hpp"

namespace lbp {

using CoordSet = std::set<Coord>;

struct ShortestPathSet {
  int length = 0;                         // node count k of a shortest path
  std::uint64_t path_count = 0;           // saturating
  std::vector<std::vector<Coord>> paths;  // lexicographic order by node sequence
};

/// All minimum-length paths between the endpoints of the run of the given
/// sign. Steps may pass through interior sites or boundary sites carrying the
/// same sign. Minimum-length paths are automatically simple and induced.
/// Throws when the number of paths exceeds `cap`.
ShortestPathSet shortest_simple_paths(const GridInstance& g, const BoundaryConfig& x, int sign,
                                      std::uint64_t cap = 1'000'000);

/// Nodes strictly inside a simple closed lattice curve, given as an ordered
/// cycle of nodes (consecutive entries adjacent, last adjacent to first, all
/// distinct). Computed by flood fill on the half-step refinement, which is
/// exact for unit-edge curves.
CoordSet enclosed_nodes(const GridInstance& g, const std::vector<Coord>& cycle);

struct SignRegions {
  int sign = 0;
  std::vector<Coord> inner_path;  // covers the fewest interior sites
  std::vector<Coord> outer_path;  // covers the most
  int inner_enclosed = 0;  // interior sites on or inside run + inner path
  int outer_enclosed = 0;  // same for the outer path
  std::uint64_t path_count = 0;
  int path_length = 0;
  CoordSet inner_full;  // path + run + enclosed nodes
  CoordSet outer_full;
};

struct RegionDecomposition {
  int n = 0;
  bool oracle_fallback = false;  // path cap tripped; classes rebuilt from o* values
  bool partition_ok = false;     // the five classes are disjoint and cover B
  SignRegions plus, minus;
  std::vector<Coord> corners;  // interior corners with two +1 boundary neighbors

  // The five interior classes, named by their field values.
  CoordSet core_plus;     // +4: inner positive region minus its fringe
  CoordSet fringe_plus;   // +2: inner positive sites with an edge into the outer negative region
  CoordSet neutral;       //  0: overlap of the two outer regions
  CoordSet fringe_minus;  // -2
  CoordSet core_minus;    // -4
};

struct RegionOptions {
  std::uint64_t path_cap = 1'000'000;
  OracleLimits fallback_limits{};  // used only when the cap trips
};

/// Builds inner/outer regions for both signs of a one-run boundary and the
/// five-class split of the interior. Throws for non-one-run inputs.
RegionDecomposition region_decomposition(const GridInstance& g, const BoundaryConfig& x,
                                         const RegionOptions& opts = {});

/// The field implied by the classes: +4 / +2 / 0 / -2 / -4.
/// Throws when the classes fail to partition the interior.
FieldMap closed_form_local_solutions(const RegionDecomposition& d);

/// Closed-form field by corner-count case analysis: normalize the boundary,
/// rotate the run into a canonical position (west side, or wrapping the
/// south-west corner), fill the field by the per-case formula, then map back.
struct CornerCaseField {
  int corner_count = 0;        // 0, 1 or 2 after normalization
  bool color_flipped = false;  // normalization flipped the colors
  int rotation = 0;            // quarter turns applied to reach the canonical frame
  FieldMap field;              // for the original boundary
};

CornerCaseField corner_case_field(const GridInstance& g, const BoundaryConfig& x);

}  // namespace lbp
