#include <doctest.h>

#include <algorithm>

#include "lbp/regions.hpp"

using namespace lbp;

TEST_CASE("a singleton run yields the one-node path") {
  GridInstance g(2);
  BoundaryConfig x = BoundaryConfig::parse("B2:-+----------");
  ShortestPathSet ps = shortest_simple_paths(g, x, 1);
  CHECK(ps.length == 1);
  CHECK(ps.path_count == 1);
  REQUIRE(ps.paths.size() == 1);
  CHECK(ps.paths[0] == std::vector<Coord>{{1, 0}});
}

TEST_CASE("blocked nodes force the geodesic to detour") {
  GridInstance g(2);
  BoundaryConfig x = BoundaryConfig::parse("B2:-+----------");
  // negative endpoints (2,0) and (0,0); (1,0) is positive, so the direct row
  // is closed and the unique geodesic climbs through the interior
  ShortestPathSet ps = shortest_simple_paths(g, x, -1);
  CHECK(ps.length == 5);
  CHECK(ps.path_count == 1);
  REQUIRE(ps.paths.size() == 1);
  std::vector<Coord> want = {{2, 0}, {2, 1}, {1, 1}, {0, 1}, {0, 0}};
  CHECK(ps.paths[0] == want);
}

TEST_CASE("geodesics are enumerated in lexicographic order") {
  GridInstance g(3);
  // positive run (0,1),(0,0),(1,0); negative endpoints (2,0) and (0,2)
  BoundaryConfig x = BoundaryConfig::parse("B3:++-------------+");
  ShortestPathSet ps = shortest_simple_paths(g, x, -1);
  CHECK(ps.length == 5);
  CHECK(ps.path_count == ps.paths.size());
  CHECK(ps.path_count >= 2);
  CHECK(std::is_sorted(ps.paths.begin(), ps.paths.end()));
  for (const auto& p : ps.paths) {
    CHECK(static_cast<int>(p.size()) == ps.length);
    CHECK(p.front() == Coord{2, 0});
    CHECK(p.back() == Coord{0, 2});
  }
  CHECK_THROWS_AS(shortest_simple_paths(g, x, -1, 1), Error);
}

TEST_CASE("path search needs a one-run boundary") {
  GridInstance g(2);
  CHECK_THROWS_AS(shortest_simple_paths(g, BoundaryConfig::parse("B2:------------"), -1), Error);
  CHECK_THROWS_AS(shortest_simple_paths(g, BoundaryConfig::parse("B2:+-+---------"), 1), Error);
}

TEST_CASE("enclosure: the full perimeter wraps the whole interior") {
  GridInstance g(2);
  CoordSet enc = enclosed_nodes(g, g.ring());
  CHECK(enc.size() == 4);
  for (int b = 1; b <= 2; ++b)
    for (int a = 1; a <= 2; ++a) CHECK(enc.count({a, b}) == 1);
}

TEST_CASE("enclosure: a unit square holds nothing strictly inside") {
  GridInstance g(3);
  CoordSet enc = enclosed_nodes(g, {{1, 1}, {2, 1}, {2, 2}, {1, 2}});
  CHECK(enc.empty());
  // 3x3 node square around (2,2)
  CoordSet ring = enclosed_nodes(
      g, {{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}, {2, 3}, {1, 3}, {1, 2}});
  CHECK(ring == CoordSet{{2, 2}});
}

TEST_CASE("enclosure validates its cycle argument") {
  GridInstance g(2);
  CHECK_THROWS_AS(enclosed_nodes(g, {{1, 1}, {2, 1}}), Error);
  CHECK_THROWS_AS(enclosed_nodes(g, {{1, 1}, {2, 1}, {2, 2}, {2, 1}}), Error);
  CHECK_THROWS_AS(enclosed_nodes(g, {{1, 1}, {2, 2}, {2, 1}, {1, 2}}), Error);
}

TEST_CASE("five classes for a singleton positive site on a side") {
  GridInstance g(2);
  BoundaryConfig x = BoundaryConfig::parse("B2:-+----------");
  RegionDecomposition d = region_decomposition(g, x);
  CHECK(d.partition_ok);
  CHECK_FALSE(d.oracle_fallback);
  CHECK(d.corners.empty());
  CHECK(d.plus.path_count == 1);
  CHECK(d.minus.path_count == 1);
  CHECK(d.minus.inner_enclosed == d.minus.outer_enclosed);
  CHECK(d.fringe_minus == CoordSet{{1, 1}});
  CHECK(d.core_minus == CoordSet{{2, 1}, {1, 2}, {2, 2}});
  CHECK(d.core_plus.empty());
  CHECK(d.fringe_plus.empty());
  CHECK(d.neutral.empty());
  FieldMap field = closed_form_local_solutions(d);
  CHECK(field == local_solutions(dp_min_marginals(g, x)));
}

TEST_CASE("five classes for a singleton on the west side of a 3-grid") {
  GridInstance g(3);
  BoundaryConfig x = BoundaryConfig::parse("B3:--------------+-");  // + at (0,2)
  RegionDecomposition d = region_decomposition(g, x);
  CHECK(d.partition_ok);
  CHECK(d.fringe_minus == CoordSet{{1, 2}});
  CHECK(d.core_minus.size() == 8);
  FieldMap field = closed_form_local_solutions(d);
  CHECK(field.at({1, 2}) == -2);
  CHECK(field.at({2, 2}) == -4);
  CHECK(field == local_solutions(dp_min_marginals(g, x)));
}

TEST_CASE("inner region never encloses more than the outer one") {
  GridInstance g(3);
  for (const auto& x : enumerate_one_run_boundaries(g)) {
    RegionDecomposition d = region_decomposition(g, x);
    REQUIRE(d.partition_ok);
    CHECK(d.plus.inner_enclosed <= d.plus.outer_enclosed);
    CHECK(d.minus.inner_enclosed <= d.minus.outer_enclosed);
  }
}

TEST_CASE("classes match the exact field on every 2-grid one-run boundary") {
  GridInstance g(2);
  for (const auto& x : enumerate_one_run_boundaries(g)) {
    RegionDecomposition d = region_decomposition(g, x);
    REQUIRE(d.partition_ok);
    FieldMap expect = local_solutions(dp_min_marginals(g, x));
    CHECK(closed_form_local_solutions(d) == expect);
    CHECK(corner_case_field(g, x).field == expect);
  }
}

TEST_CASE("the oracle fallback classifies through exact marginals") {
  GridInstance g(2);
  BoundaryConfig x = BoundaryConfig::parse("B2:-++++-------");
  RegionOptions opts;
  opts.path_cap = 0;  // force the fallback branch
  RegionDecomposition d = region_decomposition(g, x, opts);
  CHECK(d.oracle_fallback);
  CHECK(d.partition_ok);
  CHECK(closed_form_local_solutions(d) == local_solutions(dp_min_marginals(g, x)));
}

TEST_CASE("region decomposition rejects non-one-run boundaries") {
  GridInstance g(2);
  CHECK_THROWS_AS(region_decomposition(g, BoundaryConfig::parse("B2:++++++++++++")), Error);
  CHECK_THROWS_AS(region_decomposition(g, BoundaryConfig::parse("B2:+-+---------")), Error);
}

TEST_CASE("corner-free field: a flat band of -2 in front of the run") {
  GridInstance g(3);
  BoundaryConfig x = BoundaryConfig::parse("B3:--------------+-");
  CornerCaseField f = corner_case_field(g, x);
  CHECK(f.corner_count == 0);
  CHECK_FALSE(f.color_flipped);
  CHECK(f.field.at({1, 2}) == -2);
  CHECK(f.field.at({1, 1}) == -4);
  CHECK(f.field.at({3, 3}) == -4);
}

TEST_CASE("one-corner field: quarter plane of zeros plus an L of -2") {
  GridInstance g(4);
  BoundaryConfig x = BoundaryConfig::parse("B4:++++--------------++");
  CornerCaseField f = corner_case_field(g, x);
  CHECK(f.corner_count == 1);
  CHECK(f.rotation == 0);
  FieldMap expect;
  for (int b = 1; b <= 4; ++b)
    for (int a = 1; a <= 4; ++a) {
      int v = -4;
      if (a <= 3 && b <= 2) v = 0;
      else if ((a == 4 && b <= 2) || (a <= 3 && b == 3)) v = -2;
      expect[{a, b}] = v;
    }
  CHECK(f.field == expect);
  CHECK(f.field == local_solutions(dp_min_marginals(g, x)));
}

TEST_CASE("two-corner field: vertical bands of +2 and -2") {
  GridInstance g(2);
  BoundaryConfig x = BoundaryConfig::parse("B2:++------++++");
  CornerCaseField f = corner_case_field(g, x);
  CHECK(f.corner_count == 2);
  FieldMap expect{{{1, 1}, 2}, {{1, 2}, 2}, {{2, 1}, -2}, {{2, 2}, -2}};
  CHECK(f.field == expect);
  CHECK(f.field == local_solutions(dp_min_marginals(g, x)));
  RegionDecomposition d = region_decomposition(g, x);
  REQUIRE(d.partition_ok);
  CHECK(closed_form_local_solutions(d) == expect);
}

TEST_CASE("color-flipped inputs reuse the formulas through the flip") {
  GridInstance g(3);
  // negative singleton at (0,2) on an otherwise positive ring
  BoundaryConfig x = BoundaryConfig::parse("B3:--------------+-").color_flipped();
  CornerCaseField f = corner_case_field(g, x);
  CHECK(f.color_flipped);
  CHECK(f.field.at({1, 2}) == 2);
  CHECK(f.field.at({2, 2}) == 4);
  CHECK(f.field == local_solutions(dp_min_marginals(g, x)));
}
