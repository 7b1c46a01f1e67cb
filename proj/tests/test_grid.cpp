#include <doctest.h>

#include <algorithm>
#include <set>

#include "lbp/grid.hpp"

using namespace lbp;

TEST_CASE("ring order at N=1: ccw from the origin, east first") {
  GridInstance g(1);
  std::vector<Coord> want = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
  CHECK(g.ring() == want);
  CHECK(g.ring_length() == 8);
  for (int i = 0; i < 8; ++i) CHECK(g.ring_index(want[i]) == i);
  CHECK(g.ring_index({1, 1}) == -1);
}

TEST_CASE("ring is a cycle of adjacent boundary nodes") {
  for (int n : {1, 2, 3, 5}) {
    GridInstance g(n);
    const auto& ring = g.ring();
    CHECK(static_cast<int>(ring.size()) == 4 * n + 4);
    std::set<Coord> seen(ring.begin(), ring.end());
    CHECK(seen.size() == ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
      Coord u = ring[i], v = ring[(i + 1) % ring.size()];
      CHECK(std::abs(u.a - v.a) + std::abs(u.b - v.b) == 1);
      CHECK(g.on_boundary(u));
    }
  }
}

TEST_CASE("interior membership and neighbors") {
  GridInstance g(3);
  CHECK(g.in_interior({1, 1}));
  CHECK(g.in_interior({3, 3}));
  CHECK_FALSE(g.in_interior({0, 1}));
  CHECK_FALSE(g.in_interior({4, 2}));
  CHECK(g.neighbors({0, 0}).size() == 2);
  CHECK(g.neighbors({2, 2}).size() == 4);
  CHECK_FALSE(g.neighbor({0, 0}, Direction::West).has_value());
  CHECK(g.neighbor({0, 0}, Direction::East) == Coord{1, 0});
  CHECK(g.neighbor({2, 2}, Direction::North) == Coord{2, 3});
}

TEST_CASE("direction helpers") {
  CHECK(direction_vector(Direction::North) == Coord{0, 1});
  CHECK(direction_vector(Direction::West) == Coord{-1, 0});
  CHECK(opposite(Direction::East) == Direction::West);
  CHECK(directions_adjacent(Direction::North, Direction::East));
  CHECK_FALSE(directions_adjacent(Direction::North, Direction::South));
  CHECK_FALSE(directions_adjacent(Direction::East, Direction::East));
  CHECK(directed_edge({1, 2}, Direction::South) == DirectedEdge{{1, 2}, {1, 1}});
}

TEST_CASE("wire format round trip") {
  GridInstance g(2);
  std::vector<std::int8_t> values(12, -1);
  values[0] = values[1] = values[11] = 1;
  BoundaryConfig x(2, values);
  CHECK(x.wire() == "B2:++---------+");
  BoundaryConfig y = BoundaryConfig::parse(x.wire());
  CHECK(x == y);
  CHECK(y.value({0, 0}) == 1);
  CHECK(y.value({1, 0}) == 1);
  CHECK(y.value({0, 1}) == 1);
  CHECK(y.value({2, 0}) == -1);
}

TEST_CASE("parse rejects malformed strings with a position") {
  CHECK_THROWS_AS(BoundaryConfig::parse("A1:++++++++"), ParseError);
  CHECK_THROWS_AS(BoundaryConfig::parse("B1++++++++"), ParseError);
  CHECK_THROWS_AS(BoundaryConfig::parse("B1:+++"), ParseError);
  CHECK_THROWS_AS(BoundaryConfig::parse("B0:"), ParseError);
  try {
    BoundaryConfig::parse("B1:++++x+++");
    FAIL("should have thrown");
  } catch (const ParseError& e) {
    CHECK(e.position == 7);  // the 'x'
  }
}

TEST_CASE("from_values wants exactly the ring as domain") {
  GridInstance g(1);
  std::map<Coord, int> values;
  for (Coord c : g.ring()) values[c] = -1;
  values[{1, 0}] = 1;
  BoundaryConfig x = BoundaryConfig::from_values(g, values);
  CHECK(x.value({1, 0}) == 1);

  auto missing = values;
  missing.erase({0, 1});
  CHECK_THROWS_AS(BoundaryConfig::from_values(g, missing), Error);

  auto extra = values;
  extra[{1, 1}] = 1;  // interior coord
  CHECK_THROWS_AS(BoundaryConfig::from_values(g, extra), Error);
}

TEST_CASE("classification: uniform, one-run, multi-run") {
  GridInstance g(2);
  BoundaryConfig uniform = BoundaryConfig::parse("B2:++++++++++++");
  RunStructure rs = classify_boundary(g, uniform);
  CHECK(rs.uniform);
  CHECK_FALSE(rs.one_run);
  CHECK(rs.sign_changes == 0);

  BoundaryConfig one = BoundaryConfig::parse("B2:---++-------");
  rs = classify_boundary(g, one);
  CHECK(rs.one_run);
  CHECK(rs.sign_changes == 2);
  CHECK(rs.runs.size() == 2);
  const BoundaryRun* plus = rs.run_of_sign(1);
  REQUIRE(plus != nullptr);
  CHECK(plus->start == 3);
  CHECK(plus->length == 2);

  BoundaryConfig two = BoundaryConfig::parse("B2:+--++-------");
  rs = classify_boundary(g, two);
  CHECK_FALSE(rs.one_run);
  CHECK(rs.sign_changes == 4);
}

TEST_CASE("wrapped runs merge across ring position zero") {
  GridInstance g(1);
  BoundaryConfig x = BoundaryConfig::parse("B1:+-----++");
  RunStructure rs = classify_boundary(g, x);
  CHECK(rs.one_run);
  const BoundaryRun* plus = rs.run_of_sign(1);
  REQUIRE(plus != nullptr);
  CHECK(plus->start == 6);
  CHECK(plus->length == 3);
  auto [first, last] = run_endpoints(g, *plus);
  CHECK(first == Coord{0, 2});
  CHECK(last == Coord{0, 0});
  // the run listed first covers ring position 0
  CHECK(rs.runs.front().sign == 1);
}

TEST_CASE("symmetry transforms form a group acting on the grid") {
  int n = 3;
  auto group = SymmetryTransform::full_group();
  for (const auto& t : group) {
    SymmetryTransform inv = t.inverse();
    for (int b = 0; b <= n + 1; ++b)
      for (int a = 0; a <= n + 1; ++a) {
        Coord c{a, b};
        CHECK(inv.apply(n, t.apply(n, c)) == c);
        CHECK(t.apply(n, inv.apply(n, c)) == c);
      }
    // composition consistency on a sample coord
    for (const auto& u : group) {
      SymmetryTransform both = t.compose_after(u);
      Coord c{1, 2};
      CHECK(both.apply(n, c) == t.apply(n, u.apply(n, c)));
      CHECK(both.apply_sign(1) == t.apply_sign(u.apply_sign(1)));
    }
  }
}

TEST_CASE("transforms respect the lattice structure") {
  int n = 2;
  GridInstance g(n);
  for (const auto& t : SymmetryTransform::spatial_group()) {
    for (Direction d : kDirections) {
      Coord c{1, 2};
      Coord moved = c + direction_vector(d);
      CHECK(t.apply(n, moved) == t.apply(n, c) + direction_vector(t.apply(d)));
    }
    // boundary maps to boundary, interior to interior
    for (int b = 0; b <= n + 1; ++b)
      for (int a = 0; a <= n + 1; ++a) {
        Coord c{a, b};
        CHECK(g.in_interior(t.apply(n, c)) == g.in_interior(c));
      }
  }
}

TEST_CASE("transforming a boundary keeps per-coord values aligned") {
  GridInstance g(2);
  BoundaryConfig x = BoundaryConfig::parse("B2:+++---------");
  for (const auto& t : SymmetryTransform::full_group()) {
    BoundaryConfig y = t.apply(g, x);
    for (Coord c : g.ring()) CHECK(y.value(t.apply(2, c)) == t.apply_sign(x.value(c)));
  }
}

TEST_CASE("normalization flips when the positive run is the bigger one") {
  // 9 of 16 ring nodes positive, run endpoints off the outer corners
  GridInstance g(3);
  std::vector<std::int8_t> values(16, -1);
  for (int i = 1; i <= 9; ++i) values[i] = 1;
  BoundaryConfig x(3, values);
  NormalizedBoundary norm = normalize_one_run(g, x);
  CHECK(norm.back_transform.color_flip);
  RunStructure rs = classify_boundary(g, norm.config);
  CHECK(rs.one_run);
  const BoundaryRun* plus = rs.run_of_sign(1);
  REQUIRE(plus != nullptr);
  CHECK(plus->length <= g.ring_length() - plus->length);
}

TEST_CASE("normalization contracts corner endpoints") {
  GridInstance g(2);
  // run (0,1),(0,0),(1,0): the corner keeps its sign (both ring neighbors +)
  BoundaryConfig wrap = BoundaryConfig::parse("B2:++---------+");
  NormalizedBoundary norm = normalize_one_run(g, wrap);
  CHECK(norm.config == wrap);
  // run ending at the corner gets clipped
  BoundaryConfig clipped = BoundaryConfig::parse("B2:+----------+");
  NormalizedBoundary norm2 = normalize_one_run(g, clipped);
  CHECK(norm2.config.value({0, 0}) == -1);
  CHECK(norm2.config.value({0, 1}) == 1);
  CHECK_FALSE(norm2.back_transform.color_flip);
  CHECK(classify_boundary(g, norm2.config).one_run);
}

TEST_CASE("normalization is idempotent and one-run-preserving at small sizes") {
  for (int n : {1, 2, 3}) {
    GridInstance g(n);
    for (const auto& x : enumerate_one_run_boundaries(g)) {
      NormalizedBoundary norm = normalize_one_run(g, x);
      RunStructure rs = classify_boundary(g, norm.config);
      CHECK(rs.one_run);
      const BoundaryRun* plus = rs.run_of_sign(1);
      REQUIRE(plus != nullptr);
      CHECK(2 * plus->length <= g.ring_length());
      NormalizedBoundary again = normalize_one_run(g, norm.config);
      CHECK(again.config == norm.config);
      CHECK_FALSE(again.back_transform.color_flip);
    }
  }
}

TEST_CASE("one-run enumeration covers start x length exactly") {
  for (int n : {1, 2, 3}) {
    GridInstance g(n);
    auto all = enumerate_one_run_boundaries(g);
    int len = 4 * n + 4;
    CHECK(static_cast<int>(all.size()) == len * (len - 1));  // N=1: 56
    std::set<std::string> wires;
    for (const auto& x : all) {
      wires.insert(x.wire());
      RunStructure rs = classify_boundary(g, x);
      CHECK(rs.one_run);
      CHECK(rs.sign_changes == 2);
    }
    CHECK(wires.size() == all.size());
  }
}

TEST_CASE("symmetry dedup keeps one representative per orbit") {
  GridInstance g(2);
  auto all = enumerate_one_run_boundaries(g);
  auto dedup = enumerate_one_run_boundaries(g, true);
  CHECK(dedup.size() < all.size());
  auto group = SymmetryTransform::full_group();
  std::set<std::string> representatives;
  for (const auto& x : dedup) representatives.insert(x.wire());
  for (const auto& x : dedup) {
    // the representative is minimal in its orbit
    for (const auto& t : group) CHECK(x.wire() <= t.apply(g, x).wire());
  }
  for (const auto& x : all) {
    // every orbit is represented
    bool found = false;
    for (const auto& t : group)
      if (representatives.count(t.apply(g, x).wire())) found = true;
    CHECK(found);
  }
}

TEST_CASE("corner set tracks the +1 corners of the run") {
  GridInstance g(4);
  // run wrapping (0,0): (0,2)..(0,1),(0,0),(1,0)..(3,0)
  BoundaryConfig x = BoundaryConfig::parse("B4:++++--------------++");
  auto corners = corner_set(g, x);
  REQUIRE(corners.size() == 1);
  CHECK(corners[0] == Coord{1, 1});

  BoundaryConfig none = BoundaryConfig::parse("B4:-+------------------");
  CHECK(corner_set(g, none).empty());
}
