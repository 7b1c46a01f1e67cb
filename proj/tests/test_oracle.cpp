#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lbp/oracle.hpp"

using namespace lbp;

namespace {

// independent odd-bond counter: loop over every lattice edge, skip ring edges
int naive_odd_bonds(const GridInstance& g, const BoundaryConfig& x, const InteriorConfig& c) {
  auto value = [&](Coord p) { return g.in_interior(p) ? c.value(p) : x.value(p); };
  int total = 0;
  for (int b = 0; b <= g.n() + 1; ++b)
    for (int a = 0; a <= g.n() + 1; ++a) {
      Coord u{a, b};
      for (Coord v : {Coord{a + 1, b}, Coord{a, b + 1}}) {
        if (!g.contains(v)) continue;
        if (!g.in_interior(u) && !g.in_interior(v)) continue;
        if (value(u) != value(v)) ++total;
      }
    }
  return total;
}

}  // namespace

TEST_CASE("odd-bond count on the single-cell grid") {
  GridInstance g(1);
  BoundaryConfig x = BoundaryConfig::parse("B1:-+------");
  InteriorConfig minus = InteriorConfig::from_bits(1, 0);
  InteriorConfig plus = InteriorConfig::from_bits(1, 1);
  CHECK(count_odd_bonds(g, x, minus) == 1);
  CHECK(count_odd_bonds(g, x, plus) == 3);
}

TEST_CASE("odd-bond count agrees with a direct edge scan") {
  std::mt19937_64 rng(7);
  GridInstance g(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int8_t> ring(g.ring_length());
    for (auto& v : ring) v = (rng() & 1) ? 1 : -1;
    BoundaryConfig x(3, ring);
    InteriorConfig c = InteriorConfig::from_bits(3, rng() & 0x1ff);
    CHECK(count_odd_bonds(g, x, c) == naive_odd_bonds(g, x, c));
  }
}

TEST_CASE("interior config bit packing round-trips") {
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    InteriorConfig c = InteriorConfig::from_bits(2, bits);
    CHECK(c.to_bits() == bits);
  }
  InteriorConfig c = InteriorConfig::from_bits(2, 0b0010);
  CHECK(c.value({2, 1}) == 1);  // bit 1 is site (2,1)
  CHECK(c.value({1, 1}) == -1);
}

TEST_CASE("single-cell min-marginals by hand") {
  GridInstance g(1);
  MinMarginals mm = enumeration_min_marginals(g, BoundaryConfig::parse("B1:-+------"));
  CHECK(mm.at({1, 1}).o_minus == 1);
  CHECK(mm.at({1, 1}).o_plus == 3);
  CHECK(mm.at({1, 1}).local() == -2);
  CHECK(mm.minimum() == 1);

  // the lone + sits on an outer corner and touches no interior site
  MinMarginals corner = enumeration_min_marginals(g, BoundaryConfig::parse("B1:+-------"));
  CHECK(corner.at({1, 1}).o_minus == 0);
  CHECK(corner.at({1, 1}).o_plus == 4);
  CHECK(corner.at({1, 1}).local() == -4);

  MinMarginals uniform = enumeration_min_marginals(g, BoundaryConfig::parse("B1:++++++++"));
  CHECK(uniform.at({1, 1}).local() == 4);
  CHECK(uniform.minimum() == 0);
}

TEST_CASE("row sweep matches enumeration on every boundary, tiny sizes") {
  for (int n : {1, 2}) {
    GridInstance g(n);
    int len = g.ring_length();
    for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
      std::vector<std::int8_t> ring(len);
      for (int i = 0; i < len; ++i) ring[i] = (bits >> i) & 1 ? 1 : -1;
      BoundaryConfig x(n, ring);
      MinMarginals by_enum = enumeration_min_marginals(g, x);
      MinMarginals by_dp = dp_min_marginals(g, x);
      for (int site = 0; site < n * n; ++site) {
        CHECK(by_enum.sites[site].o_minus == by_dp.sites[site].o_minus);
        CHECK(by_enum.sites[site].o_plus == by_dp.sites[site].o_plus);
      }
    }
  }
}

TEST_CASE("row sweep matches enumeration on random boundaries at N=4") {
  std::mt19937_64 rng(11);
  GridInstance g(4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::int8_t> ring(g.ring_length());
    for (auto& v : ring) v = (rng() & 1) ? 1 : -1;
    BoundaryConfig x(4, ring);
    MinMarginals by_enum = enumeration_min_marginals(g, x);
    MinMarginals by_dp = dp_min_marginals(g, x);
    for (int site = 0; site < 16; ++site) {
      CHECK(by_enum.sites[site].o_minus == by_dp.sites[site].o_minus);
      CHECK(by_enum.sites[site].o_plus == by_dp.sites[site].o_plus);
    }
  }
}

TEST_CASE("every site's smaller marginal equals the global optimum") {
  GridInstance g(3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int8_t> ring(g.ring_length());
    for (auto& v : ring) v = (rng() & 1) ? 1 : -1;
    BoundaryConfig x(3, ring);
    MinMarginals mm = dp_min_marginals(g, x);
    for (const auto& site : mm.sites)
      CHECK(std::min(site.o_minus, site.o_plus) == mm.minimum());
  }
}

TEST_CASE("optimal-set membership is forced exactly where the marginals split") {
  GridInstance g(2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::int8_t> ring(g.ring_length());
    for (auto& v : ring) v = (rng() & 1) ? 1 : -1;
    BoundaryConfig x(2, ring);
    GlobalSolutionSet gs = global_solutions(g, x);
    MinMarginals mm = enumeration_min_marginals(g, x);
    CHECK(gs.minimum == mm.minimum());
    REQUIRE_FALSE(gs.configs.empty());
    CHECK(std::is_sorted(gs.configs.begin(), gs.configs.end(),
                         [](const InteriorConfig& l, const InteriorConfig& r) {
                           return l.to_bits() < r.to_bits();
                         }));
    for (const auto& c : gs.configs) CHECK(count_odd_bonds(g, x, c) == gs.minimum);
    for (int b = 1; b <= 2; ++b)
      for (int a = 1; a <= 2; ++a) {
        Coord site{a, b};
        int local = mm.at(site).local();
        bool saw_minus = false, saw_plus = false;
        for (const auto& c : gs.configs) (c.value(site) > 0 ? saw_plus : saw_minus) = true;
        if (local > 0) CHECK((saw_plus && !saw_minus));
        if (local < 0) CHECK((saw_minus && !saw_plus));
        if (local == 0) CHECK((saw_minus && saw_plus));
      }
  }
}

TEST_CASE("local solution field carries the marginal differences") {
  GridInstance g(2);
  BoundaryConfig x = BoundaryConfig::parse("B2:++++--------");
  MinMarginals mm = dp_min_marginals(g, x);
  FieldMap field = local_solutions(mm);
  CHECK(field.size() == 4);
  for (const auto& [c, v] : field) CHECK(v == mm.at(c).local());
}

TEST_CASE("size guards refuse oversized exact runs") {
  CHECK_THROWS_AS(enumeration_min_marginals(GridInstance(5), BoundaryConfig::parse(
                      "B5:------------------------")), Error);
  CHECK_THROWS_AS(dp_min_marginals(GridInstance(13), BoundaryConfig(
                      13, std::vector<std::int8_t>(56, -1))), Error);
}

TEST_CASE("generic min-marginals on a four-node path") {
  // +1 -- i -- i -- -1: both interior sites are exactly balanced
  GraphInstance g({1, 0, 0, -1}, {{0, 1}, {1, 2}, {2, 3}});
  auto mm = graph_min_marginals(g);
  CHECK(mm[0] == std::array<int, 2>{0, 0});
  CHECK(mm[1] == std::array<int, 2>{1, 1});
  CHECK(mm[2] == std::array<int, 2>{1, 1});
  CHECK(mm[3] == std::array<int, 2>{0, 0});
}

TEST_CASE("generic min-marginals on a star") {
  // center interior, three +1 leaves and one -1 leaf
  GraphInstance g({0, 1, 1, 1, -1}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto mm = graph_min_marginals(g);
  CHECK(mm[0][0] == 3);  // center pinned to -1 disagrees with the three + leaves
  CHECK(mm[0][1] == 1);
}
