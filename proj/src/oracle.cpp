#include "lbp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace lbp {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

}  // namespace

InteriorConfig InteriorConfig::from_bits(int n, std::uint64_t bits) {
  InteriorConfig c;
  c.n = n;
  c.values.resize(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < c.values.size(); ++k)
    c.values[k] = (bits >> k) & 1 ? std::int8_t{1} : std::int8_t{-1};
  return c;
}

std::uint64_t InteriorConfig::to_bits() const {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] > 0) bits |= std::uint64_t{1} << k;
  return bits;
}

int count_odd_bonds(const GridInstance& g, const BoundaryConfig& x, const InteriorConfig& c) {
  if (x.n() != g.n() || c.n != g.n()) throw Error("size mismatch in count_odd_bonds");
  int n = g.n();
  int total = 0;
  auto val = [&](Coord p) { return g.in_interior(p) ? c.value(p) : x.value(p); };
  for (int b = 1; b <= n; ++b) {
    for (int a = 1; a <= n; ++a) {
      Coord p{a, b};
      int v = c.value(p);
      // east and north cover every edge once; west/south only against the boundary
      total += v != val({a + 1, b});
      total += v != val({a, b + 1});
      if (a == 1) total += v != x.value({0, b});
      if (b == 1) total += v != x.value({a, 0});
    }
  }
  return total;
}

int MinMarginals::minimum() const {
  int best = kInf;
  for (const auto& s : sites) best = std::min({best, s.o_minus, s.o_plus});
  return best;
}

FieldMap local_solutions(const MinMarginals& mm) {
  FieldMap out;
  for (int b = 1; b <= mm.n; ++b)
    for (int a = 1; a <= mm.n; ++a) out[{a, b}] = mm.at({a, b}).local();
  return out;
}

namespace {

struct EnumTables {
  int n = 0;
  std::uint64_t h_mask = 0;  // sites with an east interior neighbor
  std::uint64_t v_mask = 0;  // sites with a north interior neighbor
  // boundary-adjacent sites: (bit index, # of +1 boundary neighbors, # of -1)
  std::vector<std::array<int, 3>> boundary_sites;
};

EnumTables build_enum_tables(const GridInstance& g, const BoundaryConfig& x) {
  EnumTables t;
  t.n = g.n();
  int n = g.n();
  for (int b = 1; b <= n; ++b) {
    for (int a = 1; a <= n; ++a) {
      int s = (b - 1) * n + (a - 1);
      if (a < n) t.h_mask |= std::uint64_t{1} << s;
      if (b < n) t.v_mask |= std::uint64_t{1} << s;
      int plus = 0, minus = 0;
      for (Coord nb : g.neighbors({a, b})) {
        if (!g.on_boundary(nb)) continue;
        (x.value(nb) > 0 ? plus : minus)++;
      }
      if (plus + minus > 0) t.boundary_sites.push_back({s, plus, minus});
    }
  }
  return t;
}

inline int enum_cost(const EnumTables& t, std::uint64_t c) {
  int cost = std::popcount((c ^ (c >> 1)) & t.h_mask) +
             std::popcount((c ^ (c >> t.n)) & t.v_mask);
  for (const auto& [s, plus, minus] : t.boundary_sites)
    cost += (c >> s) & 1 ? minus : plus;
  return cost;
}

void check_enum_guard(const GridInstance& g, const OracleLimits& limits) {
  if (g.n() > limits.enum_cap)
    throw Error("interior enumeration capped at N=" + std::to_string(limits.enum_cap) +
                " (asked for N=" + std::to_string(g.n()) + "); raise the cap to override");
}

}  // namespace

MinMarginals enumeration_min_marginals(const GridInstance& g, const BoundaryConfig& x,
                                       const OracleLimits& limits) {
  check_enum_guard(g, limits);
  if (x.n() != g.n()) throw Error("size mismatch");
  int sites = g.interior_count();
  EnumTables t = build_enum_tables(g, x);
  MinMarginals mm;
  mm.n = g.n();
  mm.sites.assign(sites, {kInf, kInf});
  std::uint64_t total = std::uint64_t{1} << sites;
  for (std::uint64_t c = 0; c < total; ++c) {
    int cost = enum_cost(t, c);
    for (int s = 0; s < sites; ++s) {
      int& slot = (c >> s) & 1 ? mm.sites[s].o_plus : mm.sites[s].o_minus;
      slot = std::min(slot, cost);
    }
  }
  return mm;
}

GlobalSolutionSet global_solutions(const GridInstance& g, const BoundaryConfig& x,
                                   const OracleLimits& limits) {
  check_enum_guard(g, limits);
  EnumTables t = build_enum_tables(g, x);
  GlobalSolutionSet out;
  out.minimum = kInf;
  std::uint64_t total = std::uint64_t{1} << g.interior_count();
  for (std::uint64_t c = 0; c < total; ++c) {
    int cost = enum_cost(t, c);
    if (cost < out.minimum) {
      out.minimum = cost;
      out.configs.clear();
    }
    if (cost == out.minimum) out.configs.push_back(InteriorConfig::from_bits(g.n(), c));
  }
  return out;
}

namespace {

// In-place min-plus convolution with Hamming distance: after the sweep,
// A[s] = min_t (A_in[t] + popcount(s ^ t)). One ascending pass per bit is
// exact because the metric decomposes over bits.
void hamming_transform(std::vector<int>& a, int bits) {
  for (int d = 0; d < bits; ++d) {
    std::uint32_t step = std::uint32_t{1} << d;
    for (std::uint32_t s = 0; s < a.size(); ++s)
      a[s] = std::min(a[s], a[s ^ step] + 1);
  }
}

}  // namespace

MinMarginals dp_min_marginals(const GridInstance& g, const BoundaryConfig& x,
                              const OracleLimits& limits) {
  if (g.n() > limits.dp_cap)
    throw Error("row DP capped at N=" + std::to_string(limits.dp_cap) + " (asked for N=" +
                std::to_string(g.n()) + "); raise the cap to override");
  if (x.n() != g.n()) throw Error("size mismatch");
  int n = g.n();
  std::uint32_t states = std::uint32_t{1} << n;
  std::uint32_t row_mask = states - 1;

  // in-row cost: horizontal bonds plus the west and east boundary bonds
  auto make_inrow = [&](int b) {
    std::vector<int> cost(states);
    int west = x.value({0, b});
    int east = x.value({n + 1, b});
    for (std::uint32_t s = 0; s < states; ++s) {
      int c = std::popcount((s ^ (s >> 1)) & (row_mask >> 1));
      c += ((s & 1) ? 1 : -1) != west;
      c += ((s >> (n - 1)) & 1 ? 1 : -1) != east;
      cost[s] = c;
    }
    return cost;
  };
  auto edge_row_cost = [&](int boundary_b) {
    std::vector<int> cost(states, 0);
    for (std::uint32_t s = 0; s < states; ++s)
      for (int a = 1; a <= n; ++a)
        cost[s] += ((s >> (a - 1)) & 1 ? 1 : -1) != x.value({a, boundary_b});
    return cost;
  };

  std::vector<std::vector<int>> inrow(n + 1);
  for (int b = 1; b <= n; ++b) inrow[b] = make_inrow(b);

  // forward[b][s]: best cost of rows 1..b (plus their boundary bonds) with row b = s
  std::vector<std::vector<int>> forward(n + 1), backward(n + 2);
  forward[1] = inrow[1];
  {
    std::vector<int> bottom = edge_row_cost(0);
    for (std::uint32_t s = 0; s < states; ++s) forward[1][s] += bottom[s];
  }
  for (int b = 2; b <= n; ++b) {
    std::vector<int> acc = forward[b - 1];
    hamming_transform(acc, n);
    forward[b] = inrow[b];
    for (std::uint32_t s = 0; s < states; ++s) forward[b][s] += acc[s];
  }
  backward[n] = inrow[n];
  {
    std::vector<int> top = edge_row_cost(n + 1);
    for (std::uint32_t s = 0; s < states; ++s) backward[n][s] += top[s];
  }
  for (int b = n - 1; b >= 1; --b) {
    std::vector<int> acc = backward[b + 1];
    hamming_transform(acc, n);
    backward[b] = inrow[b];
    for (std::uint32_t s = 0; s < states; ++s) backward[b][s] += acc[s];
  }

  MinMarginals mm;
  mm.n = n;
  mm.sites.assign(g.interior_count(), {kInf, kInf});
  for (int b = 1; b <= n; ++b) {
    std::vector<int> row_total(states);
    for (std::uint32_t s = 0; s < states; ++s)
      row_total[s] = forward[b][s] + backward[b][s] - inrow[b][s];
    for (int a = 1; a <= n; ++a) {
      SiteMarginals& site = mm.sites[(b - 1) * n + (a - 1)];
      for (std::uint32_t s = 0; s < states; ++s) {
        int& slot = (s >> (a - 1)) & 1 ? site.o_plus : site.o_minus;
        slot = std::min(slot, row_total[s]);
      }
    }
  }
  return mm;
}

std::vector<std::array<int, 2>> graph_min_marginals(const GraphInstance& g, int interior_cap) {
  std::vector<int> interior;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_interior(v)) interior.push_back(v);
  if (static_cast<int>(interior.size()) > interior_cap)
    throw Error("graph enumeration capped at " + std::to_string(interior_cap) +
                " interior nodes, instance has " + std::to_string(interior.size()));
  auto edges = g.message_edges();
  std::vector<std::array<int, 2>> out(g.vertex_count(), {kInf, kInf});
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.is_interior(v)) out[v] = {0, 0};
  std::vector<int> value(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) value[v] = g.boundary_value(v);
  std::uint64_t total = std::uint64_t{1} << interior.size();
  for (std::uint64_t c = 0; c < total; ++c) {
    for (std::size_t k = 0; k < interior.size(); ++k)
      value[interior[k]] = (c >> k) & 1 ? 1 : -1;
    int cost = 0;
    for (auto [u, v] : edges) cost += value[u] != value[v];
    for (std::size_t k = 0; k < interior.size(); ++k) {
      auto& slot = out[interior[k]];
      int& side = (c >> k) & 1 ? slot[1] : slot[0];
      side = std::min(side, cost);
    }
  }
  return out;
}

}  // namespace lbp
