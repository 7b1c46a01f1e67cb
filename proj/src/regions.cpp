#include "lbp/regions.hpp"

#include <algorithm>
#include <queue>

namespace lbp {

namespace {

constexpr std::uint64_t kCountSaturate = std::uint64_t{1} << 62;

struct PathSearch {
  const GridInstance& g;
  const BoundaryConfig& x;
  int sign;
  std::vector<int> dist_from, dist_to;  // indexed b * side + a, -1 unreachable
  Coord e_from, e_to;
  int d = 0;

  int idx(Coord c) const { return c.b * g.side() + c.a; }
  bool allowed(Coord c) const {
    if (g.in_interior(c)) return true;
    return g.on_boundary(c) && x.value(c) == sign;
  }

  std::vector<int> bfs(Coord src) const {
    std::vector<int> dist(g.side() * g.side(), -1);
    std::queue<Coord> q;
    dist[idx(src)] = 0;
    q.push(src);
    while (!q.empty()) {
      Coord u = q.front();
      q.pop();
      for (Coord v : g.neighbors(u)) {
        if (!allowed(v) || dist[idx(v)] >= 0) continue;
        dist[idx(v)] = dist[idx(u)] + 1;
        q.push(v);
      }
    }
    return dist;
  }
};

PathSearch make_search(const GridInstance& g, const BoundaryConfig& x, int sign) {
  RunStructure rs = classify_boundary(g, x);
  if (!rs.one_run) throw Error("shortest paths need a one-run boundary");
  const BoundaryRun* run = rs.run_of_sign(sign);
  if (!run) throw Error("no run of the requested sign");
  PathSearch s{g, x, sign, {}, {}, {}, {}, 0};
  auto [e1, e2] = run_endpoints(g, *run);
  s.e_from = e1;
  s.e_to = e2;
  s.dist_from = s.bfs(e1);
  s.dist_to = s.bfs(e2);
  s.d = s.dist_from[s.idx(e2)];
  if (s.d < 0) throw Error("run endpoints are not connected");  // cannot happen: the run connects them
  return s;
}

// Number of shortest e_from -> e_to walks; every shortest path is
// distance-increasing, so a layer-ordered sum counts them exactly.
std::uint64_t count_geodesics(const PathSearch& s) {
  const GridInstance& g = s.g;
  std::vector<std::vector<Coord>> layers(s.d + 1);
  std::vector<std::uint64_t> count(g.side() * g.side(), 0);
  for (int b = 0; b < g.side(); ++b)
    for (int a = 0; a < g.side(); ++a) {
      Coord c{a, b};
      int df = s.dist_from[s.idx(c)];
      if (df >= 0 && df <= s.d && s.dist_to[s.idx(c)] == s.d - df) layers[df].push_back(c);
    }
  count[s.idx(s.e_from)] = 1;
  for (int layer = 1; layer <= s.d; ++layer) {
    for (Coord c : layers[layer]) {
      std::uint64_t total = 0;
      for (Coord u : g.neighbors(c)) {
        if (!s.allowed(u) || s.dist_from[s.idx(u)] != layer - 1) continue;
        if (s.dist_to[s.idx(u)] != s.d - layer + 1) continue;
        total += count[s.idx(u)];
        if (total >= kCountSaturate) total = kCountSaturate;
      }
      count[s.idx(c)] = total;
    }
  }
  return count[s.idx(s.e_to)];
}

void enumerate_geodesics(const PathSearch& s, std::vector<Coord>& path,
                         std::vector<std::vector<Coord>>& out) {
  Coord cur = path.back();
  if (cur == s.e_to) {
    out.push_back(path);
    return;
  }
  int layer = s.dist_from[s.idx(cur)];
  std::vector<Coord> nexts;
  for (Coord v : s.g.neighbors(cur))
    if (s.allowed(v) && s.dist_from[s.idx(v)] == layer + 1 &&
        s.dist_to[s.idx(v)] == s.d - layer - 1)
      nexts.push_back(v);
  std::sort(nexts.begin(), nexts.end());  // keeps the emission order lexicographic
  for (Coord v : nexts) {
    path.push_back(v);
    enumerate_geodesics(s, path, out);
    path.pop_back();
  }
}

using EdgeList = std::vector<std::pair<Coord, Coord>>;

// Permissive interior-of-curve computation: blocks the curve's nodes and edge
// midpoints on the half-step refinement and floods from outside the grid.
// Works for pinched curves (paths partly retracing the run) as well.
CoordSet enclosed_by_curve(const GridInstance& g, const EdgeList& edges, const CoordSet& nodes) {
  int w = 2 * g.side() + 1;  // refined lattice; node (a,b) sits at (2a+1, 2b+1)
  std::vector<char> blocked(w * w, 0), visited(w * w, 0);
  auto ref = [&](int x, int y) { return y * w + x; };
  for (Coord c : nodes) blocked[ref(2 * c.a + 1, 2 * c.b + 1)] = 1;
  for (const auto& [u, v] : edges) blocked[ref(u.a + v.a + 1, u.b + v.b + 1)] = 1;
  std::queue<std::pair<int, int>> q;
  visited[ref(0, 0)] = 1;
  q.push({0, 0});
  while (!q.empty()) {
    auto [cx, cy] = q.front();
    q.pop();
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      int nx = cx + dx[k], ny = cy + dy[k];
      if (nx < 0 || nx >= w || ny < 0 || ny >= w) continue;
      if (visited[ref(nx, ny)] || blocked[ref(nx, ny)]) continue;
      visited[ref(nx, ny)] = 1;
      q.push({nx, ny});
    }
  }
  CoordSet out;
  for (int b = 0; b < g.side(); ++b)
    for (int a = 0; a < g.side(); ++a) {
      Coord c{a, b};
      if (nodes.count(c)) continue;
      if (!visited[ref(2 * a + 1, 2 * b + 1)]) out.insert(c);
    }
  return out;
}

EdgeList run_edges(const GridInstance& g, const BoundaryRun& run) {
  EdgeList out;
  int len = g.ring_length();
  for (int i = 0; i + 1 < run.length; ++i) {
    Coord u = g.ring()[(run.start + i) % len];
    Coord v = g.ring()[(run.start + i + 1) % len];
    out.push_back({u, v});
  }
  return out;
}

CoordSet run_nodes(const GridInstance& g, const BoundaryRun& run) {
  CoordSet out;
  int len = g.ring_length();
  for (int i = 0; i < run.length; ++i) out.insert(g.ring()[(run.start + i) % len]);
  return out;
}

}  // namespace

ShortestPathSet shortest_simple_paths(const GridInstance& g, const BoundaryConfig& x, int sign,
                                      std::uint64_t cap) {
  PathSearch s = make_search(g, x, sign);
  ShortestPathSet out;
  out.length = s.d + 1;
  out.path_count = count_geodesics(s);
  if (out.path_count > cap)
    throw Error("shortest-path enumeration over cap: " + std::to_string(out.path_count) +
                " paths, cap " + std::to_string(cap));
  std::vector<Coord> path{s.e_from};
  enumerate_geodesics(s, path, out.paths);
  return out;
}

CoordSet enclosed_nodes(const GridInstance& g, const std::vector<Coord>& cycle) {
  if (cycle.size() < 4) throw Error("a lattice cycle needs at least 4 nodes");
  CoordSet nodes(cycle.begin(), cycle.end());
  if (nodes.size() != cycle.size()) throw Error("cycle nodes must be distinct");
  EdgeList edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Coord u = cycle[i];
    Coord v = cycle[(i + 1) % cycle.size()];
    if (!g.contains(u) || !g.contains(v)) throw Error("cycle node off-grid");
    if (std::abs(u.a - v.a) + std::abs(u.b - v.b) != 1)
      throw Error("consecutive cycle nodes must be grid neighbors");
    edges.push_back({u, v});
  }
  return enclosed_by_curve(g, edges, nodes);
}

namespace {

SignRegions build_sign_regions(const GridInstance& g, const BoundaryConfig& x,
                               const BoundaryRun& run, int sign, std::uint64_t cap) {
  SignRegions out;
  out.sign = sign;
  ShortestPathSet ps = shortest_simple_paths(g, x, sign, cap);
  out.path_count = ps.path_count;
  out.path_length = ps.length;
  EdgeList base_edges = run_edges(g, run);
  CoordSet base_nodes = run_nodes(g, run);
  bool first = true;
  CoordSet inner_enc, outer_enc;
  for (const auto& path : ps.paths) {
    EdgeList edges = base_edges;
    CoordSet nodes = base_nodes;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.push_back({path[i], path[i + 1]});
    nodes.insert(path.begin(), path.end());
    CoordSet enc = enclosed_by_curve(g, edges, nodes);
    // rank by the interior sites the region would cover: enclosed ones plus
    // those on the path itself (the run contributes none, enclosed nodes are
    // always interior)
    int count = static_cast<int>(enc.size());
    for (Coord c : path)
      if (g.in_interior(c)) ++count;
    // paths arrive in lexicographic order, so strict comparisons implement the
    // tie-break: the first path achieving an extreme wins
    if (first || count < out.inner_enclosed) {
      out.inner_enclosed = count;
      out.inner_path = path;
      inner_enc = enc;
    }
    if (first || count > out.outer_enclosed) {
      out.outer_enclosed = count;
      out.outer_path = path;
      outer_enc = enc;
    }
    first = false;
  }
  out.inner_full = base_nodes;
  out.inner_full.insert(out.inner_path.begin(), out.inner_path.end());
  out.inner_full.insert(inner_enc.begin(), inner_enc.end());
  out.outer_full = base_nodes;
  out.outer_full.insert(out.outer_path.begin(), out.outer_path.end());
  out.outer_full.insert(outer_enc.begin(), outer_enc.end());
  return out;
}

bool touches(const GridInstance& g, Coord c, const CoordSet& set) {
  for (Coord nb : g.neighbors(c))
    if (set.count(nb)) return true;
  return false;
}

void check_partition(const GridInstance& g, RegionDecomposition& d) {
  std::vector<const CoordSet*> classes = {&d.core_plus, &d.fringe_plus, &d.neutral,
                                          &d.fringe_minus, &d.core_minus};
  std::size_t total = 0;
  CoordSet all;
  for (const CoordSet* s : classes) {
    total += s->size();
    all.insert(s->begin(), s->end());
  }
  d.partition_ok = total == all.size() && static_cast<int>(all.size()) == g.interior_count();
  if (d.partition_ok)
    for (Coord c : all)
      if (!g.in_interior(c)) d.partition_ok = false;
}

}  // namespace

RegionDecomposition region_decomposition(const GridInstance& g, const BoundaryConfig& x,
                                         const RegionOptions& opts) {
  RunStructure rs = classify_boundary(g, x);
  if (!rs.one_run) throw Error("region decomposition needs a one-run boundary");
  RegionDecomposition d;
  d.n = g.n();
  d.corners = corner_set(g, x);

  std::uint64_t plus_count = count_geodesics(make_search(g, x, 1));
  std::uint64_t minus_count = count_geodesics(make_search(g, x, -1));
  if (plus_count > opts.path_cap || minus_count > opts.path_cap) {
    // Path budget exceeded: classify sites by their exact o* value instead.
    d.oracle_fallback = true;
    MinMarginals mm = dp_min_marginals(g, x, opts.fallback_limits);
    for (int b = 1; b <= g.n(); ++b)
      for (int a = 1; a <= g.n(); ++a) {
        Coord c{a, b};
        switch (mm.at(c).local()) {
          case 4: d.core_plus.insert(c); break;
          case 2: d.fringe_plus.insert(c); break;
          case 0: d.neutral.insert(c); break;
          case -2: d.fringe_minus.insert(c); break;
          case -4: d.core_minus.insert(c); break;
          default: break;  // leaves the sites unclassified; partition check fails
        }
      }
    check_partition(g, d);
    return d;
  }

  d.plus = build_sign_regions(g, x, *rs.run_of_sign(1), 1, opts.path_cap);
  d.minus = build_sign_regions(g, x, *rs.run_of_sign(-1), -1, opts.path_cap);

  CoordSet inner_plus_b, inner_minus_b;
  for (Coord c : d.plus.inner_full)
    if (g.in_interior(c)) inner_plus_b.insert(c);
  for (Coord c : d.minus.inner_full)
    if (g.in_interior(c)) inner_minus_b.insert(c);

  // fringes look across grid edges into the full outer region of the other
  // sign, boundary nodes included
  for (Coord c : inner_plus_b)
    (touches(g, c, d.minus.outer_full) ? d.fringe_plus : d.core_plus).insert(c);
  for (Coord c : inner_minus_b)
    (touches(g, c, d.plus.outer_full) ? d.fringe_minus : d.core_minus).insert(c);
  for (Coord c : d.plus.outer_full)
    if (g.in_interior(c) && d.minus.outer_full.count(c)) d.neutral.insert(c);

  check_partition(g, d);
  return d;
}

FieldMap closed_form_local_solutions(const RegionDecomposition& d) {
  if (!d.partition_ok)
    throw Error("region classes do not partition the interior; no field defined");
  FieldMap out;
  for (Coord c : d.core_plus) out[c] = 4;
  for (Coord c : d.fringe_plus) out[c] = 2;
  for (Coord c : d.neutral) out[c] = 0;
  for (Coord c : d.fringe_minus) out[c] = -2;
  for (Coord c : d.core_minus) out[c] = -4;
  return out;
}

namespace {

// Rotation putting the named side into the west position.
int rotation_for_side_west(const GridInstance& g, const CoordSet& run) {
  bool west = true, east = true, bottom = true, top = true;
  for (Coord c : run) {
    west &= c.a == 0;
    east &= c.a == g.n() + 1;
    bottom &= c.b == 0;
    top &= c.b == g.n() + 1;
  }
  if (west) return 0;
  if (top) return 1;
  if (east) return 2;
  if (bottom) return 3;
  throw Error("run does not lie on a single side");
}

}  // namespace

CornerCaseField corner_case_field(const GridInstance& g, const BoundaryConfig& x) {
  NormalizedBoundary norm = normalize_one_run(g, x);
  CornerCaseField out;
  out.color_flipped = norm.back_transform.color_flip;
  std::vector<Coord> corners = corner_set(g, norm.config);
  out.corner_count = static_cast<int>(corners.size());

  RunStructure rs = classify_boundary(g, norm.config);
  const BoundaryRun* plus = rs.run_of_sign(1);
  if (!plus) throw Error("normalized boundary lost its positive run");

  int n = g.n();
  int r = 0;
  if (out.corner_count == 0) {
    r = rotation_for_side_west(g, run_nodes(g, *plus));
  } else if (out.corner_count == 1) {
    // rotate the wrapped outer ring corner into the south-west position; the
    // interior corner coordinate cannot tell the four roles apart at N=1
    CoordSet rn = run_nodes(g, *plus);
    auto wraps = [&](Coord outer, Coord nb1, Coord nb2) {
      return rn.count(outer) && norm.config.value(nb1) == 1 && norm.config.value(nb2) == 1;
    };
    if (wraps({0, 0}, {1, 0}, {0, 1})) r = 0;
    else if (wraps({n + 1, 0}, {n, 0}, {n + 1, 1})) r = 3;
    else if (wraps({n + 1, n + 1}, {n + 1, n}, {n, n + 1})) r = 2;
    else if (wraps({0, n + 1}, {1, n + 1}, {0, n})) r = 1;
    else throw Error("active corner without a wrapped outer ring corner");
  } else if (out.corner_count == 2) {
    Coord c1 = corners[0], c2 = corners[1];
    if (c1.a == 1 && c2.a == 1) r = 0;
    else if (c1.b == 1 && c2.b == 1) r = 3;
    else if (c1.a == n && c2.a == n) r = 2;
    else if (c1.b == n && c2.b == n) r = 1;
    else throw Error("diagonal corner pair; not reachable for a normalized one-run boundary");
  } else {
    throw Error("more than two active corners; not reachable for a normalized one-run boundary");
  }
  out.rotation = r;
  SymmetryTransform rot{r, false, false};
  BoundaryConfig canon = rot.apply(g, norm.config);
  RunStructure canon_rs = classify_boundary(g, canon);
  auto [e1, e2] = run_endpoints(g, *canon_rs.run_of_sign(1));

  auto canonical_value = [&](Coord c) -> int {
    if (out.corner_count == 0) {
      int b1 = std::min(e1.b, e2.b), b2 = std::max(e1.b, e2.b);
      return (c.a == 1 && c.b >= b1 && c.b <= b2) ? -2 : -4;
    }
    if (out.corner_count == 1) {
      // run wraps (0,0); endpoints (alpha,0) on the bottom and (0,beta) on the west
      if ((e1.b == 0) == (e2.b == 0) || (e1.a == 0) == (e2.a == 0))
        throw Error("corner-wrapping run has unexpected endpoints");
      int alpha = e1.b == 0 ? e1.a : e2.a;
      int beta = e1.a == 0 ? e1.b : e2.b;
      if (c.a <= alpha && c.b <= beta) return 0;
      if ((c.a == alpha + 1 && c.b <= beta) || (c.a <= alpha && c.b == beta + 1)) return -2;
      return -4;
    }
    // run spans the west side; endpoint columns on the bottom and top edges
    int a1 = std::min(e1.a, e2.a), a2 = std::max(e1.a, e2.a);
    if (c.a < a1) return 4;
    if (c.a == a1) return 2;
    if (c.a <= a2) return 0;
    if (c.a == a2 + 1) return -2;
    return -4;
  };

  int flip = out.color_flipped ? -1 : 1;
  for (int b = 1; b <= n; ++b)
    for (int a = 1; a <= n; ++a) {
      Coord c{a, b};
      out.field[c] = flip * canonical_value(rot.apply(n, c));
    }
  return out;
}

}  // namespace lbp
