#include "lbp/graph.hpp"

#include <algorithm>
#include <queue>

namespace lbp {

GraphInstance::GraphInstance(std::vector<std::int8_t> values,
                             const std::vector<std::pair<int, int>>& edges)
    : values_(std::move(values)) {
  int n = vertex_count();
  for (auto v : values_) {
    if (v != 0 && v != 1 && v != -1) throw Error("vertex values must be 0 or +-1");
    if (v == 0) ++interior_count_;
  }
  in_arcs_.resize(n);
  out_arcs_.resize(n);
  std::vector<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loops are not allowed");
    if (!is_interior(u) && !is_interior(v)) continue;  // boundary-boundary edges carry nothing
    auto key = std::minmax(u, v);
    seen.push_back({key.first, key.second});
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (auto [u, v] : seen) {
    int fwd = static_cast<int>(arcs_.size());
    arcs_.push_back({u, v});
    arcs_.push_back({v, u});
    reverse_.push_back(fwd + 1);
    reverse_.push_back(fwd);
    out_arcs_[u].push_back(fwd);
    in_arcs_[v].push_back(fwd);
    out_arcs_[v].push_back(fwd + 1);
    in_arcs_[u].push_back(fwd + 1);
  }
}

int GraphInstance::arc_id(int from, int to) const {
  if (from < 0 || from >= vertex_count()) return -1;
  for (int id : out_arcs_[from])
    if (arcs_[id].to == to) return id;
  return -1;
}

std::vector<std::pair<int, int>> GraphInstance::message_edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < arcs_.size(); i += 2) out.push_back({arcs_[i].from, arcs_[i].to});
  return out;
}

namespace {

// BFS over message edges; returns (farthest vertex, distance).
std::pair<int, int> farthest(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[start] = 0;
  q.push(start);
  int best = start;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] > dist[best]) best = u;
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return {best, dist[best]};
}

}  // namespace

int GraphInstance::message_diameter() const {
  std::vector<std::vector<int>> adj(vertex_count());
  int first = -1;
  for (auto [u, v] : message_edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    if (first < 0) first = u;
  }
  if (first < 0) return 0;
  auto [far_vertex, d1] = farthest(adj, first);
  auto [ignored, d2] = farthest(adj, far_vertex);
  (void)ignored;
  (void)d1;
  return d2;
}

GridGraph GridGraph::build(const GridInstance& g, const BoundaryConfig& x) {
  if (x.n() != g.n()) throw Error("boundary config size does not match grid");
  int side = g.side();
  std::vector<std::int8_t> values(side * side, 0);
  for (int i = 0; i < g.ring_length(); ++i) {
    Coord c = g.ring()[i];
    values[c.b * side + c.a] = static_cast<std::int8_t>(x.value_at(i));
  }
  std::vector<std::pair<int, int>> edges;
  for (int b = 0; b <= g.n() + 1; ++b) {
    for (int a = 0; a <= g.n() + 1; ++a) {
      if (a + 1 <= g.n() + 1) edges.push_back({b * side + a, b * side + a + 1});
      if (b + 1 <= g.n() + 1) edges.push_back({b * side + a, (b + 1) * side + a});
    }
  }
  return {g, x, GraphInstance(std::move(values), edges)};
}

}  // namespace lbp
