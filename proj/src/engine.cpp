#include "lbp/engine.hpp"

#include <algorithm>

namespace lbp {

namespace {

inline std::int8_t sign_of(int v) { return static_cast<std::int8_t>(v > 0 ? 1 : (v < 0 ? -1 : 0)); }

}  // namespace

MessageState initial_state(const GraphInstance& g) {
  MessageState s;
  s.n = 0;
  s.m.resize(g.arc_count());
  for (int id = 0; id < g.arc_count(); ++id) {
    int from = g.arc(id).from;
    s.m[id] = g.is_interior(from) ? std::int8_t{0}
                                  : static_cast<std::int8_t>(g.boundary_value(from));
  }
  return s;
}

MessageState step(const GraphInstance& g, const MessageState& s) {
  MessageState out;
  out.n = s.n + 1;
  out.m = s.m;  // boundary-sourced arcs keep their values
  for (int j = 0; j < g.vertex_count(); ++j) {
    if (!g.is_interior(j)) continue;
    int total = 0;
    for (int id : g.in_arcs(j)) total += s.m[id];
    for (int id : g.out_arcs(j)) {
      // exclude the message that came back along this edge
      int incoming = s.m[g.reverse_arc(id)];
      out.m[id] = sign_of(total - incoming);
    }
  }
  return out;
}

Trace run_messages(const GraphInstance& g, int n_max) {
  if (n_max < 0) throw Error("n_max must be >= 0");
  Trace t;
  t.states.reserve(n_max + 1);
  t.states.push_back(initial_state(g));
  for (int n = 0; n < n_max; ++n) t.states.push_back(step(g, t.states.back()));
  return t;
}

std::vector<int> estimates(const GraphInstance& g, const MessageState& s) {
  std::vector<int> out(g.vertex_count(), 0);
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!g.is_interior(i)) continue;
    for (int id : g.in_arcs(i)) out[i] += s.m[id];
  }
  return out;
}

std::optional<int> first_stable_iteration(const Trace& t) {
  int last = t.n_max();
  if (last < 0) return std::nullopt;
  int n = last;
  while (n > 0 && t.states[n - 1].same_messages(t.states[last])) --n;
  if (n == last && last > 0 && !t.states[last - 1].same_messages(t.states[last]))
    return std::nullopt;
  return n;
}

FieldMap estimate_field(const GridGraph& gg, const MessageState& s) {
  std::vector<int> est = estimates(gg.graph, s);
  FieldMap out;
  for (int b = 1; b <= gg.grid.n(); ++b)
    for (int a = 1; a <= gg.grid.n(); ++a) out[{a, b}] = est[gg.vertex({a, b})];
  return out;
}

UnnormalizedState initial_unnormalized(const GraphInstance& g) {
  UnnormalizedState s;
  s.n = 0;
  s.big_m.resize(g.arc_count());
  for (int id = 0; id < g.arc_count(); ++id) {
    int from = g.arc(id).from;
    if (g.is_interior(from)) {
      s.big_m[id] = {0, 0};
    } else {
      // M[j->i](x_i) = 1 when x_j != x_i
      int xj = g.boundary_value(from);
      s.big_m[id] = {xj != -1, xj != 1};
    }
  }
  return s;
}

UnnormalizedState step_unnormalized(const GraphInstance& g, const UnnormalizedState& s) {
  UnnormalizedState out;
  out.n = s.n + 1;
  out.big_m = s.big_m;
  for (int j = 0; j < g.vertex_count(); ++j) {
    if (!g.is_interior(j)) continue;
    int sum_minus = 0, sum_plus = 0;
    for (int id : g.in_arcs(j)) {
      sum_minus += s.big_m[id][0];
      sum_plus += s.big_m[id][1];
    }
    for (int id : g.out_arcs(j)) {
      const auto& back = s.big_m[g.reverse_arc(id)];
      int at_minus = sum_minus - back[0];  // cost of x_j = -1 over the other neighbors
      int at_plus = sum_plus - back[1];
      out.big_m[id] = {std::min(at_minus, 1 + at_plus), std::min(1 + at_minus, at_plus)};
    }
  }
  return out;
}

std::vector<UnnormalizedState> run_unnormalized(const GraphInstance& g, int n_max) {
  if (n_max < 0) throw Error("n_max must be >= 0");
  std::vector<UnnormalizedState> out;
  out.reserve(n_max + 1);
  out.push_back(initial_unnormalized(g));
  for (int n = 0; n < n_max; ++n) out.push_back(step_unnormalized(g, out.back()));
  return out;
}

std::vector<std::array<int, 2>> unnormalized_estimates(const GraphInstance& g,
                                                       const UnnormalizedState& s) {
  std::vector<std::array<int, 2>> out(g.vertex_count(), {0, 0});
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!g.is_interior(i)) continue;
    for (int id : g.in_arcs(i)) {
      out[i][0] += s.big_m[id][0];
      out[i][1] += s.big_m[id][1];
    }
  }
  return out;
}

std::optional<ConsistencyViolation> difference_consistency(const GraphInstance& g, int n_max) {
  MessageState small = initial_state(g);
  UnnormalizedState big = initial_unnormalized(g);
  for (int n = 0; n <= n_max; ++n) {
    for (int id = 0; id < g.arc_count(); ++id) {
      int diff = big.big_m[id][0] - big.big_m[id][1];
      if (diff != small.m[id]) return ConsistencyViolation{n, id, diff, small.m[id]};
    }
    if (n < n_max) {
      small = step(g, small);
      big = step_unnormalized(g, big);
    }
  }
  return std::nullopt;
}

}  // namespace lbp
