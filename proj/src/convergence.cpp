#include "lbp/convergence.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace lbp {

std::vector<Coord> Rectangle::cells() const {
  std::vector<Coord> out;
  out.reserve(cell_count());
  for (int b = lo.b; b <= hi.b; ++b)
    for (int a = lo.a; a <= hi.a; ++a) out.push_back({a, b});
  return out;
}

std::optional<Rectangle> Rectangle::intersect(const Rectangle& other) const {
  Coord nlo{std::max(lo.a, other.lo.a), std::max(lo.b, other.lo.b)};
  Coord nhi{std::min(hi.a, other.hi.a), std::min(hi.b, other.hi.b)};
  if (nlo.a > nhi.a || nlo.b > nhi.b) return std::nullopt;
  return Rectangle(nlo, nhi);
}

bool is_compatible(const GridInstance& g, const CompatibleTuple& t) {
  if (!g.in_interior(t.anchor) || !g.in_interior(t.far)) return false;
  if (!directions_adjacent(t.d1, t.d2) || t.d1 == t.d2) return false;
  Coord diff = t.far - t.anchor;
  Coord v1 = direction_vector(t.d1);
  Coord v2 = direction_vector(t.d2);
  int c1 = diff.a * v1.a + diff.b * v1.b;  // projection onto the unit directions
  int c2 = diff.a * v2.a + diff.b * v2.b;
  return c1 >= 0 && c2 >= 0;
}

std::vector<Coord> cut_rectangle(const CompatibleTuple& t, int radius) {
  Rectangle r(t.anchor, t.far);
  std::vector<Coord> out;
  for (Coord c : r.cells())
    if (std::abs(c.a - t.anchor.a) + std::abs(c.b - t.anchor.b) <= radius - 1) out.push_back(c);
  return out;
}

std::vector<Coord> l_region(const CompatibleTuple& t) {
  Rectangle r(t.anchor, t.far);
  std::vector<Coord> out;
  for (Coord c : r.cells())
    if (c.a == t.anchor.a || c.b == t.anchor.b) out.push_back(c);
  return out;
}

std::vector<DirectedEdge> messages_received_by(const GridInstance& g, const std::set<Coord>& s,
                                               Direction d) {
  std::vector<DirectedEdge> out;
  for (Coord head : s) {
    Coord tail = head - direction_vector(d);
    if (!g.contains(tail) || s.count(tail)) continue;
    out.push_back({tail, head});
  }
  return out;
}

std::vector<DirectedEdge> messages_sent_from(const GridInstance& g, const std::set<Coord>& s,
                                             Direction d) {
  std::vector<DirectedEdge> out;
  for (Coord tail : s) {
    Coord head = tail + direction_vector(d);
    if (!g.contains(head)) continue;
    out.push_back({tail, head});
  }
  return out;
}

namespace {

void require_window(const Trace& trace, int n0) {
  if (n0 < 0 || n0 > trace.n_max()) throw Error("iteration window outside the trace");
}

void require_sigma(int sigma) {
  if (sigma != 1 && sigma != -1) throw Error("sigma must be +-1");
}

// All messages on `edges` equal sigma for n in [from, n_max]; reports the
// first offender.
bool window_constant(const GridGraph& gg, const Trace& trace,
                     const std::vector<DirectedEdge>& edges, int sigma, int from, int* checks,
                     std::optional<ConclusionViolation>* violation) {
  for (const DirectedEdge& e : edges) {
    int arc = gg.arc_id(e);
    if (arc < 0) throw Error("edge " + to_string(e.from) + "->" + to_string(e.to) +
                             " carries no message");
    for (int n = from; n <= trace.n_max(); ++n) {
      if (checks) ++*checks;
      int value = trace.at(n).m[arc];
      if (value != sigma) {
        if (violation && !violation->has_value())
          *violation = ConclusionViolation{e, n, value};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool check_fc(const GridGraph& gg, const Trace& trace, const CompatibleTuple& t, int sigma,
              int n0) {
  require_sigma(sigma);
  require_window(trace, n0);
  if (!is_compatible(gg.grid, t)) throw Error("tuple is not compatible");
  Rectangle r(t.anchor, t.far);
  std::set<Coord> cells;
  for (Coord c : r.cells()) cells.insert(c);
  for (Direction d : {t.d1, t.d2}) {
    auto received = messages_received_by(gg.grid, cells, d);
    if (!window_constant(gg, trace, received, sigma, n0, nullptr, nullptr)) return false;
  }
  return true;
}

FcVerification verify_fc(const GridGraph& gg, const Trace& trace, const CompatibleTuple& t,
                         int sigma, int n0) {
  FcVerification out;
  out.hypothesis_holds = check_fc(gg, trace, t, sigma, n0);
  if (!out.hypothesis_holds) return out;
  int n = gg.grid.n();
  int full_deadline = n0 + 2 * n - 1;
  out.conclusion_checked = full_deadline <= trace.n_max();
  if (!out.conclusion_checked) return out;
  out.conclusion_holds = true;
  // Distance-graded form: a cell at L1 distance l from the anchor belongs to
  // every cut rectangle of radius > l, so its sent messages must equal sigma
  // from n0 + l + 1 onward. Checking per-cell deadlines covers all radii at
  // once, and the farthest cell reproduces the plain n0 + 2N - 1 statement.
  for (Coord cell : Rectangle(t.anchor, t.far).cells()) {
    int dist = std::abs(cell.a - t.anchor.a) + std::abs(cell.b - t.anchor.b);
    int deadline = n0 + dist + 1;
    if (deadline > trace.n_max()) continue;
    for (Direction d : {t.d1, t.d2}) {
      DirectedEdge e = directed_edge(cell, d);
      if (!window_constant(gg, trace, {e}, sigma, deadline, &out.checks,
                           &out.first_violation)) {
        out.conclusion_holds = false;
      }
    }
  }
  return out;
}

std::optional<Direction> bc_direction(const CompatibleTuple& t1, const CompatibleTuple& t2) {
  auto in_set = [](const CompatibleTuple& t, Direction d) { return t.d1 == d || t.d2 == d; };
  int shared = 0;
  for (Direction d : kDirections)
    if (in_set(t1, d) && in_set(t2, d)) ++shared;
  if (shared != 1) return std::nullopt;
  for (Direction d : kDirections)
    if (!in_set(t1, d) && !in_set(t2, d)) return d;
  return std::nullopt;
}

bool check_bc(const GridGraph& gg, const Trace& trace, const CompatibleTuple& t1,
              const CompatibleTuple& t2, int sigma, int n0) {
  if (!bc_direction(t1, t2)) return false;
  return check_fc(gg, trace, t1, sigma, n0) && check_fc(gg, trace, t2, sigma, n0);
}

BcVerification verify_bc(const GridGraph& gg, const Trace& trace, const CompatibleTuple& t1,
                         const CompatibleTuple& t2, int sigma, int n0) {
  BcVerification out;
  auto dir = bc_direction(t1, t2);
  out.structure_ok = dir.has_value() && is_compatible(gg.grid, t1) && is_compatible(gg.grid, t2);
  if (!out.structure_ok) return out;
  out.hypotheses_hold = check_fc(gg, trace, t1, sigma, n0) && check_fc(gg, trace, t2, sigma, n0);
  if (!out.hypotheses_hold) return out;
  auto inter = Rectangle(t1.anchor, t1.far).intersect(Rectangle(t2.anchor, t2.far));
  if (!inter) {
    out.intersection_empty = true;
    return out;
  }
  int deadline = n0 + 2 * gg.grid.n();
  out.conclusion_checked = deadline <= trace.n_max();
  if (!out.conclusion_checked) return out;
  std::set<Coord> cells;
  for (Coord c : inter->cells()) cells.insert(c);
  auto sent = messages_sent_from(gg.grid, cells, *dir);
  out.conclusion_holds =
      window_constant(gg, trace, sent, sigma, deadline, &out.checks, &out.first_violation);
  return out;
}

namespace {

std::string tuple_str(const CompatibleTuple& t) {
  std::string out = to_string(t.anchor) + ">" + to_string(t.far) + "{";
  out += direction_letter(t.d1);
  out += direction_letter(t.d2);
  out += "}";
  return out;
}

}  // namespace

LemmaSweepStats lemma_sweep_boundary(const GridGraph& gg, int n_max) {
  LemmaSweepStats stats;
  const GridInstance& g = gg.grid;
  Trace trace = run_messages(gg.graph, n_max);
  constexpr std::pair<Direction, Direction> kPairs[4] = {
      {Direction::North, Direction::East},
      {Direction::North, Direction::West},
      {Direction::South, Direction::East},
      {Direction::South, Direction::West}};

  struct FcInstance {
    CompatibleTuple tuple;
    int sigma;
  };
  std::vector<FcInstance> held;

  for (int b1 = 1; b1 <= g.n(); ++b1)
    for (int a1 = 1; a1 <= g.n(); ++a1)
      for (auto [d1, d2] : kPairs) {
        Coord anchor{a1, b1};
        for (int b2 = 1; b2 <= g.n(); ++b2)
          for (int a2 = 1; a2 <= g.n(); ++a2) {
            CompatibleTuple t{anchor, {a2, b2}, d1, d2};
            if (!is_compatible(g, t)) continue;
            for (int sigma : {1, -1}) {
              ++stats.tuples_considered;
              FcVerification v = verify_fc(gg, trace, t, sigma, 0);
              if (!v.hypothesis_holds) continue;
              ++stats.fc_hypotheses;
              held.push_back({t, sigma});
              if (!v.conclusion_checked) {
                stats.violations.push_back("fc window too short for " + tuple_str(t));
              } else if (v.conclusion_holds) {
                ++stats.fc_conclusions_ok;
              } else {
                const auto& viol = *v.first_violation;
                stats.violations.push_back(
                    "fc " + tuple_str(t) + " sigma " + std::to_string(sigma) + ": edge " +
                    to_string(viol.edge.from) + "->" + to_string(viol.edge.to) + " at n=" +
                    std::to_string(viol.n) + " is " + std::to_string(viol.value));
              }
            }
          }
      }

  // every unordered pair of satisfied FC instances sharing sigma and exactly
  // one direction yields a BC conclusion; identical conclusions are checked once
  std::set<std::tuple<int, int, int, int, int, int>> done;
  for (std::size_t i = 0; i < held.size(); ++i)
    for (std::size_t j = i + 1; j < held.size(); ++j) {
      if (held[i].sigma != held[j].sigma) continue;
      auto dir = bc_direction(held[i].tuple, held[j].tuple);
      if (!dir) continue;
      ++stats.bc_pairs;
      auto inter = Rectangle(held[i].tuple.anchor, held[i].tuple.far)
                       .intersect(Rectangle(held[j].tuple.anchor, held[j].tuple.far));
      if (!inter) {
        ++stats.bc_vacuous;
        continue;
      }
      auto key = std::make_tuple(inter->lo.a, inter->lo.b, inter->hi.a, inter->hi.b,
                                 static_cast<int>(*dir), held[i].sigma);
      if (done.count(key)) continue;
      done.insert(key);
      BcVerification v = verify_bc(gg, trace, held[i].tuple, held[j].tuple, held[i].sigma, 0);
      if (!v.conclusion_checked) {
        stats.violations.push_back("bc window too short for " + tuple_str(held[i].tuple) + "+" +
                                   tuple_str(held[j].tuple));
      } else if (v.conclusion_holds) {
        ++stats.bc_conclusions_ok;
      } else {
        const auto& viol = *v.first_violation;
        stats.violations.push_back(
            "bc " + tuple_str(held[i].tuple) + "+" + tuple_str(held[j].tuple) + " sigma " +
            std::to_string(held[i].sigma) + ": edge " + to_string(viol.edge.from) + "->" +
            to_string(viol.edge.to) + " at n=" + std::to_string(viol.n) + " is " +
            std::to_string(viol.value));
      }
    }
  return stats;
}

}  // namespace lbp
