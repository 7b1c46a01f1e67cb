#include "lbp/json_io.hpp"

#include <algorithm>

namespace lbp {

json coord_to_json(Coord c) { return json::array({c.a, c.b}); }

json trace_to_json(const GridGraph& gg, const Trace& trace) {
  json out = json::array();
  std::vector<std::pair<DirectedEdge, int>> edges;  // (edge, arc id), sorted by edge
  for (int id = 0; id < gg.graph.arc_count(); ++id) {
    const auto& arc = gg.graph.arc(id);
    edges.push_back({{gg.coord(arc.from), gg.coord(arc.to)}, id});
  }
  std::sort(edges.begin(), edges.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (const auto& state : trace.states) {
    json messages = json::array();
    for (const auto& [edge, id] : edges)
      messages.push_back({{"from", coord_to_json(edge.from)},
                          {"to", coord_to_json(edge.to)},
                          {"value", static_cast<int>(state.m[id])}});
    out.push_back({{"n", state.n}, {"messages", std::move(messages)}});
  }
  return out;
}

json field_to_json(const FieldMap& field) {
  json out = json::object();
  for (const auto& [c, v] : field) out[std::to_string(c.a) + "," + std::to_string(c.b)] = v;
  return out;
}

json min_marginals_to_json(const MinMarginals& mm) {
  json out = json::array();
  for (int b = 1; b <= mm.n; ++b)
    for (int a = 1; a <= mm.n; ++a) {
      const SiteMarginals& s = mm.at({a, b});
      out.push_back({{"coord", coord_to_json({a, b})},
                     {"o_minus", s.o_minus},
                     {"o_plus", s.o_plus},
                     {"local", s.local()}});
    }
  return out;
}

namespace {

json coord_set_to_json(const CoordSet& s) {
  json out = json::array();
  for (Coord c : s) out.push_back(coord_to_json(c));
  return out;
}

}  // namespace

json regions_to_json(const RegionDecomposition& d) {
  return {{"plus4", coord_set_to_json(d.core_plus)},
          {"plus2", coord_set_to_json(d.fringe_plus)},
          {"zero", coord_set_to_json(d.neutral)},
          {"minus2", coord_set_to_json(d.fringe_minus)},
          {"minus4", coord_set_to_json(d.core_minus)}};
}

json fc_report_to_json(const CompatibleTuple& t, int sigma, int n0, const FcVerification& v) {
  json out = {{"tuple",
               {{"anchor", coord_to_json(t.anchor)},
                {"far", coord_to_json(t.far)},
                {"directions", {std::string(1, direction_letter(t.d1)),
                                std::string(1, direction_letter(t.d2))}}}},
              {"sigma", sigma},
              {"n0", n0},
              {"hypothesis_holds", v.hypothesis_holds},
              {"conclusion_holds", v.hypothesis_holds && v.conclusion_holds}};
  if (v.first_violation) {
    out["first_violation"] = {{"from", coord_to_json(v.first_violation->edge.from)},
                              {"to", coord_to_json(v.first_violation->edge.to)},
                              {"n", v.first_violation->n},
                              {"value", v.first_violation->value}};
  }
  return out;
}

json lemma_stats_to_json(const LemmaSweepStats& s) {
  return {{"tuples_considered", s.tuples_considered},
          {"fc_hypotheses", s.fc_hypotheses},
          {"fc_conclusions_ok", s.fc_conclusions_ok},
          {"bc_pairs", s.bc_pairs},
          {"bc_vacuous", s.bc_vacuous},
          {"bc_conclusions_ok", s.bc_conclusions_ok},
          {"violations", s.violations}};
}

}  // namespace lbp
