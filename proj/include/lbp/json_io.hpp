#pragma once

#include <json.hpp>

#include "lbp/convergence.hpp"
#include "lbp/engine.hpp"
#include "lbp/oracle.hpp"
#include "lbp/regions.hpp"

namespace lbp {

using nlohmann::json;

json coord_to_json(Coord c);

/// [{n, messages: [{from: [a,b], to: [a,b], value}]}], messages sorted by
/// (from, to).
json trace_to_json(const GridGraph& gg, const Trace& trace);

/// {"a,b": value}
json field_to_json(const FieldMap& field);

/// [{coord: [a,b], o_minus, o_plus, local}] in row-major order.
json min_marginals_to_json(const MinMarginals& mm);

/// {class name -> sorted coord list} for the five interior classes.
json regions_to_json(const RegionDecomposition& d);

json fc_report_to_json(const CompatibleTuple& t, int sigma, int n0, const FcVerification& v);

json lemma_stats_to_json(const LemmaSweepStats& s);

}  // namespace lbp
