#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lbp/graph.hpp"

namespace lbp {

/// Difference messages, one per arc, each in {-1, 0, +1}.
struct MessageState {
  int n = 0;
  std::vector<std::int8_t> m;

  bool same_messages(const MessageState& other) const { return m == other.m; }
};

struct Trace {
  std::vector<MessageState> states;  // states[k] is iteration k

  int n_max() const { return static_cast<int>(states.size()) - 1; }
  const MessageState& at(int n) const { return states.at(n); }
};

/// Iteration 0: boundary-sourced arcs carry the boundary value, interior-sourced
/// arcs carry 0.
MessageState initial_state(const GraphInstance& g);

/// One synchronous update. Interior j sends sign of the summed incoming
/// messages from its other neighbors; boundary-sourced arcs never change.
MessageState step(const GraphInstance& g, const MessageState& s);

Trace run_messages(const GraphInstance& g, int n_max);

/// Per-vertex local-solution estimate: sum of incoming messages, for interior
/// vertices. Boundary entries are 0 and meaningless.
std::vector<int> estimates(const GraphInstance& g, const MessageState& s);

/// Smallest n such that every state from n through the end of the trace is
/// identical; nullopt when even the final two states differ.
std::optional<int> first_stable_iteration(const Trace& t);

/// Estimates keyed by interior coord, for grid instances.
using FieldMap = std::map<Coord, int>;
FieldMap estimate_field(const GridGraph& gg, const MessageState& s);

/// Unnormalized two-component messages M(-1), M(+1), one pair per arc.
struct UnnormalizedState {
  int n = 0;
  std::vector<std::array<int, 2>> big_m;  // [0] is M(-1), [1] is M(+1)
};

UnnormalizedState initial_unnormalized(const GraphInstance& g);
UnnormalizedState step_unnormalized(const GraphInstance& g, const UnnormalizedState& s);
std::vector<UnnormalizedState> run_unnormalized(const GraphInstance& g, int n_max);

/// Per-vertex unnormalized marginal readout: for interior i,
/// (sum_j M[j->i](-1), sum_j M[j->i](+1)).
std::vector<std::array<int, 2>> unnormalized_estimates(const GraphInstance& g,
                                                       const UnnormalizedState& s);

/// Where the difference identity M(-1) - M(+1) = m first fails, if anywhere.
struct ConsistencyViolation {
  int n = 0;
  int arc = -1;
  int difference = 0;
  int message = 0;
};

/// Runs both schemes side by side for n_max steps and compares per arc.
std::optional<ConsistencyViolation> difference_consistency(const GraphInstance& g, int n_max);

}  // namespace lbp
