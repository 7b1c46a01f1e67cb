#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lbp/engine.hpp"
#include "lbp/graph.hpp"

namespace lbp {

/// Size guards for the exact solvers. Enumeration walks 2^(N^2) interior
/// configurations; the row DP walks N * 2^N states. Raise the caps explicitly
/// when a bigger exact run is really wanted.
struct OracleLimits {
  int enum_cap = 4;
  int dp_cap = 12;
};

/// A +-1 assignment to the N^2 interior sites, row-major ((1,1), (2,1), ...).
struct InteriorConfig {
  int n = 0;
  std::vector<std::int8_t> values;

  static InteriorConfig from_bits(int n, std::uint64_t bits);
  std::uint64_t to_bits() const;
  int value(Coord c) const { return values[(c.b - 1) * n + (c.a - 1)]; }

  bool operator==(const InteriorConfig&) const = default;
};

/// Number of disagreeing edges among edges with at least one interior
/// endpoint (interior-interior and interior-boundary; ring edges excluded).
int count_odd_bonds(const GridInstance& g, const BoundaryConfig& x, const InteriorConfig& c);

struct SiteMarginals {
  int o_minus = 0;  // best total cost with this site pinned to -1
  int o_plus = 0;
  int local() const { return o_minus - o_plus; }
};

struct MinMarginals {
  int n = 0;
  std::vector<SiteMarginals> sites;  // row-major interior order

  const SiteMarginals& at(Coord c) const { return sites[(c.b - 1) * n + (c.a - 1)]; }
  int minimum() const;  // optimum over all interior configurations
};

/// Exact min-marginals by enumerating all 2^(N^2) interior configurations.
MinMarginals enumeration_min_marginals(const GridInstance& g, const BoundaryConfig& x,
                                       const OracleLimits& limits = {});

/// Exact min-marginals by a row-by-row sweep: forward costs F[b][s], backward
/// costs G[b][s], per-site minima from F + G minus the double-counted row term.
MinMarginals dp_min_marginals(const GridInstance& g, const BoundaryConfig& x,
                              const OracleLimits& limits = {});

/// o* per interior site: O*(-1) - O*(+1).
FieldMap local_solutions(const MinMarginals& mm);

struct GlobalSolutionSet {
  int minimum = 0;
  std::vector<InteriorConfig> configs;  // ascending bit-counter order
};

/// All interior configurations achieving the optimum (enumeration-backed).
GlobalSolutionSet global_solutions(const GridInstance& g, const BoundaryConfig& x,
                                   const OracleLimits& limits = {});

/// Exact min-marginals for a generic instance by enumerating interior
/// assignments; cost counts message-bearing edges. Entries for boundary
/// vertices are {0,0}. Guarded by interior_cap.
std::vector<std::array<int, 2>> graph_min_marginals(const GraphInstance& g,
                                                    int interior_cap = 20);

}  // namespace lbp
