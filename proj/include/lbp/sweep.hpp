#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lbp/convergence.hpp"
#include "lbp/engine.hpp"
#include "lbp/oracle.hpp"
#include "lbp/regions.hpp"
#include "lbp/tree_io.hpp"

namespace lbp {

struct VerifyOptions {
  int n_max = -1;  // default 2N+10
  int jobs = 1;
  bool dedup_symmetry = false;
  int sample = 0;  // 0 = every one-run boundary, otherwise a seeded sample
  std::uint64_t seed = 1;
  OracleLimits limits{};
  bool check_regions = true;       // compare against the region closed form
  bool check_corner_cases = true;  // and the corner-count case formulas
};

struct BoundaryVerdict {
  std::string wire;
  std::optional<int> first_stable;
  std::vector<std::string> problems;  // empty = pass

  bool ok() const { return problems.empty(); }
};

/// Full check of a single one-run boundary: messages stabilize by 2N, the
/// estimate field at 2N matches the exact oracle (row DP, cross-checked
/// against enumeration when within cap) and the closed forms.
BoundaryVerdict verify_one_boundary(const GridInstance& g, const BoundaryConfig& x,
                                    const VerifyOptions& opts);

struct VerifySweepResult {
  int n = 0;
  int boundaries = 0;
  int failures = 0;
  int max_first_stable = -1;
  std::vector<BoundaryVerdict> verdicts;  // one per boundary, input order
};

VerifySweepResult verify_sweep(int n, const VerifyOptions& opts);

struct LemmaSweepResult {
  int n = 0;
  int boundaries = 0;
  LemmaSweepStats totals;  // violations aggregated with boundary prefixes
};

LemmaSweepResult lemma_sweep(int n, const VerifyOptions& opts);

struct TreeVerdict {
  int diameter = 0;
  std::optional<int> first_stable;
  std::vector<int> estimates;                  // per vertex at diameter+1
  std::vector<std::array<int, 2>> oracle;      // enumeration min-marginals
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// Runs messages on a tree instance, checks stabilization by diameter+1 and
/// compares the estimates (and, for small instances, the summed unnormalized
/// messages) against the enumeration oracle.
TreeVerdict verify_tree(const GraphInstance& g);

/// Uniformly random one-run boundary: ring start and arc length both uniform.
BoundaryConfig random_one_run_boundary(const GridInstance& g, std::mt19937_64& rng);

/// Independent +-1 per ring site (any configuration, uniform included).
BoundaryConfig random_boundary(const GridInstance& g, std::mt19937_64& rng);

/// Random tree on `nodes` vertices with a connected random interior subtree of
/// size `interior` and random boundary values elsewhere.
GraphInstance random_tree_instance(int nodes, int interior, std::mt19937_64& rng);

}  // namespace lbp
