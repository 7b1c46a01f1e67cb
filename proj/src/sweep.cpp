#include "lbp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lbp {

namespace {

int default_n_max(int n, int requested) { return requested > 0 ? requested : 2 * n + 10; }

std::string field_diff(const FieldMap& got, const FieldMap& want) {
  for (const auto& [c, v] : want) {
    auto it = got.find(c);
    if (it == got.end()) return "missing value at " + to_string(c);
    if (it->second != v)
      return to_string(c) + ": got " + std::to_string(it->second) + ", expected " +
             std::to_string(v);
  }
  return "";
}

template <typename Fn>
void parallel_over(std::size_t count, int jobs, Fn fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  int spawn = std::min<std::size_t>(jobs, count);
  workers.reserve(spawn);
  for (int w = 0; w < spawn; ++w)
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : workers) t.join();
}

std::vector<BoundaryConfig> sweep_inputs(const GridInstance& g, const VerifyOptions& opts) {
  if (opts.sample <= 0) return enumerate_one_run_boundaries(g, opts.dedup_symmetry);
  std::mt19937_64 rng(opts.seed);
  std::vector<BoundaryConfig> out;
  out.reserve(opts.sample);
  for (int i = 0; i < opts.sample; ++i) out.push_back(random_one_run_boundary(g, rng));
  return out;
}

}  // namespace

BoundaryVerdict verify_one_boundary(const GridInstance& g, const BoundaryConfig& x,
                                    const VerifyOptions& opts) {
  BoundaryVerdict verdict;
  verdict.wire = x.wire();
  int n = g.n();
  int n_max = default_n_max(n, opts.n_max);
  GridGraph gg = GridGraph::build(g, x);
  Trace trace = run_messages(gg.graph, n_max);
  verdict.first_stable = first_stable_iteration(trace);
  if (!verdict.first_stable) {
    verdict.problems.push_back("messages still changing at n_max=" + std::to_string(n_max));
    return verdict;
  }
  if (*verdict.first_stable > 2 * n)
    verdict.problems.push_back("stabilized only at n=" + std::to_string(*verdict.first_stable) +
                               " > 2N=" + std::to_string(2 * n));
  FieldMap estimate = estimate_field(gg, trace.at(std::min(2 * n, n_max)));

  if (n <= opts.limits.dp_cap) {
    MinMarginals dp = dp_min_marginals(g, x, opts.limits);
    FieldMap exact = local_solutions(dp);
    if (std::string d = field_diff(estimate, exact); !d.empty())
      verdict.problems.push_back("estimate vs row-DP oracle: " + d);
    if (n <= opts.limits.enum_cap) {
      MinMarginals br = enumeration_min_marginals(g, x, opts.limits);
      for (int b = 1; b <= n && verdict.ok(); ++b)
        for (int a = 1; a <= n; ++a) {
          const auto& s1 = dp.at({a, b});
          const auto& s2 = br.at({a, b});
          if (s1.o_minus != s2.o_minus || s1.o_plus != s2.o_plus) {
            verdict.problems.push_back("oracle disagreement at " + to_string(Coord{a, b}) +
                                       ": dp (" + std::to_string(s1.o_minus) + "," +
                                       std::to_string(s1.o_plus) + ") enum (" +
                                       std::to_string(s2.o_minus) + "," +
                                       std::to_string(s2.o_plus) + ")");
            break;
          }
        }
    }
  } else {
    verdict.problems.push_back("no exact oracle available at N=" + std::to_string(n) +
                               " with the current caps");
  }

  if (opts.check_regions) {
    try {
      RegionDecomposition d = region_decomposition(g, x);
      FieldMap region_field = closed_form_local_solutions(d);
      if (std::string diff = field_diff(estimate, region_field); !diff.empty())
        verdict.problems.push_back("estimate vs region closed form: " + diff);
    } catch (const Error& e) {
      verdict.problems.push_back(std::string("region decomposition failed: ") + e.what());
    }
  }
  if (opts.check_corner_cases) {
    try {
      CornerCaseField cc = corner_case_field(g, x);
      if (std::string diff = field_diff(estimate, cc.field); !diff.empty())
        verdict.problems.push_back("estimate vs corner-case formula: " + diff);
    } catch (const Error& e) {
      verdict.problems.push_back(std::string("corner-case formula failed: ") + e.what());
    }
  }
  return verdict;
}

VerifySweepResult verify_sweep(int n, const VerifyOptions& opts) {
  GridInstance g(n);
  std::vector<BoundaryConfig> inputs = sweep_inputs(g, opts);
  VerifySweepResult result;
  result.n = n;
  result.boundaries = static_cast<int>(inputs.size());
  result.verdicts.resize(inputs.size());
  parallel_over(inputs.size(), opts.jobs,
                [&](std::size_t i) { result.verdicts[i] = verify_one_boundary(g, inputs[i], opts); });
  for (const auto& v : result.verdicts) {
    if (!v.ok()) ++result.failures;
    if (v.first_stable) result.max_first_stable = std::max(result.max_first_stable, *v.first_stable);
  }
  return result;
}

LemmaSweepResult lemma_sweep(int n, const VerifyOptions& opts) {
  GridInstance g(n);
  std::vector<BoundaryConfig> inputs = sweep_inputs(g, opts);
  LemmaSweepResult result;
  result.n = n;
  result.boundaries = static_cast<int>(inputs.size());
  int n_max = default_n_max(n, opts.n_max);
  std::vector<LemmaSweepStats> stats(inputs.size());
  parallel_over(inputs.size(), opts.jobs, [&](std::size_t i) {
    GridGraph gg = GridGraph::build(g, inputs[i]);
    stats[i] = lemma_sweep_boundary(gg, n_max);
  });
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& s = stats[i];
    result.totals.tuples_considered += s.tuples_considered;
    result.totals.fc_hypotheses += s.fc_hypotheses;
    result.totals.fc_conclusions_ok += s.fc_conclusions_ok;
    result.totals.bc_pairs += s.bc_pairs;
    result.totals.bc_vacuous += s.bc_vacuous;
    result.totals.bc_conclusions_ok += s.bc_conclusions_ok;
    for (const auto& v : s.violations)
      result.totals.violations.push_back(inputs[i].wire() + ": " + v);
  }
  return result;
}

TreeVerdict verify_tree(const GraphInstance& g) {
  TreeVerdict verdict;
  verdict.diameter = g.message_diameter();
  int deadline = verdict.diameter + 1;
  int n_max = deadline + 3;  // slack to observe that stability persists
  Trace trace = run_messages(g, n_max);
  verdict.first_stable = first_stable_iteration(trace);
  if (!verdict.first_stable || *verdict.first_stable > deadline)
    verdict.problems.push_back(
        "messages not stable by diameter+1 = " + std::to_string(deadline) +
        (verdict.first_stable ? " (stable at " + std::to_string(*verdict.first_stable) + ")"
                              : " (never within the window)"));
  verdict.estimates = estimates(g, trace.at(std::min(deadline, n_max)));
  verdict.oracle = graph_min_marginals(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_interior(v)) continue;
    int want = verdict.oracle[v][0] - verdict.oracle[v][1];
    if (verdict.estimates[v] != want)
      verdict.problems.push_back("estimate at vertex " + std::to_string(v) + " is " +
                                 std::to_string(verdict.estimates[v]) + ", oracle difference " +
                                 std::to_string(want));
  }
  if (g.interior_count() <= 15) {
    // unnormalized readout is exact on trees: summed incoming pairs equal the
    // per-site minima
    auto states = run_unnormalized(g, deadline);
    auto sums = unnormalized_estimates(g, states.back());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_interior(v)) continue;
      if (sums[v][0] != verdict.oracle[v][0] || sums[v][1] != verdict.oracle[v][1])
        verdict.problems.push_back("unnormalized sums at vertex " + std::to_string(v) + " (" +
                                   std::to_string(sums[v][0]) + "," + std::to_string(sums[v][1]) +
                                   ") differ from oracle (" + std::to_string(verdict.oracle[v][0]) +
                                   "," + std::to_string(verdict.oracle[v][1]) + ")");
    }
  }
  return verdict;
}

BoundaryConfig random_one_run_boundary(const GridInstance& g, std::mt19937_64& rng) {
  int len = g.ring_length();
  std::uniform_int_distribution<int> start_dist(0, len - 1);
  std::uniform_int_distribution<int> len_dist(1, len - 1);
  int start = start_dist(rng);
  int run_len = len_dist(rng);
  std::vector<std::int8_t> values(len, -1);
  for (int i = 0; i < run_len; ++i) values[(start + i) % len] = 1;
  return BoundaryConfig(g.n(), std::move(values));
}

BoundaryConfig random_boundary(const GridInstance& g, std::mt19937_64& rng) {
  std::vector<std::int8_t> values(g.ring_length());
  for (auto& v : values) v = rng() & 1 ? 1 : -1;
  return BoundaryConfig(g.n(), std::move(values));
}

GraphInstance random_tree_instance(int nodes, int interior, std::mt19937_64& rng) {
  if (nodes < 2 || interior < 1 || interior >= nodes)
    throw Error("random tree needs nodes >= 2 and 1 <= interior < nodes");
  // random attachment tree
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj(nodes);
  for (int v = 1; v < nodes; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    int p = parent(rng);
    edges.push_back({p, v});
    adj[p].push_back(v);
    adj[v].push_back(p);
  }
  // grow a random connected interior set
  std::vector<std::int8_t> values(nodes);
  std::uniform_int_distribution<int> root_dist(0, nodes - 1);
  int root = root_dist(rng);
  std::vector<char> in_set(nodes, 0);
  in_set[root] = 1;
  int size = 1;
  while (size < interior) {
    std::vector<int> candidates;
    for (int v = 0; v < nodes; ++v)
      if (in_set[v])
        for (int u : adj[v])
          if (!in_set[u]) candidates.push_back(u);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    int chosen = candidates[pick(rng)];
    in_set[chosen] = 1;
    ++size;
  }
  for (int v = 0; v < nodes; ++v)
    values[v] = in_set[v] ? std::int8_t{0} : (rng() & 1 ? std::int8_t{1} : std::int8_t{-1});
  return GraphInstance(std::move(values), edges);
}

}  // namespace lbp
