// Command-line front end: run message passing on grid boundaries or tree
// specs, compare against the exact solvers, and sweep the convergence
// properties over whole boundary families.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lbp/json_io.hpp"
#include "lbp/render.hpp"
#include "lbp/sweep.hpp"
#include "lbp/tree_io.hpp"

namespace {

using namespace lbp;

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error("cannot write JSON to '" + path + "'");
  out << j.dump(2) << "\n";
}

void emit_field(const FieldMap& field, int n, const std::string& mode) {
  if (mode == "ascii")
    std::cout << render_field_ascii(field, n);
  else if (mode == "pgm")
    std::cout << render_field_pgm(field, n);
  else if (mode != "none")
    throw Error("unknown render mode '" + mode + "'");
}

std::string describe(const RunStructure& rs) {
  if (rs.uniform) return "uniform";
  if (rs.one_run) return "one-run";
  return std::to_string(rs.runs.size()) + " runs";
}

int cmd_run(const std::string& boundary, int n_max, const std::string& render,
            const std::string& json_path, bool with_oracle, const OracleLimits& limits) {
  BoundaryConfig x = BoundaryConfig::parse(boundary);
  GridInstance g(x.n());
  int window = n_max > 0 ? n_max : 2 * g.n() + 10;
  GridGraph gg = GridGraph::build(g, x);
  Trace trace = run_messages(gg.graph, window);
  auto stable = first_stable_iteration(trace);
  RunStructure rs = classify_boundary(g, x);

  std::cout << "N=" << g.n() << " boundary=" << describe(rs) << " n_max=" << window << "\n";
  if (stable)
    std::cout << "stable from n=" << *stable << "\n";
  else
    std::cout << "messages still changing at n_max\n";
  FieldMap field = estimate_field(gg, trace.at(window));
  emit_field(field, g.n(), render);

  int exit_code = 0;
  json report = {{"boundary", x.wire()},
                 {"n", g.n()},
                 {"n_max", window},
                 {"classification", describe(rs)},
                 {"field", field_to_json(field)},
                 {"trace", trace_to_json(gg, trace)}};
  if (stable) report["first_stable"] = *stable;
  if (with_oracle) {
    MinMarginals mm = g.n() <= limits.enum_cap ? enumeration_min_marginals(g, x, limits)
                                               : dp_min_marginals(g, x, limits);
    FieldMap exact = local_solutions(mm);
    bool match = exact == field;
    std::cout << (match ? "matches the exact field\n" : "DIFFERS from the exact field\n");
    report["oracle"] = {{"field", field_to_json(exact)}, {"match", match}};
    if (!match) exit_code = 1;
  }
  write_json(json_path, report);
  return exit_code;
}

int cmd_verify(int n, const VerifyOptions& opts, const std::string& json_path) {
  VerifySweepResult r = verify_sweep(n, opts);
  std::cout << "N=" << n << ": " << r.boundaries << " boundaries, " << r.failures
            << " failures";
  if (r.max_first_stable >= 0)
    std::cout << ", latest stabilization n=" << r.max_first_stable << " (bound " << 2 * n << ")";
  std::cout << "\n";
  json failures = json::array();
  for (const auto& v : r.verdicts) {
    if (v.ok()) continue;
    for (const auto& p : v.problems) std::cout << "  " << v.wire << ": " << p << "\n";
    failures.push_back({{"boundary", v.wire}, {"problems", v.problems}});
  }
  write_json(json_path, {{"n", n},
                         {"boundaries", r.boundaries},
                         {"failures", r.failures},
                         {"max_first_stable", r.max_first_stable},
                         {"failing", failures}});
  return r.failures == 0 ? 0 : 1;
}

int cmd_lemmas(int n, const VerifyOptions& opts, const std::string& json_path) {
  LemmaSweepResult r = lemma_sweep(n, opts);
  const auto& t = r.totals;
  std::cout << "N=" << n << ": " << r.boundaries << " boundaries, " << t.tuples_considered
            << " tuple/sign candidates, " << t.fc_hypotheses << " hypotheses held, "
            << t.fc_conclusions_ok << " conclusions verified\n";
  std::cout << "pairs: " << t.bc_pairs << " (" << t.bc_vacuous << " with empty intersection), "
            << t.bc_conclusions_ok << " conclusions verified\n";
  for (const auto& v : t.violations) std::cout << "  violation: " << v << "\n";
  json out = lemma_stats_to_json(t);
  out["n"] = n;
  out["boundaries"] = r.boundaries;
  write_json(json_path, out);
  return t.violations.empty() ? 0 : 1;
}

int cmd_regions(const std::string& boundary, const std::string& render,
                const std::string& json_path) {
  BoundaryConfig x = BoundaryConfig::parse(boundary);
  GridInstance g(x.n());
  RunStructure rs = classify_boundary(g, x);
  if (!rs.one_run) {
    std::cout << "boundary is " << describe(rs) << ", not one-run; no decomposition\n";
    return 2;
  }
  RegionDecomposition d = region_decomposition(g, x);
  std::cout << "N=" << g.n() << (d.oracle_fallback ? " (oracle fallback)" : "") << "\n";
  std::cout << "corners: " << d.corners.size();
  for (Coord c : d.corners) std::cout << " " << to_string(c);
  std::cout << "\n";
  if (!d.oracle_fallback) {
    std::cout << "positive paths: " << d.plus.path_count << " of length " << d.plus.path_length
              << ", enclosed " << d.plus.inner_enclosed << ".." << d.plus.outer_enclosed << "\n";
    std::cout << "negative paths: " << d.minus.path_count << " of length " << d.minus.path_length
              << ", enclosed " << d.minus.inner_enclosed << ".." << d.minus.outer_enclosed
              << "\n";
  }
  std::cout << "classes +4/+2/0/-2/-4: " << d.core_plus.size() << "/" << d.fringe_plus.size()
            << "/" << d.neutral.size() << "/" << d.fringe_minus.size() << "/"
            << d.core_minus.size() << (d.partition_ok ? "" : "  [NOT A PARTITION]") << "\n";
  int exit_code = d.partition_ok ? 0 : 1;
  json report = regions_to_json(d);
  report["partition_ok"] = d.partition_ok;
  if (d.partition_ok) {
    FieldMap field = closed_form_local_solutions(d);
    emit_field(field, g.n(), render);
    report["field"] = field_to_json(field);
    CornerCaseField cc = corner_case_field(g, x);
    report["corner_case"] = {{"corner_count", cc.corner_count},
                             {"color_flipped", cc.color_flipped},
                             {"rotation", cc.rotation},
                             {"field", field_to_json(cc.field)}};
    if (cc.field != field) {
      std::cout << "corner-case formula DISAGREES with the decomposition\n";
      exit_code = 1;
    }
  }
  write_json(json_path, report);
  return exit_code;
}

int cmd_oracle(const std::string& boundary, const std::string& method,
               const OracleLimits& limits, const std::string& render,
               const std::string& json_path) {
  BoundaryConfig x = BoundaryConfig::parse(boundary);
  GridInstance g(x.n());
  std::optional<MinMarginals> en, dp;
  if (method == "enum" || method == "both") en = enumeration_min_marginals(g, x, limits);
  if (method == "dp" || method == "both") dp = dp_min_marginals(g, x, limits);
  if (!en && !dp) throw Error("unknown oracle method '" + method + "'");
  int exit_code = 0;
  if (en && dp) {
    bool agree = true;
    for (int b = 1; b <= g.n(); ++b)
      for (int a = 1; a <= g.n(); ++a) {
        const auto& s1 = en->at({a, b});
        const auto& s2 = dp->at({a, b});
        if (s1.o_minus != s2.o_minus || s1.o_plus != s2.o_plus) agree = false;
      }
    std::cout << (agree ? "enum and dp agree\n" : "enum and dp DISAGREE\n");
    if (!agree) exit_code = 1;
  }
  const MinMarginals& mm = dp ? *dp : *en;
  for (int b = g.n(); b >= 1; --b) {
    for (int a = 1; a <= g.n(); ++a) {
      const auto& s = mm.at({a, b});
      std::cout << "(" << a << "," << b << ") " << s.o_minus << "/" << s.o_plus << " -> "
                << s.local() << (a == g.n() ? "\n" : "   ");
    }
  }
  emit_field(local_solutions(mm), g.n(), render);
  json report = {{"boundary", x.wire()}, {"marginals", min_marginals_to_json(mm)}};
  if (en && dp) report["agree"] = exit_code == 0;
  write_json(json_path, report);
  return exit_code;
}

int cmd_tree(const std::string& path, const std::string& json_path) {
  TreeInstance tree = load_tree_file(path);
  TreeVerdict v = verify_tree(tree.graph);
  std::cout << "nodes=" << tree.graph.vertex_count() << " interior=" << tree.graph.interior_count()
            << " diameter=" << v.diameter << "\n";
  if (v.first_stable)
    std::cout << "stable from n=" << *v.first_stable << " (bound " << v.diameter + 1 << ")\n";
  json sites = json::array();
  for (int i = 0; i < tree.graph.vertex_count(); ++i) {
    if (!tree.graph.is_interior(i)) continue;
    std::cout << "  " << tree.names[i] << ": estimate " << v.estimates[i] << ", oracle "
              << v.oracle[i][0] << "/" << v.oracle[i][1] << "\n";
    sites.push_back({{"name", tree.names[i]},
                     {"estimate", v.estimates[i]},
                     {"o_minus", v.oracle[i][0]},
                     {"o_plus", v.oracle[i][1]}});
  }
  for (const auto& p : v.problems) std::cout << "  problem: " << p << "\n";
  json report = {{"diameter", v.diameter}, {"sites", sites}, {"problems", v.problems}};
  if (v.first_stable) report["first_stable"] = *v.first_stable;
  write_json(json_path, report);
  return v.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"min-sum message passing on grid blocks, with exact cross-checks"};
  app.require_subcommand(1);

  std::string boundary, render = "none", json_path, method = "both", tree_path;
  VerifyOptions opts;
  int n = 0, n_max = -1;
  bool with_oracle = false;

  app.add_option("--seed", opts.seed, "seed for randomized sweeps");

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--cap-enum", opts.limits.enum_cap, "largest N the enumeration oracle accepts");
    cmd->add_option("--cap-dp", opts.limits.dp_cap, "largest N the row DP accepts");
  };

  CLI::App* run = app.add_subcommand("run", "run message passing on one boundary");
  run->add_option("boundary", boundary, "wire format, e.g. B3:++++----------- ")->required();
  run->add_option("--n-max", n_max, "iterations to run (default 2N+10)");
  run->add_option("--render", render, "ascii|pgm|none");
  run->add_option("--json", json_path, "write a JSON report here");
  run->add_flag("--oracle", with_oracle, "also compare against the exact field");
  add_caps(run);

  CLI::App* verify = app.add_subcommand("verify", "stabilization + exact-field sweep over one-run boundaries");
  verify->add_option("--n", n, "grid size")->required();
  verify->add_option("--n-max", opts.n_max, "iterations per boundary (default 2N+10)");
  verify->add_option("--jobs", opts.jobs, "worker threads");
  verify->add_option("--sample", opts.sample, "check this many random boundaries instead of all");
  verify->add_flag("--dedup-symmetry", opts.dedup_symmetry, "skip symmetry-equivalent boundaries");
  verify->add_option("--json", json_path, "write a JSON report here");
  add_caps(verify);

  CLI::App* lemmas = app.add_subcommand("lemmas", "directional-convergence sweep over one-run boundaries");
  lemmas->add_option("--n", n, "grid size")->required();
  lemmas->add_option("--n-max", opts.n_max, "iterations per boundary (default 2N+10)");
  lemmas->add_option("--jobs", opts.jobs, "worker threads");
  lemmas->add_option("--sample", opts.sample, "check this many random boundaries instead of all");
  lemmas->add_flag("--dedup-symmetry", opts.dedup_symmetry, "skip symmetry-equivalent boundaries");
  lemmas->add_option("--json", json_path, "write a JSON report here");

  CLI::App* regions = app.add_subcommand("regions", "inner/outer regions and the implied field");
  regions->add_option("boundary", boundary, "wire format")->required();
  regions->add_option("--render", render, "ascii|pgm|none");
  regions->add_option("--json", json_path, "write a JSON report here");

  CLI::App* oracle = app.add_subcommand("oracle", "exact min-marginals for one boundary");
  oracle->add_option("boundary", boundary, "wire format")->required();
  oracle->add_option("--method", method, "enum|dp|both");
  oracle->add_option("--render", render, "ascii|pgm|none");
  oracle->add_option("--json", json_path, "write a JSON report here");
  add_caps(oracle);

  CLI::App* tree = app.add_subcommand("tree", "run and check a tree instance");
  tree->add_option("file", tree_path, "tree spec file")->required();
  tree->add_option("--json", json_path, "write a JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(boundary, n_max, render, json_path, with_oracle, opts.limits);
    if (verify->parsed()) return cmd_verify(n, opts, json_path);
    if (lemmas->parsed()) return cmd_lemmas(n, opts, json_path);
    if (regions->parsed()) return cmd_regions(boundary, render, json_path);
    if (oracle->parsed()) return cmd_oracle(boundary, method, opts.limits, render, json_path);
    if (tree->parsed()) return cmd_tree(tree_path, json_path);
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << " (position " << e.position << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
