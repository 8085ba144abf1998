#include "linewalk/reports.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "linewalk/cayley.hpp"
#include "linewalk/line_ops.hpp"
#include "linewalk/spectral.hpp"
#include "linewalk/walk.hpp"

namespace linewalk {

namespace {

std::string format_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", p);
  return buf;
}

}  // namespace

std::string walk_output(const Digraph& g, const std::string& coin_name, int steps,
                        int start_vertex, double tol, bool json) {
  int k = regular_degree(g);
  if (k < 1) throw_error(ErrorCode::NotRegular, "coined walk needs a regular digraph");
  WalkOperator w = build_walk(g, coin_by_name(coin_name, k));
  WalkState state = basis_state(w, 0, start_vertex);

  std::vector<std::vector<double>> dists;
  dists.push_back(distribution(w, state));
  for (int t = 1; t <= steps; ++t) {
    state = evolve(w, std::move(state), 1);
    dists.push_back(distribution(w, state));
  }

  if (!json) {
    std::string out = "t,v,prob\n";
    for (int t = 0; t <= steps; ++t)
      for (int v = 0; v < w.n; ++v)
        out += std::to_string(t) + "," + std::to_string(v) + "," + format_prob(dists[t][v]) + "\n";
    return out;
  }

  nlohmann::ordered_json j;
  j["operator"] = {{"rows", w.k * w.n},
                   {"cols", w.k * w.n},
                   {"coin", coin_name},
                   {"k", w.k},
                   {"n", w.n}};
  auto entries = nlohmann::ordered_json::array();
  for (int r = 0; r < w.k * w.n; ++r)
    for (int c = 0; c < w.k * w.n; ++c) {
      std::complex<double> x = w.u.at(r, c);
      if (std::abs(x) > tol) entries.push_back({r, c, x.real(), x.imag()});
    }
  j["operator"]["entries"] = std::move(entries);
  auto dist_json = nlohmann::ordered_json::array();
  for (int t = 0; t <= steps; ++t) dist_json.push_back(dists[t]);
  j["distributions"] = std::move(dist_json);
  return j.dump(2) + "\n";
}

std::string recognize_output(const Digraph& g, int max_pattern_n, bool json, bool* is_line) {
  bool matrix = is_line_digraph_matrix(g);
  bool pattern_ran = !g.has_loops() && g.vertex_count() <= max_pattern_n;
  bool pattern = pattern_ran ? is_line_digraph_forbidden(g, max_pattern_n) : false;
  if (is_line != nullptr) *is_line = matrix;

  int class_count = -1;
  if (matrix) class_count = static_cast<int>(recover_partitions(g).a_classes.size());

  if (json) {
    nlohmann::ordered_json j;
    j["matrix-criterion"] = matrix;
    if (pattern_ran)
      j["pattern-criterion"] = pattern;
    else
      j["pattern-criterion"] = nullptr;
    j["line-digraph"] = matrix;
    if (class_count >= 0) j["partition-classes"] = class_count;
    return j.dump(2) + "\n";
  }

  std::string out;
  out += std::string("matrix-criterion: ") + (matrix ? "yes" : "no") + "\n";
  if (pattern_ran) {
    out += std::string("pattern-criterion: ") + (pattern ? "yes" : "no") + "\n";
    if (matrix != pattern) out += "warning: criteria disagree\n";
  } else {
    out += "pattern-criterion: skipped (n > " + std::to_string(max_pattern_n) + ")\n";
  }
  out += std::string("line-digraph: ") + (matrix ? "yes" : "no") + "\n";
  if (class_count >= 0) out += "partition-classes: " + std::to_string(class_count) + "\n";
  return out;
}

std::string cayley_demo_output(int n, bool json, bool* all_passed) {
  CycleExampleReport report = verify_cycle_example(n);
  CayleyDigraph prism = cayley_dihedral(n);
  if (all_passed != nullptr) *all_passed = report.all();

  if (json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["line-of-bidirected-cycle-isomorphic-to-prism"] = report.line_isomorphic_to_prism;
    j["prism-adjacency-matches-block-form"] = report.prism_matches_block_form;
    j["block-form-equals-rotation-factors"] = report.block_form_from_factors;
    j["ok"] = report.all();
    j["prism-edge-list"] = format_edge_list(prism.graph);
    return j.dump(2) + "\n";
  }

  auto line = [](const char* id, bool ok) {
    return std::string("[") + (ok ? "pass" : "fail") + "] " + id + "\n";
  };
  std::string out;
  out += line("line-of-bidirected-cycle-isomorphic-to-prism", report.line_isomorphic_to_prism);
  out += line("prism-adjacency-matches-block-form", report.prism_matches_block_form);
  out += line("block-form-equals-rotation-factors", report.block_form_from_factors);
  out += "# prism edge list\n";
  out += format_edge_list(prism.graph);
  return out;
}

std::string debruijn_charpoly_line(int d, int k, bool* ok) {
  bool pass = debruijn_spectrum_check(d, k);
  if (ok != nullptr) *ok = pass;
  if (pass) {
    long long e = 1;
    for (int i = 0; i < k; ++i) e *= d;
    --e;
    std::string factored;
    if (e == 0)
      factored = "(x-" + std::to_string(d) + ")";
    else if (e == 1)
      factored = "x*(x-" + std::to_string(d) + ")";
    else
      factored = "x^" + std::to_string(e) + "*(x-" + std::to_string(d) + ")";
    return "charpoly: " + factored + "\n";
  }
  return "charpoly: " + char_poly(adjacency(debruijn(d, k, 512))).to_string() + "\n";
}

std::string spectrum_output(const Digraph& g) {
  return "charpoly: " + char_poly(adjacency(g)).to_string() + "\n";
}

std::string permanent_output(const Digraph& g) {
  return "permanent: " + permanent(adjacency(g)).to_string() + "\n";
}

}  // namespace linewalk
