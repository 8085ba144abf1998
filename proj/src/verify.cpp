#include "linewalk/verify.hpp"

#include <exception>

#include <json.hpp>

#include "linewalk/cayley.hpp"
#include "linewalk/factorization.hpp"
#include "linewalk/generators.hpp"
#include "linewalk/line_ops.hpp"
#include "linewalk/spectral.hpp"
#include "linewalk/walk.hpp"

namespace linewalk {

bool Report::all_passed() const {
  for (const CheckResult& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

int Report::count(CheckStatus s) const {
  int total = 0;
  for (const CheckResult& c : checks)
    if (c.status == s) ++total;
  return total;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    default:
      return "skip";
  }
}

class Suite {
 public:
  Suite(Report& report, std::string prefix) : report_(report), prefix_(std::move(prefix)) {}

  template <typename Fn>
  void run(const std::string& id, Fn&& fn) {
    CheckResult result;
    result.id = prefix_ + id;
    try {
      fn(result);
    } catch (const Error& e) {
      result.status = CheckStatus::Fail;
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.status = CheckStatus::Fail;
      result.detail = std::string("unexpected: ") + e.what();
    }
    report_.checks.push_back(std::move(result));
  }

 private:
  Report& report_;
  std::string prefix_;
};

void set(CheckResult& r, bool ok, const std::string& detail) {
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = detail;
}

void skip(CheckResult& r, const std::string& why) {
  r.status = CheckStatus::Skip;
  r.detail = "skipped: " + why;
}

void run_checks(Report& report, const Digraph& g, const VerifyOptions& opt,
                const std::string& prefix) {
  Suite suite(report, prefix);
  const int n = g.vertex_count();
  const int m = g.arc_count();
  const int k = regular_degree(g);
  long long projected_line_arcs = 0;
  for (int v = 0; v < n; ++v)
    projected_line_arcs += static_cast<long long>(g.out_degree(v)) * g.in_degree(v);
  const bool line_feasible = projected_line_arcs <= 2000000;

  suite.run("line-order", [&](CheckResult& r) {
    if (m == 0) return skip(r, "no arcs");
    if (!line_feasible) return skip(r, "line digraph too large");
    Digraph line = line_digraph(g).graph;
    long long expected_arcs = 0;
    for (int v = 0; v < n; ++v)
      expected_arcs += static_cast<long long>(g.out_degree(v)) * g.in_degree(v);
    bool ok = line.vertex_count() == m && line.arc_count() == expected_arcs;
    set(r, ok,
        "|V(L)|=" + std::to_string(line.vertex_count()) + " vs m=" + std::to_string(m) +
            "; |A(L)|=" + std::to_string(line.arc_count()) + " vs sum(d+ d-)=" +
            std::to_string(expected_arcs));
  });

  suite.run("line-degrees", [&](CheckResult& r) {
    if (m == 0) return skip(r, "no arcs");
    if (!line_feasible) return skip(r, "line digraph too large");
    ArcLabeledDigraph line = line_digraph(g);
    bool ok = true;
    for (int v = 0; v < line.graph.vertex_count() && ok; ++v) {
      const Arc& a = line.base_arc_of[v];
      if (line.graph.in_degree(v) != g.in_degree(a.first) ||
          line.graph.out_degree(v) != g.out_degree(a.second))
        ok = false;
    }
    set(r, ok, "per-vertex degrees of L match d-(tail), d+(head)");
  });

  suite.run("line-strong-connectivity", [&](CheckResult& r) {
    if (n == 0 || m < 2) return skip(r, "fewer than two arcs");
    if (!line_feasible) return skip(r, "line digraph too large");
    for (int v = 0; v < n; ++v)
      if (g.in_degree(v) + g.out_degree(v) == 0) return skip(r, "isolated vertex present");
    bool base = is_strongly_connected(g);
    bool line = is_strongly_connected(line_digraph(g).graph);
    set(r, base == line,
        std::string("base ") + (base ? "strong" : "not strong") + ", line " +
            (line ? "strong" : "not strong"));
  });

  suite.run("line-eulerian-balance", [&](CheckResult& r) {
    if (m == 0) return skip(r, "no arcs");
    if (!line_feasible) return skip(r, "line digraph too large");
    Digraph line = line_digraph(g).graph;
    bool arc_condition = true;
    for (const Arc& a : g.arcs())
      if (g.in_degree(a.first) != g.out_degree(a.second)) arc_condition = false;
    bool expected = arc_condition && is_weakly_connected(line);
    bool actual = is_eulerian(line);
    set(r, expected == actual,
        std::string("line ") + (actual ? "eulerian" : "not eulerian") +
            "; per-arc balance condition " + (arc_condition ? "holds" : "fails"));
  });

  suite.run("hamilton-from-euler", [&](CheckResult& r) {
    if (m == 0 || !is_eulerian(g) || !is_strongly_connected(g))
      return skip(r, "not eulerian");
    if (!line_feasible) return skip(r, "line digraph too large");
    std::vector<int> cycle = euler_to_hamilton(g);
    Digraph line = line_digraph(g).graph;
    set(r, is_hamilton_dicycle(line, cycle),
        "euler circuit lifts to a hamilton dicycle of L on " + std::to_string(cycle.size()) +
            " vertices");
  });

  suite.run("recognition-agreement", [&](CheckResult& r) {
    if (g.has_loops()) return skip(r, "loops present");
    if (n > opt.max_recognition_n)
      return skip(r, "n > " + std::to_string(opt.max_recognition_n));
    bool matrix = is_line_digraph_matrix(g);
    bool forbidden = is_line_digraph_forbidden(g, opt.max_recognition_n);
    set(r, matrix == forbidden,
        std::string("matrix says ") + (matrix ? "yes" : "no") + ", pattern scan says " +
            (forbidden ? "yes" : "no"));
  });

  suite.run("line-recognized", [&](CheckResult& r) {
    if (m == 0) return skip(r, "no arcs");
    if (!line_feasible || m > 2000) return skip(r, "line digraph too large");
    Digraph line = line_digraph(g).graph;
    if (line.has_loops()) return skip(r, "line digraph has loops");
    set(r, is_line_digraph_matrix(line), "constructed line digraph passes recognition");
  });

  suite.run("charpoly-shift", [&](CheckResult& r) {
    if (m < n || m == 0) return skip(r, "fewer arcs than vertices");
    if (m > 64) return skip(r, "m > 64 (exact charpoly of the line digraph)");
    set(r, verify_line_charpoly(g),
        "charpoly(L) equals x^" + std::to_string(m - n) + " times charpoly(base), exactly");
  });

  suite.run("permanent-positivity", [&](CheckResult& r) {
    if (m > opt.max_permanent_arcs)
      return skip(r, "m > " + std::to_string(opt.max_permanent_arcs));
    bool positive = permanent_positivity_check(g);
    set(r, true,
        std::string("per(M(L)) ") + (positive ? "> 0" : "= 0") + " matches component balance");
  });

  suite.run("pseudo-inverse-witness", [&](CheckResult& r) {
    if (k < 1) return skip(r, "not regular");
    if (k * n > 128) return skip(r, "k*n > 128 (exact rational products)");
    penrose_witness_regular(g);  // throws on violation
    set(r, true, "transpose/k^2 satisfies all four conditions in exact rationals");
  });

  suite.run("walk-support", [&](CheckResult& r) {
    if (k < 1) return skip(r, "not regular");
    if (k * n > 256) return skip(r, "k*n > 256 (dense operator)");
    SupportReport sr = verify_underlying_line_digraph(g, coin_by_name(opt.coin, k), opt.tol);
    std::string detail = std::string("unitary ") + (sr.unitary ? "ok" : "FAIL") + "; support " +
                         (sr.coin_has_zeros ? "contained in" : "equals") + " block pattern " +
                         (sr.support_matches ? "ok" : "FAIL") + "; reverse recognition " +
                         (sr.recognition_skipped ? "skipped" : (sr.reverse_recognized ? "ok" : "FAIL"));
    set(r, sr.all(), detail);
  });

  suite.run("iterated-regularity", [&](CheckResult& r) {
    if (k < 1) return skip(r, "not regular");
    if (static_cast<long long>(k) * k * n > 5000) return skip(r, "second iterate too large");
    if (!is_strongly_connected(g)) return skip(r, "not strongly connected");
    Digraph l1 = line_digraph(g).graph;
    Digraph l2 = line_digraph(l1).graph;
    bool ok = regular_degree(l1) == k && regular_degree(l2) == k && is_eulerian(l1) &&
              is_eulerian(l2) && is_hamilton_dicycle(l1, euler_to_hamilton(g)) &&
              is_hamilton_dicycle(l2, euler_to_hamilton(l1));
    set(r, ok, "first two iterates are regular, eulerian, and hamiltonian");
  });

  suite.run("factor-block-form", [&](CheckResult& r) {
    if (k < 1) return skip(r, "not regular");
    if (static_cast<long long>(k) * n > 2000) return skip(r, "block form too large");
    Factorization f = one_factorization(g);
    IntMatrix sum(n, n);
    for (const OneFactor& factor : f.factors) sum = sum + factor_matrix(factor);
    bool sums = sum == adjacency(g);
    IntMatrix block = block_line_matrix(f);
    IntMatrix line_adj = adjacency(line_digraph(g).graph);
    std::vector<int> p = permutation_to_line_labels(f);
    bool conjugate = true;
    for (int a = 0; a < line_adj.rows() && conjugate; ++a)
      for (int b = 0; b < line_adj.cols() && conjugate; ++b)
        if (line_adj.at(a, b) != block.at(p[a], p[b])) conjugate = false;
    set(r, sums && conjugate,
        std::string("factor matrices sum to adjacency ") + (sums ? "ok" : "FAIL") +
            "; relabeled line adjacency equals block form " + (conjugate ? "ok" : "FAIL"));
  });
}

}  // namespace

Report verify_digraph(const Digraph& g, const VerifyOptions& options) {
  Report report;
  report.command = "verify";
  report.n = g.vertex_count();
  report.m = g.arc_count();
  report.regularity = regular_degree(g);
  run_checks(report, g, options, "");
  return report;
}

Report verify_random(int count, std::uint64_t seed, const VerifyOptions& options) {
  Report report;
  report.command = "verify --random " + std::to_string(count);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    Digraph g;
    switch (i % 3) {
      case 0:
        g = random_digraph(rng, 4 + rng.below(4), 30);
        break;
      case 1: {
        int n = 5 + rng.below(3);
        g = random_regular_digraph(rng, n, 2 + rng.below(2));
        break;
      }
      default:
        g = random_eulerian_strongly_connected(rng, 4 + rng.below(4));
        break;
    }
    std::string prefix = "i" + std::to_string(i) + "/";
    report.checks.push_back(
        {prefix + "instance", CheckStatus::Pass,
         "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.arc_count()) +
             " regular=" + std::to_string(regular_degree(g))});
    run_checks(report, g, options, prefix);
  }
  return report;
}

std::string report_to_text(const Report& report) {
  std::string out = "command: " + report.command + "\n";
  if (report.n > 0 || report.m > 0)
    out += "input: n=" + std::to_string(report.n) + " m=" + std::to_string(report.m) +
           " regular=" + std::to_string(report.regularity) + "\n";
  for (const CheckResult& c : report.checks)
    out += std::string("[") + status_name(c.status) + "] " + c.id + ": " + c.detail + "\n";
  out += "result: " + std::string(report.all_passed() ? "pass" : "fail") + " (" +
         std::to_string(report.checks.size()) + " checks: " +
         std::to_string(report.count(CheckStatus::Pass)) + " pass, " +
         std::to_string(report.count(CheckStatus::Fail)) + " fail, " +
         std::to_string(report.count(CheckStatus::Skip)) + " skipped)\n";
  return out;
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["input"] = {{"n", report.n}, {"m", report.m}, {"regular", report.regularity}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks)
    j["checks"].push_back({{"id", c.id}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["ok"] = report.all_passed();
  return j.dump(2) + "\n";
}

}  // namespace linewalk
