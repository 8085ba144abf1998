// Acceptance suite: the exact-reproduction fixtures and property sweeps that
// gate a release. One line per criterion; exit status 0 only when every
// criterion passes inside its time budget. All expected values are exact or
// carry the tolerance stated inline.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "linewalk/cayley.hpp"
#include "linewalk/factorization.hpp"
#include "linewalk/generators.hpp"
#include "linewalk/line_ops.hpp"
#include "linewalk/rng.hpp"
#include "linewalk/spectral.hpp"
#include "linewalk/verify.hpp"
#include "linewalk/walk.hpp"

using namespace linewalk;

namespace {

Digraph two_cube() {
  return Digraph(4, {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}}, false);
}

const std::vector<int> kSwapAdjacent{1, 0, 3, 2};
const std::vector<int> kSwapAcross{2, 3, 0, 1};

struct Criterion {
  std::string name;
  double limit_ms;
  std::function<bool()> run;
};

// 1. Worked fixture: the block form of the chosen 2-cube factor pair and the
//    labeling that carries the line digraph onto it, both bit-exact.
bool block_line_labeling_fixture() {
  Digraph d = two_cube();
  Factorization f = make_factorization(d, {kSwapAdjacent, kSwapAcross});
  IntMatrix block = block_line_matrix(f);

  const int expected[8][8] = {
      {0, 1, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0, 0}};
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (block.at(r, c) != BigInt(expected[r][c])) return false;

  IntMatrix line_adj = adjacency(line_digraph(d).graph);
  std::vector<int> p = permutation_to_line_labels(f);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (line_adj.at(a, b) != block.at(p[a], p[b])) return false;
  return true;
}

// 2. Line digraph order and size on 500 seeded random digraphs, n <= 8.
bool line_order_and_size() {
  Rng rng(1001);
  int done = 0;
  while (done < 500) {
    Digraph g = random_digraph(rng, 2 + rng.below(7), 35);
    if (g.arc_count() == 0) continue;
    Digraph l = line_digraph(g).graph;
    long long expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      expected += static_cast<long long>(g.out_degree(v)) * g.in_degree(v);
    if (l.vertex_count() != g.arc_count()) return false;
    if (l.arc_count() != expected) return false;
    ++done;
  }
  return true;
}

// 3. Matrix recognition agrees with the forbidden-pattern scan: exhaustively
//    on all 4096 loopless digraphs with n = 4, then on 500 random n <= 7.
bool recognition_cross_validation() {
  for (int mask = 0; mask < (1 << 12); ++mask) {
    std::vector<Arc> arcs;
    int bit = 0;
    for (int t = 0; t < 4; ++t)
      for (int h = 0; h < 4; ++h) {
        if (t == h) continue;
        if (mask & (1 << bit)) arcs.emplace_back(t, h);
        ++bit;
      }
    Digraph g(4, std::move(arcs), false);
    if (is_line_digraph_matrix(g) != is_line_digraph_forbidden(g)) return false;
  }
  Rng rng(1003);
  for (int i = 0; i < 500; ++i) {
    Digraph g = random_digraph(rng, 3 + rng.below(5), 30);
    if (is_line_digraph_matrix(g) != is_line_digraph_forbidden(g)) return false;
  }
  return true;
}

// 4. Exact polynomial identity charpoly(L) = x^(m-n) charpoly(base) on 200
//    seeded random digraphs with m >= n, n <= 7.
bool charpoly_identity() {
  Rng rng(1004);
  int done = 0;
  while (done < 200) {
    Digraph g = random_digraph(rng, 2 + rng.below(6), 45);
    if (g.arc_count() < g.vertex_count() || g.arc_count() == 0) continue;
    if (!verify_line_charpoly(g)) return false;
    ++done;
  }
  return true;
}

// 5. De Bruijn spectra: charpoly(B(d,k)) = x^(d^k - 1)(x - d) exactly.
bool debruijn_spectra() {
  for (int d = 2; d <= 3; ++d)
    for (int k = 2; k <= 4; ++k)
      if (!debruijn_spectrum_check(d, k)) return false;
  return true;
}

// 6. Walk support: unitary within 1e-12, support equals the transposed block
//    pattern exactly, and the reversed support passes recognition; on the
//    2-cube with the Hadamard coin, cycles with the trivial coin, and 20
//    seeded random k-regular digraphs (k in {2,3}, n <= 8).
bool walk_support_pattern() {
  auto accept = [](const SupportReport& r) {
    return r.unitary && !r.coin_has_zeros && r.support_matches && r.reverse_recognized;
  };
  if (!accept(verify_underlying_line_digraph(two_cube(), coin_hadamard(), 1e-12))) return false;
  for (int n : {3, 5, 8})
    if (!accept(verify_underlying_line_digraph(dicycle(n), coin_by_name("auto", 1), 1e-12)))
      return false;
  Rng rng(1006);
  for (int i = 0; i < 20; ++i) {
    int k = 2 + (i % 2);
    int n = k + 2 + rng.below(7 - k);  // keeps k <= n-1 and n <= 8
    Digraph g = random_regular_digraph(rng, n, k);
    CxMatrix coin = (i % 4 < 2) ? coin_fourier(k)
                                : (k == 2 ? coin_fourier(2) : coin_grover(k));
    if (!accept(verify_underlying_line_digraph(g, coin, 1e-12))) return false;
  }
  return true;
}

// 7. Probability conservation within 1e-10 at every one of 1000 steps, on the
//    2-cube Hadamard walk and a Fourier walk on a 3-regular 8-vertex digraph.
bool probability_conservation() {
  auto conserved = [](const Digraph& g, const CxMatrix& coin) {
    WalkOperator w = build_walk(g, coin);
    WalkState s = basis_state(w, 0, 0);
    for (int t = 0; t < 1000; ++t) {
      s = evolve(w, std::move(s), 1);
      double total = 0.0;
      for (double p : distribution(w, s)) total += p;
      if (std::abs(total - 1.0) > 1e-10) return false;
    }
    return true;
  };
  if (!conserved(two_cube(), coin_hadamard())) return false;
  Rng rng(1007);
  return conserved(random_regular_digraph(rng, 8, 3), coin_fourier(3));
}

// 8. The euler circuit lifts to a verified hamilton dicycle of the line
//    digraph on 50 seeded eulerian strongly connected digraphs, n <= 7.
bool hamilton_lift() {
  Rng rng(1008);
  for (int i = 0; i < 50; ++i) {
    Digraph g = random_eulerian_strongly_connected(rng, 3 + rng.below(5));
    if (!is_hamilton_dicycle(line_digraph(g).graph, euler_to_hamilton(g))) return false;
  }
  return true;
}

// 9. Exact permanent sign of M(L) matches component-wise balance on 100
//    seeded random digraphs with m <= 16.
bool permanent_positivity() {
  Rng rng(1009);
  int done = 0;
  while (done < 100) {
    Digraph g = random_digraph(rng, 2 + rng.below(5), 30);
    if (g.arc_count() > 16) continue;
    bool positive = g.arc_count() == 0
                        ? true
                        : permanent(adjacency(line_digraph(g).graph)) > BigInt(0);
    if (positive != all_components_eulerian(g)) return false;
    ++done;
  }
  return true;
}

// 10. transpose(M)/k^2 passes all four pseudo-inverse conditions in exact
//     rationals: cycles up to n = 8, the 2-cube, 10 random k-regular hosts.
bool penrose_witnesses() {
  try {
    for (int n = 3; n <= 8; ++n) penrose_witness_regular(dicycle(n));
    penrose_witness_regular(two_cube());
    Rng rng(1010);
    for (int i = 0; i < 10; ++i) {
      int k = 1 + (i % 3);
      int n = k + 2 + rng.below(4 - k);  // n <= 6
      penrose_witness_regular(random_regular_digraph(rng, n, k));
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

// 11. Bidirected-cycle example for n in {3, 5, 7}: the line digraph is the
//     dihedral prism and its adjacency is permutation-similar to the
//     rotation block form.
bool cycle_example() {
  for (int n : {3, 5, 7})
    if (!verify_cycle_example(n).all()) return false;
  return true;
}

// 12. Iterate behavior: (i) every seeded random DAG empties within its
//     longest-dipath length; (ii) two joined dicycles have p(n+5) > p(n) for
//     n <= 10; (iii) among 200 seeded strongly connected digraphs with
//     n <= 5, an iterate is isomorphic to the base only for dicycles.
bool iterate_behavior() {
  Rng rng(1012);
  for (int i = 0; i < 100; ++i) {
    Digraph dag = random_dag(rng, 2 + rng.below(6), 40);
    int len = longest_dipath_length(dag);
    if (iterated_line_digraph(dag, len).graph.arc_count() != 0) return false;
  }

  Digraph joined(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}}, false);
  std::vector<int> sizes;
  for (int n = 1; n <= 15; ++n)
    sizes.push_back(iterated_line_digraph(joined, n).graph.vertex_count());
  for (int n = 1; n <= 10; ++n)
    if (sizes[n + 4] <= sizes[n - 1]) return false;

  Rng rng2(1013);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + rng2.below(4);
    Digraph g = random_strongly_connected(rng2, n, 15);
    bool cycle_shape = g.arc_count() == n && regular_degree(g) == 1;
    Digraph current = g;
    for (int step = 1; step <= 4; ++step) {
      current = line_digraph(current).graph;
      if (current.vertex_count() != n) continue;
      if (isomorphic(current, g, 8).has_value() && !cycle_shape) return false;
    }
    if (cycle_shape && !isomorphic(line_digraph(g).graph, g, 8).has_value()) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"block-line-labeling-fixture", 1000.0, block_line_labeling_fixture},
      {"line-order-and-size", 5000.0, line_order_and_size},
      {"recognition-cross-validation", 60000.0, recognition_cross_validation},
      {"charpoly-identity", 30000.0, charpoly_identity},
      {"debruijn-spectra", 30000.0, debruijn_spectra},
      {"walk-support-pattern", 10000.0, walk_support_pattern},
      {"probability-conservation", 10000.0, probability_conservation},
      {"hamilton-lift", 10000.0, hamilton_lift},
      {"permanent-positivity", 60000.0, permanent_positivity},
      {"penrose-witnesses", 10000.0, penrose_witnesses},
      {"cycle-example", 30000.0, cycle_example},
      {"iterate-behavior", 60000.0, iterate_behavior},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("  (") + e.what() + ")";
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    bool in_time = ms <= c.limit_ms;
    bool overall = ok && in_time;
    if (overall) ++passed;
    std::printf("[%s] %2zu/%zu %-32s %8.1f ms (limit %.0f ms)%s\n",
                overall ? "pass" : "FAIL", i + 1, criteria.size(), c.name.c_str(), ms,
                c.limit_ms, note.c_str());
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
