#include <doctest.h>

#include <algorithm>
#include <set>

#include "linewalk/cayley.hpp"
#include "linewalk/line_ops.hpp"
#include "linewalk/generators.hpp"
#include "linewalk/rng.hpp"

using namespace linewalk;

namespace {

Digraph two_cube() {
  return Digraph(4, {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}}, false);
}

// Every loopless digraph on 4 vertices, indexed by the 12-bit arc mask.
Digraph loopless_on_four(int mask) {
  std::vector<Arc> arcs;
  int bit = 0;
  for (int t = 0; t < 4; ++t)
    for (int h = 0; h < 4; ++h) {
      if (t == h) continue;
      if (mask & (1 << bit)) arcs.emplace_back(t, h);
      ++bit;
    }
  return Digraph(4, std::move(arcs), false);
}

}  // namespace

TEST_CASE("line digraph of the 2-cube") {
  ArcLabeledDigraph l = line_digraph(two_cube());
  CHECK(l.graph.vertex_count() == 8);
  CHECK(l.graph.arc_count() == 16);
  CHECK(l.base_arc_of.size() == 8);
  // Labeled arcs chain head-to-tail.
  for (const Arc& a : l.graph.arcs())
    CHECK(l.base_arc_of[a.first].second == l.base_arc_of[a.second].first);
  CHECK(regular_degree(l.graph) == 2);
}

TEST_CASE("line of a dicycle is a dicycle, line of a dipath drops one vertex") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(isomorphic(line_digraph(dicycle(n)).graph, dicycle(n)).has_value());
    Digraph lp = line_digraph(dipath(n + 1)).graph;
    CHECK(lp == dipath(n));  // lexicographic order keeps the path order
  }
  CHECK_THROWS_AS(line_digraph(Digraph(3, {})), Error);
}

TEST_CASE("path and cycle shapes transfer in both directions") {
  // Exhaustive over loopless 4-vertex digraphs without isolated vertices:
  // the line digraph is a 3-dipath exactly when the base is a 4-dipath, and
  // a 4-dicycle exactly when the base is one.
  for (int mask = 1; mask < (1 << 12); ++mask) {
    Digraph g = loopless_on_four(mask);
    bool isolated = false;
    for (int v = 0; v < 4; ++v)
      if (g.in_degree(v) + g.out_degree(v) == 0) isolated = true;
    if (isolated || g.arc_count() == 0) continue;
    Digraph l = line_digraph(g).graph;

    bool base_is_path = isomorphic(g, dipath(4)).has_value();
    bool line_is_path =
        l.vertex_count() == 3 && isomorphic(l, dipath(3)).has_value();
    CHECK(base_is_path == line_is_path);

    bool base_is_cycle = isomorphic(g, dicycle(4)).has_value();
    bool line_is_cycle =
        l.vertex_count() == 4 && isomorphic(l, dicycle(4), 12).has_value();
    CHECK(base_is_cycle == line_is_cycle);
  }
}

TEST_CASE("order and size identities on random digraphs") {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    Digraph g = random_digraph(rng, 2 + rng.below(7), 35);
    if (g.arc_count() == 0) continue;
    ArcLabeledDigraph l = line_digraph(g);
    long long expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      expected += static_cast<long long>(g.out_degree(v)) * g.in_degree(v);
    CHECK(l.graph.vertex_count() == g.arc_count());
    CHECK(l.graph.arc_count() == expected);
    // Degree transfer: in-degree of (u,v) is d-(u), out-degree is d+(v).
    for (int v = 0; v < l.graph.vertex_count(); ++v) {
      CHECK(l.graph.in_degree(v) == g.in_degree(l.base_arc_of[v].first));
      CHECK(l.graph.out_degree(v) == g.out_degree(l.base_arc_of[v].second));
    }
    // Strong connectivity transfers when every vertex carries an arc and the
    // line digraph is not the one-vertex trivial case.
    bool isolated = false;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.in_degree(v) + g.out_degree(v) == 0) isolated = true;
    if (!isolated && g.arc_count() >= 2)
      CHECK(is_strongly_connected(l.graph) == is_strongly_connected(g));
  }
}

TEST_CASE("eulerian line digraphs and the per-arc balance condition") {
  Rng rng(78);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    Digraph g = random_digraph(rng, 2 + rng.below(6), 40);
    if (g.arc_count() == 0) continue;
    Digraph l = line_digraph(g).graph;
    bool arc_condition = true;
    for (const Arc& a : g.arcs())
      if (g.in_degree(a.first) != g.out_degree(a.second)) arc_condition = false;
    CHECK(is_eulerian(l) == (arc_condition && is_weakly_connected(l)));
    ++checked;
  }
  CHECK(checked > 50);
  // On strongly connected hosts the connectivity proviso is automatic.
  for (int i = 0; i < 40; ++i) {
    Digraph g = random_strongly_connected(rng, 3 + rng.below(5), 20);
    Digraph l = line_digraph(g).graph;
    bool arc_condition = true;
    for (const Arc& a : g.arcs())
      if (g.in_degree(a.first) != g.out_degree(a.second)) arc_condition = false;
    CHECK(is_eulerian(l) == arc_condition);
  }
}

TEST_CASE("iterates label dipaths and empty out on DAGs") {
  IteratedLineDigraph twice = iterated_line_digraph(dipath(4), 2);
  CHECK(twice.graph == dipath(2));
  for (int v = 0; v < twice.graph.vertex_count(); ++v) CHECK(twice.dipath_of[v].size() == 3);

  IteratedLineDigraph zero = iterated_line_digraph(two_cube(), 0);
  CHECK(zero.graph == two_cube());
  CHECK(zero.dipath_of[2] == std::vector<int>{2});

  Rng rng(90);
  for (int i = 0; i < 60; ++i) {
    Digraph dag = random_dag(rng, 2 + rng.below(6), 40);
    int len = longest_dipath_length(dag);
    IteratedLineDigraph it = iterated_line_digraph(dag, len);
    CHECK(it.graph.arc_count() == 0);
    if (len > 0) CHECK(iterated_line_digraph(dag, len - 1).graph.arc_count() > 0);
    CHECK(iterated_line_digraph(dag, len + 1).graph.vertex_count() == 0);
  }

  CHECK_THROWS_AS(iterated_line_digraph(complete_with_loops(3), 10, 100), Error);
}

TEST_CASE("iterate counts diverge with two joined dicycles") {
  // Two 3-dicycles joined by the arc 2 -> 3.
  Digraph joined(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}}, false);
  std::vector<int> sizes;
  for (int n = 1; n <= 15; ++n)
    sizes.push_back(iterated_line_digraph(joined, n).graph.vertex_count());
  for (int n = 1; n <= 10; ++n) CHECK(sizes[n + 4] > sizes[n - 1]);  // p_{n+5} > p_n
}

TEST_CASE("matrix recognition examples") {
  CHECK(is_line_digraph_matrix(line_digraph(two_cube()).graph));
  CHECK_FALSE(is_line_digraph_matrix(Digraph(4, {{0, 1}, {0, 2}, {3, 1}}, false)));
  CHECK(is_line_digraph_matrix(Digraph(3, {})));  // vacuous
  CHECK(is_line_digraph_matrix(Digraph(4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}}, false)));
  CHECK(is_line_digraph_matrix(dicycle(5)));
  CHECK_FALSE(is_line_digraph_matrix(Digraph(3, {{0, 1}, {2, 0}, {2, 1}}, false)));
  CHECK_THROWS_AS(is_line_digraph_matrix(complete_with_loops(2)), Error);
  CHECK_THROWS_AS(is_line_digraph_forbidden(complete_with_loops(2)), Error);
  CHECK_THROWS_AS(is_line_digraph_forbidden(Digraph(12, {}), 10), Error);
}

TEST_CASE("matrix and forbidden-pattern criteria agree exhaustively on 4 vertices") {
  int line_count = 0;
  for (int mask = 0; mask < (1 << 12); ++mask) {
    Digraph g = loopless_on_four(mask);
    bool matrix = is_line_digraph_matrix(g);
    bool pattern = is_line_digraph_forbidden(g);
    CHECK(matrix == pattern);
    if (matrix) ++line_count;
  }
  CHECK(line_count > 0);
  CHECK(line_count < (1 << 12));
}

TEST_CASE("criteria agree on random digraphs up to 7 vertices") {
  Rng rng(101);
  for (int i = 0; i < 150; ++i) {
    Digraph g = random_digraph(rng, 3 + rng.below(5), 30);
    CHECK(is_line_digraph_matrix(g) == is_line_digraph_forbidden(g));
  }
}

TEST_CASE("line digraphs of loopless digraphs pass recognition") {
  Rng rng(110);
  for (int i = 0; i < 60; ++i) {
    Digraph g = random_digraph(rng, 2 + rng.below(6), 35);
    if (g.arc_count() == 0) continue;
    Digraph l = line_digraph(g).graph;
    CHECK(is_line_digraph_matrix(l));
  }
}

TEST_CASE("partition recovery") {
  // The line digraph of the 2-cube: four classes of two, sixteen arcs back.
  Digraph l = line_digraph(two_cube()).graph;
  GeneralPartitions parts = recover_partitions(l);
  int nonempty_a = 0;
  for (const auto& cls : parts.a_classes)
    if (!cls.empty()) {
      CHECK(cls.size() == 2);
      ++nonempty_a;
    }
  CHECK(nonempty_a == 4);
  CHECK(partitions_reconstruct(l, parts));

  GeneralPartitions cycle_parts = recover_partitions(dicycle(3));
  CHECK(cycle_parts.a_classes.size() == 3);
  for (const auto& cls : cycle_parts.a_classes) CHECK(cls.size() == 1);
  CHECK(partitions_reconstruct(dicycle(3), cycle_parts));

  CHECK_THROWS_AS(recover_partitions(Digraph(4, {{0, 1}, {0, 2}, {3, 1}}, false)), Error);

  Rng rng(120);
  for (int i = 0; i < 40; ++i) {
    Digraph g = random_regular_digraph(rng, 4 + rng.below(4), 2);
    Digraph l2 = line_digraph(g).graph;
    CHECK(partitions_reconstruct(l2, recover_partitions(l2)));
  }
}

TEST_CASE("in-split graphs") {
  Digraph d = two_cube();

  // Maximal partition: 8 classes, 16 simple arcs, one per line-digraph arc.
  MultiDigraph split = in_split(d, InSplitPartition::maximal(d));
  CHECK(split.n == 8);
  CHECK(split.total_arc_count() == 16);
  CHECK(split.all_multiplicities_one());

  // Classes enumerate arcs by (head, tail); translate each split arc through
  // that bijection and it must be an arc of the line digraph.
  std::vector<Arc> class_arc;
  for (int v = 0; v < d.vertex_count(); ++v)
    for (int t : d.in_neighbors(v)) class_arc.emplace_back(t, v);
  ArcLabeledDigraph l = line_digraph(d);
  auto line_vertex_of = [&](const Arc& base_arc) {
    return static_cast<int>(std::find(l.base_arc_of.begin(), l.base_arc_of.end(), base_arc) -
                            l.base_arc_of.begin());
  };
  int translated = 0;
  for (const auto& [arc, mult] : split.multiplicity) {
    CHECK(l.graph.has_arc(line_vertex_of(class_arc[arc.first]),
                          line_vertex_of(class_arc[arc.second])));
    translated += mult;
  }
  CHECK(translated == l.graph.arc_count());

  // Trivial partition: the digraph itself (all in-degrees are positive here).
  MultiDigraph same = in_split(d, InSplitPartition::trivial(d));
  CHECK(same.n == d.vertex_count());
  for (const Arc& a : d.arcs()) {
    auto it = same.multiplicity.find(a);
    REQUIRE(it != same.multiplicity.end());
    CHECK(it->second == 1);
  }
  CHECK(same.total_arc_count() == d.arc_count());

  // Invalid partitions are rejected.
  InSplitPartition bad = InSplitPartition::maximal(d);
  bad.classes_per_vertex[0].pop_back();
  CHECK_THROWS_AS(in_split(d, bad), Error);
}

TEST_CASE("maximal in-split equals the line digraph on random hosts") {
  Rng rng(130);
  for (int i = 0; i < 30; ++i) {
    Digraph g = random_strongly_connected(rng, 3 + rng.below(4), 25);
    MultiDigraph split = in_split(g, InSplitPartition::maximal(g));
    Digraph l = line_digraph(g).graph;
    CHECK(split.all_multiplicities_one());
    CHECK(split.n == l.vertex_count());
    CHECK(split.total_arc_count() == l.arc_count());
    std::vector<Arc> split_arcs;
    for (const auto& [arc, mult] : split.multiplicity) split_arcs.push_back(arc);
    Digraph as_digraph(split.n, split_arcs, true);
    if (split.n <= 14) CHECK(isomorphic(as_digraph, l, 14).has_value());
  }
}

TEST_CASE("de Bruijn digraphs") {
  CHECK(debruijn(2, 1) == complete_with_loops(2));

  Digraph b23 = debruijn(2, 3);
  CHECK(b23.vertex_count() == 8);
  CHECK(b23.arc_count() == 16);
  CHECK(regular_degree(b23) == 2);
  CHECK(b23.has_loops());

  // Direct word construction as an independent oracle: vertex = length-k word
  // in base d, arcs shift one letter in.
  for (int d = 2; d <= 3; ++d) {
    for (int k = 1; k <= 3; ++k) {
      int size = 1;
      for (int i = 0; i < k; ++i) size *= d;
      std::vector<Arc> arcs;
      for (int w = 0; w < size; ++w)
        for (int a = 0; a < d; ++a) arcs.emplace_back(w, (w * d + a) % size);
      Digraph direct(size, std::move(arcs), true);
      CHECK(debruijn(d, k) == direct);
    }
  }

  CHECK_THROWS_AS(debruijn(2, 25), Error);
  CHECK_THROWS_AS(debruijn(1, 2), Error);
}

TEST_CASE("euler circuits lift to hamilton dicycles of the line digraph") {
  auto lifted = euler_to_hamilton(dicycle(4));
  Digraph lc4 = line_digraph(dicycle(4)).graph;
  CHECK(lifted.size() == 4);
  CHECK(is_hamilton_dicycle(lc4, lifted));

  Digraph d = two_cube();
  CHECK(is_hamilton_dicycle(line_digraph(d).graph, euler_to_hamilton(d)));

  Digraph f8(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}, false);
  auto h8 = euler_to_hamilton(f8);
  CHECK(h8.size() == 6);
  CHECK(is_hamilton_dicycle(line_digraph(f8).graph, h8));

  CHECK_THROWS_AS(euler_to_hamilton(dipath(3)), Error);
}

TEST_CASE("only dicycles are isomorphic to their own line digraph") {
  Rng rng(140);
  for (int i = 0; i < 60; ++i) {
    int n = 2 + rng.below(4);
    Digraph g = random_strongly_connected(rng, n, 20);
    bool cycle_shape = g.arc_count() == n && regular_degree(g) == 1;
    Digraph current = g;
    for (int step = 1; step <= 4; ++step) {
      current = line_digraph(current).graph;
      if (current.vertex_count() != n) continue;
      if (isomorphic(current, g, 8).has_value()) CHECK(cycle_shape);
    }
    if (cycle_shape) CHECK(isomorphic(line_digraph(g).graph, g, 8).has_value());
  }
}

TEST_CASE("regular strongly connected hosts keep regularity through iterates") {
  Rng rng(150);
  for (int i = 0; i < 25; ++i) {
    Digraph g = random_regular_digraph(rng, 4 + rng.below(3), 2);
    if (!is_strongly_connected(g)) continue;
    int k = regular_degree(g);
    Digraph l1 = line_digraph(g).graph;
    Digraph l2 = line_digraph(l1).graph;
    CHECK(regular_degree(l1) == k);
    CHECK(regular_degree(l2) == k);
    CHECK(is_eulerian(l1));
    CHECK(is_eulerian(l2));
    CHECK(is_hamilton_dicycle(l1, euler_to_hamilton(g)));
    CHECK(is_hamilton_dicycle(l2, euler_to_hamilton(l1)));
  }
}

TEST_CASE("labeled serialization carries the arc map") {
  std::string text = format_labeled(line_digraph(dicycle(3)));
  CHECK(text.find("3 3\n") == 0);
  CHECK(text.find("# vertex 0 = arc (0,1)") != std::string::npos);
  CHECK(text.find("# vertex 2 = arc (2,0)") != std::string::npos);
}
