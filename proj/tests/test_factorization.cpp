#include <doctest.h>

#include "linewalk/cayley.hpp"
#include "linewalk/factorization.hpp"
#include "linewalk/generators.hpp"
#include "linewalk/line_ops.hpp"
#include "linewalk/rng.hpp"

using namespace linewalk;

namespace {

Digraph two_cube() {
  return Digraph(4, {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}}, false);
}

// The worked 2-cube factor pair: swaps 0-1/2-3 and swaps 0-2/1-3.
const std::vector<int> kSwapAdjacent{1, 0, 3, 2};
const std::vector<int> kSwapAcross{2, 3, 0, 1};

IntMatrix matrix_from(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = BigInt(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("cycles have the rotation as their single factor") {
  for (int n = 2; n <= 7; ++n) {
    Factorization f = one_factorization(dicycle(n));
    REQUIRE(f.k() == 1);
    for (int v = 0; v < n; ++v) CHECK(f.factors[0].successor[v] == (v + 1) % n);
  }
}

TEST_CASE("removing one 2-cube factor forces the other") {
  Digraph d = two_cube();
  Factorization given = make_factorization(d, {kSwapAdjacent, kSwapAcross});
  CHECK(given.k() == 2);

  // Host minus the first factor is 1-regular; the remaining factor is forced.
  Digraph rest(4, OneFactor{kSwapAcross}.arcs(), false);
  Factorization forced = one_factorization(rest);
  REQUIRE(forced.k() == 1);
  CHECK(forced.factors[0].successor == kSwapAcross);
}

TEST_CASE("factor matrices are permutations summing to the adjacency matrix") {
  Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    int n = 4 + rng.below(4);
    int k = 1 + rng.below(3);
    if (k > n - 1) k = n - 1;
    Digraph g = random_regular_digraph(rng, n, k);
    Factorization f = one_factorization(g);
    REQUIRE(f.k() == k);
    IntMatrix sum(n, n);
    for (const OneFactor& factor : f.factors) {
      IntMatrix m = factor_matrix(factor);
      CHECK(m.is_permutation());
      sum = sum + m;
    }
    CHECK(sum == adjacency(g));
  }
}

TEST_CASE("factorization validation") {
  Digraph d = two_cube();
  CHECK_THROWS_AS(one_factorization(dipath(3)), Error);
  CHECK_THROWS_AS(make_factorization(d, {kSwapAdjacent}), Error);               // wrong count
  CHECK_THROWS_AS(make_factorization(d, {kSwapAdjacent, kSwapAdjacent}), Error);  // not disjoint
  CHECK_THROWS_AS(make_factorization(d, {{1, 0, 3, 2}, {3, 2, 1, 0}}), Error);  // arc not in host
}

TEST_CASE("block form of the 2-cube factor pair") {
  Factorization f = make_factorization(two_cube(), {kSwapAdjacent, kSwapAcross});
  IntMatrix block = block_line_matrix(f);
  IntMatrix expected = matrix_from({
      {0, 1, 0, 0, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 1, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 1, 0, 0},
      {0, 1, 0, 0, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 1, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 1, 0, 0},
  });
  CHECK(block == expected);

  // Cycle case: a single block, the adjacency matrix itself.
  Factorization fc = one_factorization(dicycle(5));
  CHECK(block_line_matrix(fc) == adjacency(dicycle(5)));
}

TEST_CASE("label permutation conjugates the line adjacency onto the block form") {
  Digraph d = two_cube();
  Factorization f = make_factorization(d, {kSwapAdjacent, kSwapAcross});
  std::vector<int> p = permutation_to_line_labels(f);
  CHECK(p == std::vector<int>{1, 6, 0, 7, 4, 3, 5, 2});

  IntMatrix block = block_line_matrix(f);
  IntMatrix line_adj = adjacency(line_digraph(d).graph);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(line_adj.at(a, b) == block.at(p[a], p[b]));

  std::vector<int> pc = permutation_to_line_labels(one_factorization(dicycle(3)));
  CHECK(pc == std::vector<int>{1, 2, 0});
}

TEST_CASE("conjugation identity holds for random regular hosts") {
  Rng rng(55);
  for (int i = 0; i < 25; ++i) {
    int n = 4 + rng.below(4);
    int k = 1 + rng.below(3);
    if (k > n - 1) k = n - 1;
    Digraph g = random_regular_digraph(rng, n, k);
    Factorization f = one_factorization(g);
    IntMatrix block = block_line_matrix(f);
    IntMatrix line_adj = adjacency(line_digraph(g).graph);
    std::vector<int> p = permutation_to_line_labels(f);
    for (int a = 0; a < line_adj.rows(); ++a)
      for (int b = 0; b < line_adj.cols(); ++b) CHECK(line_adj.at(a, b) == block.at(p[a], p[b]));

    // Block row and column sums both equal the regularity degree.
    for (int r = 0; r < block.rows(); ++r) {
      BigInt row_sum, col_sum;
      for (int c = 0; c < block.cols(); ++c) {
        row_sum += block.at(r, c);
        col_sum += block.at(c, r);
      }
      CHECK(row_sum == BigInt(k));
      CHECK(col_sum == BigInt(k));
    }
  }
}

TEST_CASE("growth of the full digraph changes nothing") {
  Digraph d = two_cube();
  GrowthResult same = growth(d, d);
  CHECK(same.graph == d);
  CHECK(same.fresh.empty());
}

TEST_CASE("growth of the first 2-cube factor reproduces the worked matrix") {
  Digraph d = two_cube();
  GrowthResult g1 = growth(d, Digraph(4, OneFactor{kSwapAdjacent}.arcs(), false));
  IntMatrix expected = matrix_from({
      {0, 1, 0, 0, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 1, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  });
  CHECK(adjacency(g1.graph) == expected);

  // Second factor: same picture with the block roles swapped; core vertices
  // land at 4..7 and fresh vertices at 0..3 under the grid labeling.
  GrowthResult g2 = growth(d, Digraph(4, OneFactor{kSwapAcross}.arcs(), false));
  IntMatrix displayed = matrix_from({
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 1, 0},
      {1, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 1, 1, 0, 0, 0},
      {0, 0, 1, 0, 0, 1, 0, 0},
  });
  std::vector<int> relabel{4, 5, 6, 7, 0, 1, 2, 3};  // core -> grid, fresh by head
  IntMatrix got = adjacency(g2.graph);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) CHECK(got.at(r, c) == displayed.at(relabel[r], relabel[c]));
  CHECK(isomorphic(g1.graph, g2.graph, 8).has_value());
}

TEST_CASE("growth inside the line digraph is isomorphic to growth in the base") {
  Digraph d = two_cube();
  OneFactor f1{kSwapAdjacent};
  GrowthResult base_growth = growth(d, Digraph(4, f1.arcs(), false));

  // Image of the factor inside the line digraph: its arcs are line-digraph
  // vertices, consecutive factor arcs are line-digraph arcs.
  ArcLabeledDigraph l = line_digraph(d);
  Subdigraph image;
  for (const Arc& a : f1.arcs()) {
    auto it = std::find(l.base_arc_of.begin(), l.base_arc_of.end(), a);
    image.vertices.push_back(static_cast<int>(it - l.base_arc_of.begin()));
  }
  std::sort(image.vertices.begin(), image.vertices.end());
  for (int u : image.vertices)
    for (int v : image.vertices)
      if (l.graph.has_arc(u, v)) image.arcs.emplace_back(u, v);

  GrowthResult line_growth = growth(l.graph, image);
  CHECK(line_growth.graph.vertex_count() == 8);
  CHECK(isomorphic(base_growth.graph, line_growth.graph, 8).has_value());
}

TEST_CASE("growth rejects foreign subdigraphs") {
  Digraph d = two_cube();
  CHECK_THROWS_AS(growth(d, dicycle(3)), Error);  // wrong vertex count
  Subdigraph bad;
  bad.vertices = {0, 1};
  bad.arcs = {{0, 3}};
  CHECK_THROWS_AS(growth(d, bad), Error);  // endpoint outside vertex set
  Subdigraph foreign;
  foreign.vertices = {0, 1, 2, 3};
  foreign.arcs = {{0, 3}};
  CHECK_THROWS_AS(growth(d, foreign), Error);  // arc absent from host
}

TEST_CASE("factorization serialization") {
  Factorization f = make_factorization(two_cube(), {kSwapAdjacent, kSwapAcross});
  CHECK(format_factorization(f) == "factors 2 4\n1 0 3 2\n2 3 0 1\n");
  CHECK(factorization_host(f) == two_cube());
}
