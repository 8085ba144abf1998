#pragma once

// 1-factorizations of regular digraphs, growth digraphs, and the block
// form of a line-digraph adjacency matrix under the (factor, head) labeling.

#include <string>
#include <vector>

#include "linewalk/digraph.hpp"
#include "linewalk/matrix.hpp"

namespace linewalk {

// A 1-factor is a spanning union of dicycles: a vertex permutation whose arcs
// all belong to the host digraph. Its adjacency matrix is a permutation matrix.
struct OneFactor {
  std::vector<int> successor;  // vertex -> unique out-neighbor in the factor

  std::vector<Arc> arcs() const;
};

struct Factorization {
  std::vector<OneFactor> factors;  // ordered F_1 .. F_k
  int host_n = 0;

  int k() const { return static_cast<int>(factors.size()); }
};

// Builds a Factorization from successor arrays and validates it against g:
// every successor must be a permutation, factor arcs must lie in g, be
// pairwise disjoint, and cover every arc. Throws NotRegular / InvalidArgument.
Factorization make_factorization(const Digraph& g, const std::vector<std::vector<int>>& successors);

// Splits a k-regular digraph into k arc-disjoint 1-factors by k rounds of
// bipartite matching (tails x heads); augmenting paths visit vertices in
// ascending order, so the result is deterministic. Throws NotRegular.
Factorization one_factorization(const Digraph& g);

IntMatrix factor_matrix(const OneFactor& f);

// Subdigraph on a vertex subset of a host digraph.
struct Subdigraph {
  std::vector<int> vertices;  // ascending host vertex ids
  std::vector<Arc> arcs;      // host arcs among those vertices
};

Subdigraph spanning_subdigraph(const Digraph& host, const Digraph& f);  // NotSpanning/NotSubdigraph
Subdigraph factor_subdigraph(const Digraph& host, const OneFactor& f);

// The growth of a subdigraph: per subdigraph vertex, one fresh pendant vertex
// for each host out-arc missing from the subdigraph. Core vertices are
// reindexed 0..|V(f)|-1 in ascending order; fresh vertices follow, ordered by
// the (head, tail) of the host arc each one shadows.
struct GrowthResult {
  Digraph graph;
  std::vector<int> core_vertices;  // result index -> host vertex id
  struct Fresh {
    int anchor;    // host vertex the pendant arc leaves
    Arc shadowed;  // host arc the fresh vertex stands in for
  };
  std::vector<Fresh> fresh;
};

GrowthResult growth(const Digraph& host, const Subdigraph& f);  // NotSubdigraph
GrowthResult growth(const Digraph& host, const Digraph& f);     // spanning form

// The kn x kn matrix whose k identical block-rows are
// [M(F_1) M(F_2) ... M(F_k)]. Row/column j*n + i stands for the pair
// (factor j, vertex i); the result is permutation-similar to the adjacency
// matrix of the line digraph of the host.
IntMatrix block_line_matrix(const Factorization& f);

// The bijection p from lexicographic arc order (line-digraph vertex order) to
// the (factor, head) order of block_line_matrix: arc (i,l) of factor j maps
// to j*n + l. For every pair of arcs a, b:
//   block_line_matrix(f)[p[a]][p[b]] == adjacency(line_digraph(host))[a][b].
std::vector<int> permutation_to_line_labels(const Factorization& f);

// Host digraph reassembled from the factor arcs.
Digraph factorization_host(const Factorization& f);

// Header "factors k n", then k lines of n successor entries.
std::string format_factorization(const Factorization& f);

}  // namespace linewalk
