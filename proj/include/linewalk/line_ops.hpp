#pragma once

// Line-digraph construction, iteration, recognition, in-split graphs,
// de Bruijn generation, and the euler-circuit-to-hamilton-dicycle lift.

#include <cstddef>
#include <string>
#include <vector>

#include "linewalk/digraph.hpp"

namespace linewalk {

// A line digraph together with the map from each of its vertices back to the
// arc of the base digraph it represents. Vertex order is the lexicographic
// order of base arcs, so base_arc_of is simply the sorted base arc list.
struct ArcLabeledDigraph {
  Digraph graph;
  std::vector<Arc> base_arc_of;
  int base_n = 0;
};

// Vertices of the k-fold iterate correspond to the k-dipaths of the base
// digraph (a k-dipath has k arcs, k+1 vertices; a 0-dipath is a vertex).
struct IteratedLineDigraph {
  Digraph graph;
  std::vector<std::vector<int>> dipath_of;  // vertex -> base vertex sequence
  int base_n = 0;
};

constexpr std::size_t kDefaultVertexLimit = 1000000;

// Throws EmptyArcSet when the base digraph has no arcs.
ArcLabeledDigraph line_digraph(const Digraph& g);

// k = 0 returns the digraph itself with singleton dipath labels. If the arc
// set empties before k steps the result is the digraph with no vertices.
// Throws SizeLimitExceeded when an iterate would exceed max_vertices.
IteratedLineDigraph iterated_line_digraph(const Digraph& g, int k,
                                          std::size_t max_vertices = kDefaultVertexLimit);

// Row/column test: rows pairwise identical-or-orthogonal, zero diagonal, and
// equal nonzero rows force orthogonal same-indexed columns. The column-wise
// dual is evaluated as well and the two must agree. Loopless input only
// (LoopsPresent otherwise).
bool is_line_digraph_matrix(const Digraph& g);

// Brute-force forbidden-configuration test: scans for the three fatal
// configurations (incomplete out-sharing, incomplete in-sharing, twin pairs),
// each witnessed by an induced subdigraph on at most 4 vertices. Works purely
// through arc queries; a small-scale oracle for the matrix test.
// Throws TooLarge above max_n, LoopsPresent on loops.
bool is_line_digraph_forbidden(const Digraph& g, int max_n = 10);

// General partitions {A_i}, {B_i} of the vertex set with
// arcs == union of A_i x B_i and |A_j inter B_i| <= 1 - delta_ij.
// Classes may be empty; they are index-paired.
struct GeneralPartitions {
  std::vector<std::vector<int>> a_classes;
  std::vector<std::vector<int>> b_classes;
};

// Requires is_line_digraph_matrix(g); throws NotLineDigraph otherwise.
GeneralPartitions recover_partitions(const Digraph& g);

// Checks the defining conditions of a partition pair against g.
bool partitions_reconstruct(const Digraph& g, const GeneralPartitions& parts);

// Ordered partition of the in-coming arcs of each vertex; classes store arc
// tails. A vertex with in-degree 0 has no classes.
struct InSplitPartition {
  std::vector<std::vector<std::vector<int>>> classes_per_vertex;

  static InSplitPartition maximal(const Digraph& g);  // singleton classes
  static InSplitPartition trivial(const Digraph& g);  // one class per vertex
};

// Vertex u of the result is the class with global index u, enumerating
// vertices in ascending order and classes in partition order. Multiplicity of
// class(k,l) -> class(j,i) counts the arcs of class(j,i) with tail l.
// Throws InvalidPartition when the classes do not partition the in-arcs.
MultiDigraph in_split(const Digraph& g, const InSplitPartition& p);

// (d,k)-de Bruijn digraph: the (k-1)-fold line-digraph iterate of the
// complete looped digraph on d vertices; d^k vertices, d-regular, with loops.
Digraph debruijn(int d, int k, std::size_t max_vertices = kDefaultVertexLimit);

// Euler circuit of g read arc-by-arc as a hamilton dicycle of line_digraph(g);
// returns line-digraph vertex indices. Throws NotEulerian.
std::vector<int> euler_to_hamilton(const Digraph& g);

// Edge list plus one "# vertex i = arc (a,b)" comment line per vertex.
std::string format_labeled(const ArcLabeledDigraph& lg);

}  // namespace linewalk
