#pragma once

// Digraph substrate: simple directed graphs with 0-indexed integer vertices,
// arc sets kept sorted and duplicate-free. Immutable after construction, so
// instances are safe to share read-only across threads. "Connected" without
// qualification means weakly connected (the underlying undirected graph);
// strong connectivity is always named explicitly.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linewalk/errors.hpp"
#include "linewalk/matrix.hpp"

namespace linewalk {

using Arc = std::pair<int, int>;  // (tail, head)

class Digraph {
 public:
  Digraph() = default;
  // Arcs are deduplicated and sorted lexicographically. Throws
  // VertexOutOfRange for endpoints outside 0..n-1 and LoopsPresent for a loop
  // when allow_loops is false.
  Digraph(int n, std::vector<Arc> arcs, bool allow_loops = true);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  bool allows_loops() const { return allow_loops_; }
  bool has_loops() const { return has_loops_; }

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(int tail, int head) const;
  // Index of an arc in the sorted arc list, or -1.
  int arc_index(int tail, int head) const;

  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;
  int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }
  friend bool operator!=(const Digraph& a, const Digraph& b) { return !(a == b); }

 private:
  int n_ = 0;
  bool allow_loops_ = true;
  bool has_loops_ = false;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;

  void check_vertex(int v) const;
  friend int checked_vertex(const Digraph& g, int v);
};

// Parallel arcs with multiplicities; only produced by in-splitting.
struct MultiDigraph {
  int n = 0;
  std::map<Arc, int> multiplicity;  // values >= 1

  int total_arc_count() const;
  bool all_multiplicities_one() const;
  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
    return a.n == b.n && a.multiplicity == b.multiplicity;
  }
};

// Degree accessors with range checking (throw VertexOutOfRange).
int in_degree(const Digraph& g, int v);
int out_degree(const Digraph& g, int v);
const std::vector<int>& in_neighbors(const Digraph& g, int v);
const std::vector<int>& out_neighbors(const Digraph& g, int v);

bool is_strongly_connected(const Digraph& g);  // requires n >= 1
bool is_weakly_connected(const Digraph& g);
std::vector<std::vector<int>> connected_components(const Digraph& g);  // weak components

bool is_balanced(const Digraph& g);  // in-degree == out-degree everywhere
bool is_eulerian(const Digraph& g);  // weakly connected and balanced
bool all_components_eulerian(const Digraph& g);

// Trail through every arc exactly once, back to the start, beginning at the
// lowest-indexed vertex with positive out-degree. Throws NotEulerian.
std::vector<Arc> euler_circuit(const Digraph& g);

// True when cycle lists every vertex exactly once and consecutive entries
// (including last -> first) are arcs of g.
bool is_hamilton_dicycle(const Digraph& g, const std::vector<int>& cycle);

bool is_acyclic(const Digraph& g);
// Length (arc count) of the longest dipath; requires acyclicity (NotAcyclic).
int longest_dipath_length(const Digraph& g);

Digraph reverse(const Digraph& g);
IntMatrix adjacency(const Digraph& g);
Digraph from_adjacency(const IntMatrix& m);  // NonBinaryMatrix / NotSquare

// k when the digraph is k-regular (every in- and out-degree equals k), else -1.
int regular_degree(const Digraph& g);

Digraph dicycle(int n);              // n >= 2
Digraph dipath(int n);               // n vertices, n-1 arcs
Digraph complete_with_loops(int d);  // all d^2 arcs, all-ones adjacency

// Edge-list text format: first line "n m", then m lines "tail head";
// '#' starts a comment line; canonical output sorts arcs lexicographically.
std::string format_edge_list(const Digraph& g);
Digraph parse_edge_list(const std::string& text);  // throws ParseError

}  // namespace linewalk
