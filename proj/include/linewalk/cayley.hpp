#pragma once

// Cayley digraphs for cyclic and dihedral groups, a small-scale digraph
// isomorphism search, and the bidirected-cycle example: the line digraph of
// the 2-generator cyclic Cayley digraph is the dihedral prism.

#include <optional>
#include <vector>

#include "linewalk/digraph.hpp"
#include "linewalk/matrix.hpp"

namespace linewalk {

// Permutation of 0..m-1. product(p, q) applies p first, then q, so the right
// regular action x -> x*s is product(x, s).
using Perm = std::vector<int>;

Perm perm_identity(int m);
Perm perm_product(const Perm& p, const Perm& q);
bool perm_is_identity(const Perm& p);

struct CayleyDigraph {
  Digraph graph;
  std::vector<Perm> element_of;  // vertex -> group element
  std::vector<Perm> generators;
};

// Cay(Z_n, gens): vertices 0..n-1, arcs (v, v+s mod n). Generators must be
// nonempty residues in 1..n-1, n >= 3. Throws BadGenerators.
CayleyDigraph cayley_cyclic(int n, const std::vector<int>& generators);

// The dihedral group of order 2n (n odd, >= 3) on generators
//   a : x -> x+1 (mod n)   and   b : x -> n-1-x,
// so a^n = b^2 = identity and b a b = a^(n-1). Elements are generated by
// breadth-first closure from the identity; the digraph is the 1-skeleton of
// an n-gon prism. Throws BadOrder for even or too-small n.
CayleyDigraph cayley_dihedral(int n);

// Arc-preserving vertex bijection between two digraphs, or nullopt.
// Backtracking with degree-pair pruning; capped at max_n vertices (TooLarge).
std::optional<std::vector<int>> isomorphic(const Digraph& a, const Digraph& b, int max_n = 10);

struct CycleExampleReport {
  bool line_isomorphic_to_prism = false;   // L(Cay(Z_n,{1,n-1})) ~ Cay(D_n,{a,b})
  bool prism_matches_block_form = false;   // prism adjacency permutation-similar to the block form
  bool block_form_from_factors = false;    // block form == block_line_matrix({+1 shift, -1 shift})
  bool all() const {
    return line_isomorphic_to_prism && prism_matches_block_form && block_form_from_factors;
  }
};

// n odd, 3 <= n <= 9 (isomorphism search is brute force). Throws TooLarge/BadOrder.
CycleExampleReport verify_cycle_example(int n);

}  // namespace linewalk
