#pragma once

// Seeded random digraph models for property suites and `verify --random`.
// Everything is deterministic given the Rng state.

#include "linewalk/digraph.hpp"
#include "linewalk/rng.hpp"

namespace linewalk {

// Loopless digraph; every ordered pair becomes an arc with probability
// percent/100.
Digraph random_digraph(Rng& rng, int n, int percent);

// Loopless k-regular digraph as a union of k pairwise arc-disjoint random
// derangements; requires 1 <= k <= n-1.
Digraph random_regular_digraph(Rng& rng, int n, int k);

// Balanced and strongly connected: a hamiltonian dicycle through a random
// vertex order plus a few extra dicycles whose arcs are all new.
Digraph random_eulerian_strongly_connected(Rng& rng, int n);

// Random topological order with forward arcs at probability percent/100.
Digraph random_dag(Rng& rng, int n, int percent);

// Random hamiltonian dicycle plus extra random arcs.
Digraph random_strongly_connected(Rng& rng, int n, int extra_percent);

std::vector<int> random_permutation(Rng& rng, int n);

}  // namespace linewalk
