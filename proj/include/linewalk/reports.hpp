#pragma once

// Deterministic text/JSON assembly for the CLI subcommands that do more than
// print an edge list. No timestamps, no locale dependence.

#include <string>

#include "linewalk/digraph.hpp"

namespace linewalk {

// Per-step vertex distributions as CSV lines "t,v,prob" for t = 0..steps,
// starting from the basis state (factor 0, start_vertex). With json=true the
// output is one object carrying the operator (dims, coin, nonzero entries as
// [row, col, re, im]) and the distributions.
std::string walk_output(const Digraph& g, const std::string& coin_name, int steps,
                        int start_vertex, double tol, bool json);

// Recognition verdicts (matrix criterion, pattern scan when small enough,
// recovered partition summary). Sets *is_line to the matrix verdict.
std::string recognize_output(const Digraph& g, int max_pattern_n, bool json, bool* is_line);

// The three assertions of the bidirected-cycle example plus the prism edge
// list. Sets *all_passed.
std::string cayley_demo_output(int n, bool json, bool* all_passed);

// "charpoly: x^e*(x-d)" when the de Bruijn spectrum check passes, else the
// raw coefficient list; sets *ok.
std::string debruijn_charpoly_line(int d, int k, bool* ok);

// "charpoly: c0 c1 ... cn" (ascending) for an arbitrary digraph.
std::string spectrum_output(const Digraph& g);

std::string permanent_output(const Digraph& g);

}  // namespace linewalk
