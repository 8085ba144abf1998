#pragma once

// Coined quantum walks on regular digraphs. States are column vectors and
// operators act on the left; basis vector (factor j, vertex i) sits at index
// j*n + i, so the shift is block-diagonal with block j the transpose of the
// j-th factor's permutation matrix, and the walk operator is
// U = shift * (coin (x) I_n).

#include <complex>
#include <vector>

#include "linewalk/digraph.hpp"
#include "linewalk/factorization.hpp"
#include "linewalk/matrix.hpp"

namespace linewalk {

CxMatrix coin_hadamard();       // 2x2
CxMatrix coin_grover(int k);    // k >= 2; entries 2/k - delta_ij (k = 2 is the swap)
CxMatrix coin_fourier(int k);   // k >= 2; entries omega^(jl)/sqrt(k)

// "hadamard" | "grover" | "fourier" | "auto". Dimension 1 always yields the
// trivial coin [1]; "auto" picks the smallest nowhere-zero standard coin
// (Hadamard for k = 2, since the 2x2 diffusion coin is the swap; Fourier
// above that). Throws InvalidArgument / DimensionMismatch.
CxMatrix coin_by_name(const std::string& name, int k);

struct WalkOperator {
  CxMatrix u;      // kn x kn, unitary
  CxMatrix coin;   // k x k
  CxMatrix shift;  // kn x kn permutation
  int k = 0;
  int n = 0;
  Factorization factorization;  // fixes the basis labeling
};

struct WalkState {
  std::vector<std::complex<double>> psi;
  int time = 0;
};

// Block-diagonal permutation sending (j, i) to (j, successor_j(i)).
CxMatrix build_shift(const Factorization& f);

// Factorizes a k-regular digraph deterministically and assembles the walk.
// Throws NotRegular / NotUnitary / DimensionMismatch.
WalkOperator build_walk(const Digraph& g, const CxMatrix& coin);
// Same, but with a caller-chosen factorization (fixes the basis order).
WalkOperator build_walk(const Digraph& g, const CxMatrix& coin, Factorization f);

WalkState basis_state(const WalkOperator& w, int factor, int vertex);
WalkState uniform_state(const WalkOperator& w);

double norm(const WalkState& s);

// t applications of U. Throws DimensionMismatch on a wrong-size state.
WalkState evolve(const WalkOperator& w, WalkState state, int t);

// Vertex marginal: prob(v) = sum over factors j of |psi[j*n + v]|^2.
std::vector<double> distribution(const WalkOperator& w, const WalkState& s);

// Digraph on the nonzero pattern of a square matrix (|entry| > tol).
Digraph support_digraph(const CxMatrix& m, double tol = 1e-12);

// Checks that the walk's support is the line-digraph block pattern:
//   (a) U unitary within tol_unitary,
//   (b) support(U) equals transpose(block_line_matrix(F)) exactly
//       (containment only when the coin has zero entries),
//   (c) the reverse of the support digraph passes line-digraph recognition
//       (skipped when loops are present).
struct SupportReport {
  bool unitary = false;
  bool support_matches = false;   // equality, or containment when degraded
  bool coin_has_zeros = false;    // (b) degraded to containment
  bool reverse_recognized = false;
  bool recognition_skipped = false;  // loops present
  bool all() const {
    return unitary && support_matches && (reverse_recognized || recognition_skipped);
  }
};

SupportReport verify_underlying_line_digraph(const Digraph& g, const CxMatrix& coin,
                                             double tol = 1e-12);

}  // namespace linewalk
