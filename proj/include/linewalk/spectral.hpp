#pragma once

// Exact spectral machinery: integer characteristic polynomials, the
// line-digraph characteristic-polynomial identity, de Bruijn spectra,
// permanents, and the rational pseudo-inverse witness for regular hosts.
// Everything here is exact; no floating point.

#include <string>
#include <vector>

#include "linewalk/digraph.hpp"
#include "linewalk/matrix.hpp"

namespace linewalk {

// Polynomial with exact integer coefficients, ascending degree order.
struct IntPoly {
  std::vector<BigInt> coeffs;  // coeffs[i] multiplies x^i; never empty

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt evaluate(const BigInt& x) const;
  IntPoly shifted(int e) const;  // multiply by x^e

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  std::string to_string() const;  // ascending coefficients, space-separated
};

// x^e * (x - r)
IntPoly monomial_shifted_linear(int e, long long r);

// det(xI - M) with exact integer coefficients via the Faddeev-LeVerrier
// recurrence (every division is exact). Throws NotSquare.
IntPoly char_poly(const IntMatrix& m);

// Exact identity between the characteristic polynomial of the line digraph
// and x^(m-n) times that of the base. Requires m >= n (ExponentNegative).
bool verify_line_charpoly(const Digraph& g);

// Checks char_poly(debruijn(d,k)) == x^(d^k - 1) * (x - d) exactly.
// Guarded at d^k <= 512 (SizeLimitExceeded).
bool debruijn_spectrum_check(int d, int k);

// Exact permanent by Ryser's inclusion-exclusion with Gray-code updates;
// dimension capped at 20 (TooLarge). (0,1) matrices take a fast integer path.
BigInt permanent(const IntMatrix& m);

// per(M(line digraph)) > 0, and that sign must coincide with every weak
// component of g being eulerian. Arc count capped at 20 (TooLarge).
bool permanent_positivity_check(const Digraph& g);

// For k-regular g, returns Mplus = transpose(M)/k^2 where M is the adjacency
// matrix of the line digraph, after verifying all four defining conditions of
// a Moore-Penrose inverse in exact rational arithmetic:
//   M*Mplus*M == M, Mplus*M*Mplus == Mplus, and both products symmetric.
// Throws NotRegular; PenroseViolation would mean the witness failed.
RatMatrix penrose_witness_regular(const Digraph& g);

}  // namespace linewalk
