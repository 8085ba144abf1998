#include "linewalk/walk.hpp"

#include <cmath>

#include "linewalk/line_ops.hpp"

namespace linewalk {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kZeroEntryTol = 1e-14;
}  // namespace

CxMatrix coin_hadamard() {
  CxMatrix c(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  c.at(0, 0) = s;
  c.at(0, 1) = s;
  c.at(1, 0) = s;
  c.at(1, 1) = -s;
  return c;
}

CxMatrix coin_grover(int k) {
  if (k < 2) throw_error(ErrorCode::BadDimension, "diffusion coin needs k >= 2");
  CxMatrix c(k, k);
  const double off = 2.0 / k;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c.at(i, j) = off - (i == j ? 1.0 : 0.0);
  return c;
}

CxMatrix coin_fourier(int k) {
  if (k < 2) throw_error(ErrorCode::BadDimension, "Fourier coin needs k >= 2");
  CxMatrix c(k, k);
  const double s = 1.0 / std::sqrt(static_cast<double>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      double angle = 2.0 * kPi * i * j / k;
      c.at(i, j) = std::complex<double>(s * std::cos(angle), s * std::sin(angle));
    }
  return c;
}

CxMatrix coin_by_name(const std::string& name, int k) {
  if (k == 1) {
    CxMatrix trivial(1, 1);
    trivial.at(0, 0) = 1.0;
    return trivial;
  }
  if (name == "hadamard") {
    if (k != 2) throw_error(ErrorCode::DimensionMismatch, "hadamard coin is 2x2");
    return coin_hadamard();
  }
  if (name == "grover") return coin_grover(k);
  if (name == "fourier") return coin_fourier(k);
  if (name == "auto") return k == 2 ? coin_hadamard() : coin_fourier(k);
  throw_error(ErrorCode::InvalidArgument, "unknown coin '" + name + "'");
}

CxMatrix build_shift(const Factorization& f) {
  const int n = f.host_n;
  const int k = f.k();
  CxMatrix shift(k * n, k * n);
  // (j, i) -> (j, successor_j(i)): column j*n+i carries a 1 in row j*n+succ.
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) shift.at(j * n + f.factors[j].successor[i], j * n + i) = 1.0;
  return shift;
}

WalkOperator build_walk(const Digraph& g, const CxMatrix& coin) {
  return build_walk(g, coin, one_factorization(g));
}

WalkOperator build_walk(const Digraph& g, const CxMatrix& coin, Factorization f) {
  int k = regular_degree(g);
  if (k < 1) throw_error(ErrorCode::NotRegular, "coined walk needs a regular digraph");
  if (coin.rows() != coin.cols() || coin.rows() != k)
    throw_error(ErrorCode::DimensionMismatch,
                "coin dimension " + std::to_string(coin.rows()) + " differs from regularity " +
                    std::to_string(k));
  if (!coin.is_unitary(1e-12)) throw_error(ErrorCode::NotUnitary, "coin is not unitary");
  if (f.host_n != g.vertex_count() || f.k() != k)
    throw_error(ErrorCode::DimensionMismatch, "factorization does not match the digraph");

  WalkOperator w;
  w.k = k;
  w.n = g.vertex_count();
  w.coin = coin;
  w.shift = build_shift(f);
  w.u = w.shift * coin.kron(CxMatrix::identity(w.n));
  w.factorization = std::move(f);
  return w;
}

WalkState basis_state(const WalkOperator& w, int factor, int vertex) {
  if (factor < 0 || factor >= w.k || vertex < 0 || vertex >= w.n)
    throw_error(ErrorCode::DimensionMismatch, "basis index outside the walk space");
  WalkState s;
  s.psi.assign(static_cast<std::size_t>(w.k) * w.n, {0.0, 0.0});
  s.psi[static_cast<std::size_t>(factor) * w.n + vertex] = 1.0;
  return s;
}

WalkState uniform_state(const WalkOperator& w) {
  WalkState s;
  const std::size_t dim = static_cast<std::size_t>(w.k) * w.n;
  s.psi.assign(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return s;
}

double norm(const WalkState& s) {
  double sum = 0.0;
  for (const auto& x : s.psi) sum += std::norm(x);
  return std::sqrt(sum);
}

WalkState evolve(const WalkOperator& w, WalkState state, int t) {
  if (static_cast<int>(state.psi.size()) != w.k * w.n)
    throw_error(ErrorCode::DimensionMismatch, "state dimension differs from the walk space");
  for (int step = 0; step < t; ++step) state.psi = w.u.apply(state.psi);
  state.time += t;
  return state;
}

std::vector<double> distribution(const WalkOperator& w, const WalkState& s) {
  std::vector<double> prob(w.n, 0.0);
  for (int j = 0; j < w.k; ++j)
    for (int v = 0; v < w.n; ++v) prob[v] += std::norm(s.psi[static_cast<std::size_t>(j) * w.n + v]);
  return prob;
}

Digraph support_digraph(const CxMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw_error(ErrorCode::NotSquare, "support digraph needs a square matrix");
  std::vector<Arc> arcs;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (std::abs(m.at(r, c)) > tol) arcs.emplace_back(r, c);
  return Digraph(m.rows(), std::move(arcs), true);
}

SupportReport verify_underlying_line_digraph(const Digraph& g, const CxMatrix& coin, double tol) {
  WalkOperator w = build_walk(g, coin);
  SupportReport report;
  report.unitary = w.u.is_unitary(1e-12);

  for (int i = 0; i < coin.rows() && !report.coin_has_zeros; ++i)
    for (int j = 0; j < coin.cols(); ++j)
      if (std::abs(coin.at(i, j)) < kZeroEntryTol) {
        report.coin_has_zeros = true;
        break;
      }

  Digraph support = support_digraph(w.u, tol);
  Digraph block_pattern = from_adjacency(block_line_matrix(w.factorization).transpose());
  if (report.coin_has_zeros) {
    // Zero coin entries erase arcs, so only containment can hold.
    bool contained = true;
    for (const Arc& a : support.arcs())
      if (!block_pattern.has_arc(a.first, a.second)) contained = false;
    report.support_matches = contained;
  } else {
    report.support_matches = support == block_pattern;
  }

  Digraph rev = reverse(support);
  if (rev.has_loops())
    report.recognition_skipped = true;
  else
    report.reverse_recognized = is_line_digraph_matrix(rev);
  return report;
}

}  // namespace linewalk
