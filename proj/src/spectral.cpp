#include "linewalk/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "linewalk/line_ops.hpp"
#include "linewalk/rational.hpp"

namespace linewalk {

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + coeffs[i];
  }
  return acc;
}

IntPoly IntPoly::shifted(int e) const {
  IntPoly out;
  out.coeffs.assign(static_cast<std::size_t>(e), BigInt(0));
  out.coeffs.insert(out.coeffs.end(), coeffs.begin(), coeffs.end());
  return out;
}

std::string IntPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ' ';
    out += coeffs[i].to_string();
  }
  return out;
}

IntPoly monomial_shifted_linear(int e, long long r) {
  IntPoly out;
  out.coeffs.assign(static_cast<std::size_t>(e), BigInt(0));
  out.coeffs.push_back(BigInt(-r));
  out.coeffs.push_back(BigInt(1));
  return out;
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw_error(ErrorCode::NotSquare, "characteristic polynomial needs a square matrix");
  const int n = m.rows();
  IntPoly p;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
  p.coeffs[n] = BigInt(1);
  if (n == 0) return p;

  // Sparse row view of m; the iterates below stay dense but m is often an
  // adjacency matrix with few nonzeros per row.
  std::vector<std::vector<std::pair<int, const BigInt*>>> rows(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!m.at(r, c).is_zero()) rows[r].emplace_back(c, &m.at(r, c));

  // Faddeev-LeVerrier: A_1 = M, c_k = -trace(A_k)/k, A_{k+1} = M (A_k + c_k I).
  IntMatrix a = m;
  BigInt c = -a.trace();
  p.coeffs[n - 1] = c;
  for (int k = 2; k <= n; ++k) {
    for (int i = 0; i < n; ++i) a.at(i, i) += c;
    IntMatrix next(n, n);
    for (int i = 0; i < n; ++i) {
      for (const auto& [l, val] : rows[i]) {
        if (val->is_one()) {
          for (int j = 0; j < n; ++j) next.at(i, j) += a.at(l, j);
        } else {
          for (int j = 0; j < n; ++j) next.at(i, j) += *val * a.at(l, j);
        }
      }
    }
    a = std::move(next);
    c = (-a.trace()).divided_exactly_by(k);
    p.coeffs[n - k] = c;
  }
  return p;
}

bool verify_line_charpoly(const Digraph& g) {
  const int n = g.vertex_count();
  const int m = g.arc_count();
  if (m < n)
    throw_error(ErrorCode::ExponentNegative,
                "identity needs at least as many arcs as vertices (m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + ")");
  if (m == 0) throw_error(ErrorCode::EmptyArcSet, "identity needs at least one arc");
  IntPoly line_poly = char_poly(adjacency(line_digraph(g).graph));
  IntPoly base_poly = char_poly(adjacency(g));
  return line_poly == base_poly.shifted(m - n);
}

bool debruijn_spectrum_check(int d, int k) {
  long long size = 1;
  for (int i = 0; i < k; ++i) {
    size *= d;
    if (size > 512)
      throw_error(ErrorCode::SizeLimitExceeded, "spectrum check limited to 512 vertices");
  }
  Digraph b = debruijn(d, k, 512);
  return char_poly(adjacency(b)) == monomial_shifted_linear(static_cast<int>(size) - 1, d);
}

namespace {

BigInt bigint_from_int128(__int128 v) {
  bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  const BigInt shift32(1ll << 32);
  BigInt out;
  for (int chunk = 3; chunk >= 0; --chunk) {
    out = out * shift32 + BigInt(static_cast<long long>((mag >> (32 * chunk)) & 0xffffffffull));
  }
  return negative ? -out : out;
}

// Ryser over (0,1) entries with 128-bit accumulation: row sums stay below
// n <= 20 and products below 20^20 < 2^87, so nothing overflows.
BigInt permanent_zero_one(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<std::uint32_t> col_mask(n, 0);  // bit i set when m[i][c] == 1
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (m.at(r, c).is_one()) col_mask[c] |= 1u << r;

  std::vector<int> row_sum(n, 0);
  __int128 total = 0;
  const std::uint64_t subsets = 1ull << n;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    int flipped = __builtin_ctzll(s ^ (s >> 1) ^ ((s - 1) ^ ((s - 1) >> 1)));
    std::uint64_t gray = s ^ (s >> 1);
    int delta = (gray >> flipped) & 1 ? 1 : -1;
    std::uint32_t mask = col_mask[flipped];
    while (mask != 0) {
      int r = __builtin_ctz(mask);
      mask &= mask - 1;
      row_sum[r] += delta;
    }
    __int128 prod = 1;
    for (int r = 0; r < n; ++r) {
      prod *= row_sum[r];
      if (prod == 0) break;
    }
    int bits = __builtin_popcountll(gray);
    total += ((n - bits) % 2 == 0) ? prod : -prod;
  }
  return bigint_from_int128(total);
}

BigInt permanent_general(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<BigInt> row_sum(n);
  BigInt total;
  const std::uint64_t subsets = 1ull << n;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    int flipped = __builtin_ctzll(s ^ (s >> 1) ^ ((s - 1) ^ ((s - 1) >> 1)));
    std::uint64_t gray = s ^ (s >> 1);
    bool added = (gray >> flipped) & 1;
    for (int r = 0; r < n; ++r) {
      const BigInt& x = m.at(r, flipped);
      if (x.is_zero()) continue;
      if (added)
        row_sum[r] += x;
      else
        row_sum[r] -= x;
    }
    BigInt prod(1);
    for (int r = 0; r < n; ++r) {
      if (row_sum[r].is_zero()) {
        prod = BigInt(0);
        break;
      }
      prod *= row_sum[r];
    }
    if (prod.is_zero()) continue;
    int bits = __builtin_popcountll(gray);
    if ((n - bits) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

}  // namespace

BigInt permanent(const IntMatrix& m) {
  if (!m.is_square()) throw_error(ErrorCode::NotSquare, "permanent needs a square matrix");
  const int n = m.rows();
  if (n > 20)
    throw_error(ErrorCode::TooLarge, "permanent limited to 20x20 (inclusion-exclusion cost)");
  if (n == 0) return BigInt(1);
  if (m.is_zero_one()) return permanent_zero_one(m);
  return permanent_general(m);
}

bool permanent_positivity_check(const Digraph& g) {
  if (g.arc_count() > 20)
    throw_error(ErrorCode::TooLarge, "positivity check limited to 20 arcs");
  BigInt per = g.arc_count() == 0 ? BigInt(1) : permanent(adjacency(line_digraph(g).graph));
  bool positive = per > BigInt(0);
  if (positive != all_components_eulerian(g))
    throw std::logic_error("permanent sign disagrees with component-wise eulerian test");
  return positive;
}

RatMatrix penrose_witness_regular(const Digraph& g) {
  int k = regular_degree(g);
  if (k < 1) throw_error(ErrorCode::NotRegular, "pseudo-inverse witness needs a regular digraph");
  RatMatrix m = RatMatrix::from_int(adjacency(line_digraph(g).graph));
  RatMatrix mplus = m.transpose().scaled(Rational(BigInt(1), BigInt(static_cast<long long>(k) * k)));

  RatMatrix m_mplus = m * mplus;
  RatMatrix mplus_m = mplus * m;
  bool ok = (m_mplus * m) == m && (mplus_m * mplus) == mplus &&
            m_mplus == m_mplus.transpose() && mplus_m == mplus_m.transpose();
  if (!ok)
    throw_error(ErrorCode::PenroseViolation, "transpose/k^2 witness failed a defining condition");
  return mplus;
}

}  // namespace linewalk
