#include "linewalk/matrix.hpp"

#include <cmath>

#include "linewalk/errors.hpp"

namespace linewalk {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

BigInt IntMatrix::trace() const {
  BigInt t;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

bool IntMatrix::is_zero_one() const {
  for (const BigInt& x : a_)
    if (!x.is_zero() && !x.is_one()) return false;
  return true;
}

bool IntMatrix::is_permutation() const {
  if (!is_square() || !is_zero_one()) return false;
  std::vector<int> row_sum(rows_, 0), col_sum(cols_, 0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c).is_one()) {
        ++row_sum[r];
        ++col_sum[c];
      }
  for (int i = 0; i < rows_; ++i)
    if (row_sum[i] != 1 || col_sum[i] != 1) return false;
  return true;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw_error(ErrorCode::DimensionMismatch, "matrix addition shape mismatch");
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw_error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& x = a.at(r, k);
      if (x.is_zero()) continue;
      if (x.is_one()) {
        for (int c = 0; c < b.cols_; ++c) out.at(r, c) += b.at(k, c);
      } else {
        for (int c = 0; c < b.cols_; ++c) out.at(r, c) += x * b.at(k, c);
      }
    }
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      out += at(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = Rational(m.at(r, c), BigInt(1));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_)
    throw_error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) {
        if (b.at(k, c).is_zero()) continue;
        out.at(r, c) += x * b.at(k, c);
      }
    }
  }
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string RatMatrix::to_string() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      out += at(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

CxMatrix CxMatrix::identity(int n) {
  CxMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CxMatrix CxMatrix::adjoint() const {
  CxMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

CxMatrix CxMatrix::kron(const CxMatrix& rhs) const {
  CxMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      Complex x = at(r, c);
      if (x == Complex(0.0, 0.0)) continue;
      for (int rr = 0; rr < rhs.rows_; ++rr)
        for (int cc = 0; cc < rhs.cols_; ++cc)
          out.at(r * rhs.rows_ + rr, c * rhs.cols_ + cc) = x * rhs.at(rr, cc);
    }
  return out;
}

std::vector<CxMatrix::Complex> CxMatrix::apply(const std::vector<Complex>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw_error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Complex> out(rows_, Complex(0.0, 0.0));
  for (int r = 0; r < rows_; ++r) {
    Complex acc(0.0, 0.0);
    for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

CxMatrix operator*(const CxMatrix& a, const CxMatrix& b) {
  if (a.cols_ != b.rows_)
    throw_error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  CxMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      CxMatrix::Complex x = a.at(r, k);
      if (x == CxMatrix::Complex(0.0, 0.0)) continue;
      for (int c = 0; c < b.cols_; ++c) out.at(r, c) += x * b.at(k, c);
    }
  return out;
}

double CxMatrix::max_abs_diff(const CxMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw_error(ErrorCode::DimensionMismatch, "matrix comparison shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
  return worst;
}

bool CxMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  return (adjoint() * *this).max_abs_diff(identity(rows_)) <= tol;
}

int CxMatrix::nonzero_count(double tol) const {
  int count = 0;
  for (const Complex& x : a_)
    if (std::abs(x) > tol) ++count;
  return count;
}

}  // namespace linewalk
