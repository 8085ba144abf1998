#pragma once

// Dense matrices used across the library: exact integer (BigInt entries),
// exact rational, and complex double precision. Row-major storage, value
// semantics. Desk-scale sizes only, so schoolbook products throughout.

#include <complex>
#include <string>
#include <vector>

#include "linewalk/bigint.hpp"
#include "linewalk/rational.hpp"

namespace linewalk {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix transpose() const;
  BigInt trace() const;
  bool is_zero_one() const;
  bool is_permutation() const;  // square, (0,1), one 1 per row and column

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  std::string to_string() const;  // rows on lines, space-separated

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> a_;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix from_int(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  RatMatrix transpose() const;
  RatMatrix scaled(const Rational& s) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  std::string to_string() const;  // entries as p/q

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

class CxMatrix {
 public:
  using Complex = std::complex<double>;

  CxMatrix() = default;
  CxMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static CxMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Complex& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  CxMatrix adjoint() const;
  CxMatrix kron(const CxMatrix& rhs) const;

  std::vector<Complex> apply(const std::vector<Complex>& v) const;

  friend CxMatrix operator*(const CxMatrix& a, const CxMatrix& b);

  double max_abs_diff(const CxMatrix& other) const;
  bool is_unitary(double tol = 1e-12) const;
  int nonzero_count(double tol = 1e-12) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> a_;
};

}  // namespace linewalk
