#pragma once

// Arbitrary-precision signed integers. Sign/magnitude with base-2^32 limbs,
// little-endian, canonical form (no leading zero limbs, zero has sign 0).
// Only what the exact linear algebra needs: ring ops, truncated divmod, gcd,
// decimal conversion.

#include <cstdint>
#include <string>
#include <vector>

namespace linewalk {

class BigInt;
struct BigIntDivMod;
BigIntDivMod divmod(const BigInt& num, const BigInt& den);

class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor) mirrors integer literals

  static BigInt from_string(const std::string& text);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  int sign() const { return sign_; }

  bool fits_int64() const;
  long long to_int64() const;  // throws InvalidArgument when out of range
  std::string to_string() const;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  friend BigInt operator/(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator%(const BigInt& lhs, const BigInt& rhs);

  // Exact division helper for the char-poly recurrence; throws if not exact.
  BigInt divided_exactly_by(long long d) const;

  static BigInt gcd(BigInt a, BigInt b);
  static BigInt pow(const BigInt& base, unsigned exp);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

 private:
  int sign_ = 0;  // -1, 0, +1
  std::vector<std::uint32_t> limbs_;

  void trim();
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  static void divmod_magnitude(const std::vector<std::uint32_t>& num,
                               const std::vector<std::uint32_t>& den,
                               std::vector<std::uint32_t>& quot,
                               std::vector<std::uint32_t>& rem);
  std::uint32_t divmod_small_in_place(std::uint32_t d);  // returns remainder

  friend BigIntDivMod divmod(const BigInt& num, const BigInt& den);
};

// Truncated toward zero; remainder takes the dividend's sign.
struct BigIntDivMod {
  BigInt quotient;
  BigInt remainder;
};

BigIntDivMod divmod(const BigInt& num, const BigInt& den);  // den != 0

}  // namespace linewalk
