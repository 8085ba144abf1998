#include "linewalk/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "linewalk/errors.hpp"

namespace linewalk {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid UB on LLONG_MIN by working in unsigned space.
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

BigInt BigInt::from_string(const std::string& text) {
  std::size_t i = 0;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') sign = -1;
    ++i;
  }
  if (i >= text.size()) throw_error(ErrorCode::ParseError, "empty integer literal");
  BigInt result;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw_error(ErrorCode::ParseError, "bad digit in integer literal: " + text);
    result *= BigInt(10);
    result += BigInt(text[i] - '0');
  }
  if (sign < 0) result = -result;
  return result;
}

bool BigInt::is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  if (sign_ > 0) return mag <= 0x7fffffffffffffffull;
  return mag <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw_error(ErrorCode::InvalidArgument, "value exceeds 64-bit range");
  std::uint64_t mag = 0;
  if (limbs_.size() >= 1) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (sign_ < 0) return static_cast<long long>(~mag + 1);
  return static_cast<long long>(mag);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt tmp = *this;
  std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
  while (tmp.sign_ != 0) {
    chunks.push_back(tmp.divmod_small_in_place(1000000000u));
  }
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  const std::vector<std::uint32_t>& big = a.size() >= b.size() ? a : b;
  const std::vector<std::uint32_t>& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> out(big.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t sum = carry + big[i] + (i < small.size() ? small[i] : 0u);
    out[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  out[big.size()] = static_cast<std::uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(diff);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::mul_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    limbs_ = add_magnitude(limbs_, rhs.limbs_);
    return *this;
  }
  int cmp = compare_magnitude(*this, rhs);
  if (cmp == 0) {
    sign_ = 0;
    limbs_.clear();
  } else if (cmp > 0) {
    limbs_ = sub_magnitude(limbs_, rhs.limbs_);
  } else {
    limbs_ = sub_magnitude(rhs.limbs_, limbs_);
    sign_ = rhs.sign_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out;
  if (lhs.sign_ == 0 || rhs.sign_ == 0) return out;
  out.sign_ = lhs.sign_ * rhs.sign_;
  out.limbs_ = BigInt::mul_magnitude(lhs.limbs_, rhs.limbs_);
  out.trim();
  return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  *this = *this * rhs;
  return *this;
}

std::uint32_t BigInt::divmod_small_in_place(std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

// Knuth algorithm D on normalized limbs. Callers guarantee |num| >= |den| > 0.
void BigInt::divmod_magnitude(const std::vector<std::uint32_t>& num,
                              const std::vector<std::uint32_t>& den,
                              std::vector<std::uint32_t>& quot,
                              std::vector<std::uint32_t>& rem) {
  quot.clear();
  rem.clear();
  if (den.size() == 1) {
    std::uint32_t d = den[0];
    quot = num;
    std::uint64_t r = 0;
    for (std::size_t i = quot.size(); i-- > 0;) {
      std::uint64_t cur = (r << 32) | quot[i];
      quot[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    if (r != 0) rem.push_back(static_cast<std::uint32_t>(r));
    return;
  }

  int shift = 0;
  for (std::uint32_t top = den.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;

  const std::size_t n = den.size();
  const std::size_t m = num.size() - n;

  // Normalized copies: v keeps n limbs, u gets one extra high limb.
  std::vector<std::uint32_t> v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = den[i] << shift;
    if (shift != 0 && i > 0) v[i] |= den[i - 1] >> (32 - shift);
  }
  std::vector<std::uint32_t> u(num.size() + 1, 0);
  u[num.size()] = shift == 0 ? 0 : num.back() >> (32 - shift);
  for (std::size_t i = num.size(); i-- > 0;) {
    u[i] = num[i] << shift;
    if (shift != 0 && i > 0) u[i] |= num[i - 1] >> (32 - shift);
  }

  quot.assign(m + 1, 0);
  const std::uint64_t vtop = v[n - 1];
  const std::uint64_t vsecond = v[n - 2];

  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t numer = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = numer / vtop;
    std::uint64_t rhat = numer % vtop;
    while (qhat >= kBase || qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
      if (rhat >= kBase) break;
    }

    // Multiply-subtract qhat * v from u[j .. j+n].
    std::uint64_t carry = 0;
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v[i];
      t = static_cast<std::int64_t>(u[i + j]) - static_cast<std::int64_t>(carry) -
          static_cast<std::int64_t>(p & 0xffffffffu);
      u[i + j] = static_cast<std::uint32_t>(t);
      carry = (p >> 32) - static_cast<std::uint64_t>(t >> 32);
    }
    t = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry);
    u[j + n] = static_cast<std::uint32_t>(t);

    if (t < 0) {
      // qhat was one too large; add v back once.
      --qhat;
      std::uint64_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = static_cast<std::uint64_t>(u[i + j]) + v[i] + k;
        u[i + j] = static_cast<std::uint32_t>(sum);
        k = sum >> 32;
      }
      u[j + n] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[j + n]) + k);
    }
    quot[j] = static_cast<std::uint32_t>(qhat);
  }

  while (!quot.empty() && quot.back() == 0) quot.pop_back();
  // Denormalize remainder out of u[0 .. n-1].
  rem.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    rem[i] = u[i] >> shift;
    if (shift != 0) rem[i] |= static_cast<std::uint32_t>(u[i + 1] << (32 - shift));
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigIntDivMod divmod(const BigInt& num, const BigInt& den) {
  if (den.sign_ == 0) throw_error(ErrorCode::InvalidArgument, "division by zero");
  BigIntDivMod out;
  if (num.sign_ == 0) return out;
  if (BigInt::compare_magnitude(num, den) < 0) {
    out.remainder = num;
    return out;
  }
  BigInt::divmod_magnitude(num.limbs_, den.limbs_, out.quotient.limbs_, out.remainder.limbs_);
  out.quotient.sign_ = out.quotient.limbs_.empty() ? 0 : num.sign_ * den.sign_;
  out.remainder.sign_ = out.remainder.limbs_.empty() ? 0 : num.sign_;
  return out;
}

BigInt operator/(const BigInt& lhs, const BigInt& rhs) { return divmod(lhs, rhs).quotient; }
BigInt operator%(const BigInt& lhs, const BigInt& rhs) { return divmod(lhs, rhs).remainder; }

BigInt BigInt::divided_exactly_by(long long d) const {
  BigIntDivMod dm = divmod(*this, BigInt(d));
  if (!dm.remainder.is_zero())
    throw_error(ErrorCode::InvalidArgument, "inexact division in exact context");
  return dm.quotient;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.limbs_.empty() ? 0 : 1;
  b.sign_ = b.limbs_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
  BigInt result(1);
  BigInt acc = base;
  while (exp != 0) {
    if (exp & 1u) result *= acc;
    exp >>= 1;
    if (exp != 0) acc *= acc;
  }
  return result;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  if (a.sign_ == 0) return false;
  int cmp = BigInt::compare_magnitude(a, b);
  return a.sign_ > 0 ? cmp < 0 : cmp > 0;
}

namespace {
const char* kErrorNames[] = {
    "Ok",
    "ParseError",
    "VertexOutOfRange",
    "NonBinaryMatrix",
    "NotSquare",
    "NotEulerian",
    "NotAcyclic",
    "NotRegular",
    "NotSpanning",
    "NotSubdigraph",
    "NotLineDigraph",
    "NotUnitary",
    "EmptyArcSet",
    "SizeLimitExceeded",
    "LoopsPresent",
    "TooLarge",
    "InvalidPartition",
    "ExponentNegative",
    "PenroseViolation",
    "BadDimension",
    "DimensionMismatch",
    "BadGenerators",
    "BadOrder",
    "InvalidArgument",
};
}  // namespace

const char* error_code_name(ErrorCode code) {
  auto idx = static_cast<std::size_t>(code);
  if (idx >= sizeof(kErrorNames) / sizeof(kErrorNames[0])) return "Unknown";
  return kErrorNames[idx];
}

}  // namespace linewalk
