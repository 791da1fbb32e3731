#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coalglab {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Sized for exact linear algebra on small dense matrices, not for speed.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);
  std::string to_string() const;

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const;
  bool is_negative() const { return sign_ < 0; }
  int signum() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated toward zero, like built-in integer division.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  static BigInt gcd(BigInt a, BigInt b);  // nonnegative result
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  bool fits_int64() const;
  std::int64_t to_int64() const;

  std::uint64_t mod_u64(std::uint64_t m) const;  // |this| mod m, m > 0

 private:
  int sign_ = 0;                    // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // little-endian, no trailing zero limbs

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

}  // namespace coalglab
