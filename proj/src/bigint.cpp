#include "coalglab/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace coalglab {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // careful with LLONG_MIN
  std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (u) {
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += (1ll << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<std::uint32_t>(s));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size() || carry; ++j) {
      std::uint64_t cur = r[i + j] + carry;
      if (j < b.size()) cur += static_cast<std::uint64_t>(a[i]) * b[j];
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
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

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = a.sign_;
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      r.sign_ = b.sign_;
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  // bitwise long division on magnitudes
  q = BigInt();
  r = BigInt();
  if (a.sign_ == 0) return;
  int cmp = cmp_mag(a.mag_, b.mag_);
  if (cmp < 0) {
    r = a;
    return;
  }
  std::size_t nbits = a.mag_.size() * 32;
  std::vector<std::uint32_t> rem;   // running remainder magnitude
  std::vector<std::uint32_t> quot(a.mag_.size(), 0);
  for (std::size_t bit = nbits; bit-- > 0;) {
    // rem = rem*2 + bit(a, bit)
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      std::uint32_t nc = rem[i] >> 31;
      rem[i] = (rem[i] << 1) | carry;
      carry = nc;
    }
    if (carry) rem.push_back(1);
    if ((a.mag_[bit / 32] >> (bit % 32)) & 1u) {
      if (rem.empty())
        rem.push_back(1);
      else
        rem[0] |= 1u;
    }
    if (cmp_mag(rem, b.mag_) >= 0) {
      rem = sub_mag(rem, b.mag_);
      quot[bit / 32] |= (1u << (bit % 32));
    }
  }
  q.mag_ = std::move(quot);
  q.sign_ = 1;
  q.trim();
  r.mag_ = std::move(rem);
  r.sign_ = r.mag_.empty() ? 0 : 1;
  r.trim();
  // fix signs: truncate toward zero
  if (q.sign_ != 0) q.sign_ = a.sign_ * b.sign_;
  if (r.sign_ != 0) r.sign_ = a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  std::uint64_t u = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (sign_ >= 0) return u <= 0x7fffffffffffffffull;
  return u <= 0x8000000000000000ull;
}

std::int64_t BigInt::to_int64() const {
  std::uint64_t u = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  return sign_ < 0 ? -static_cast<std::int64_t>(u) : static_cast<std::int64_t>(u);
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  if (m == 0) throw std::domain_error("BigInt: mod 0");
  std::uint64_t r = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    // r < m <= 2^32-safe only when m < 2^32; use 128-bit for safety
    unsigned __int128 cur = (static_cast<unsigned __int128>(r) << 32) | mag_[i];
    r = static_cast<std::uint64_t>(cur % m);
  }
  return r;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * ten + BigInt(s[i] - '0');
  }
  if (neg) r = -r;
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  BigInt cur = abs();
  BigInt base(1000000000);
  std::vector<std::uint32_t> chunks;
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod(cur, base, q, r);
    chunks.push_back(r.mag_.empty() ? 0 : r.mag_[0]);
    cur = std::move(q);
  }
  out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  if (sign_ < 0) out.insert(out.begin(), '-');
  return out;
}

}  // namespace coalglab
