#include "coalglab/scalar.hpp"

namespace coalglab {

namespace {

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("Scalar: not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::GF(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31) || !is_probable_prime(p))
    throw input_error("Field: GF(p) requires a prime p < 2^31");
  Field f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "GF:" + std::to_string(p);
}

Field Field::parse(std::string_view s) {
  if (s == "Q") return Q();
  if (s.rfind("GF:", 0) == 0) {
    std::uint64_t p = 0;
    for (char c : s.substr(3)) {
      if (c < '0' || c > '9') throw input_error("Field: bad GF(p) descriptor");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p >= (1ull << 31)) throw input_error("Field: p too large");
    }
    return GF(p);
  }
  throw input_error("Field: expected \"Q\" or \"GF:p\", got \"" + std::string(s) + "\"");
}

Scalar Scalar::one(Field f) {
  Scalar s(f);
  if (f.is_prime())
    s.res_ = 1 % f.p;
  else
    s.num_ = BigInt(1);
  return s;
}

Scalar Scalar::of_int(Field f, long long v) {
  Scalar s(f);
  if (f.is_prime()) {
    long long m = v % static_cast<long long>(f.p);
    if (m < 0) m += static_cast<long long>(f.p);
    s.res_ = static_cast<std::uint64_t>(m);
  } else {
    s.num_ = BigInt(v);
  }
  return s;
}

Scalar Scalar::of_big(Field f, const BigInt& v) {
  Scalar s(f);
  if (f.is_prime()) {
    std::uint64_t m = v.mod_u64(f.p);
    s.res_ = v.is_negative() && m != 0 ? f.p - m : m;
  } else {
    s.num_ = v;
  }
  return s;
}

Scalar Scalar::fraction(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
  Scalar s(Field::Q());
  s.num_ = num;
  s.den_ = den;
  s.reduce();
  return s;
}

Scalar Scalar::residue(Field f, std::uint64_t r) {
  if (!f.is_prime()) throw input_error("Scalar: residue needs GF(p)");
  Scalar s(f);
  s.res_ = r % f.p;
  return s;
}

void Scalar::reduce() {
  if (field_.is_prime()) return;
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw input_error("Scalar: mixed fields");
}

bool Scalar::is_zero() const { return field_.is_prime() ? res_ == 0 : num_.is_zero(); }

bool Scalar::is_one() const {
  return field_.is_prime() ? res_ == 1 % field_.p : (num_.is_one() && den_.is_one());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  Scalar r(a.field_);
  if (a.field_.is_prime()) {
    r.res_ = (a.res_ + b.res_) % a.field_.p;
  } else {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.reduce();
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_prime()) {
    r.res_ = res_ == 0 ? 0 : field_.p - res_;
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  Scalar r(a.field_);
  if (a.field_.is_prime()) {
    r.res_ = (a.res_ * b.res_) % a.field_.p;  // p < 2^31 keeps this in range
  } else {
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.reduce();
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Scalar r(field_);
  if (field_.is_prime()) {
    r.res_ = mod_inverse(res_, field_.p);
  } else {
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.is_prime()) return a.res_ == b.res_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_prime()) return a.res_ < b.res_;
  return a.num_ * b.den_ < b.num_ * a.den_;
}

std::uint64_t Scalar::residue_value() const {
  if (!field_.is_prime()) throw input_error("Scalar: residue_value needs GF(p)");
  return res_;
}

Scalar Scalar::parse(Field f, std::string_view s) {
  if (s.empty()) throw input_error("Scalar: empty literal");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    BigInt num = BigInt::from_string(s.substr(0, slash));
    BigInt den = BigInt::from_string(s.substr(slash + 1));
    if (f.is_prime()) {
      if (den.mod_u64(f.p) == 0) throw input_error("Scalar: denominator is 0 mod p");
      return of_big(f, num) * of_big(f, den).inverse();
    }
    return fraction(num, den);
  }
  return of_big(f, BigInt::from_string(s));
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(res_);
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace coalglab
