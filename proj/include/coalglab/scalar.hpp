#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coalglab/bigint.hpp"

namespace coalglab {

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a Q-mode decision procedure cannot certify its answer
// (irreducibility / division-algebra checks outside the supported fragment).
struct undecided_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Session field: exact rationals or a prime field GF(p).
struct Field {
  enum class Kind : std::uint8_t { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static Field Q() { return Field{}; }
  static Field GF(std::uint64_t p);

  bool is_rational() const { return kind == Kind::rationals; }
  bool is_prime() const { return kind == Kind::prime; }
  std::uint64_t characteristic() const { return is_prime() ? p : 0; }

  std::string to_string() const;       // "Q" or "GF:p"
  static Field parse(std::string_view s);

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind == b.kind && a.p == b.p;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }
};

// Exact field element. Rational mode keeps a reduced fraction with positive
// denominator; prime mode keeps a residue in [0, p).
class Scalar {
 public:
  Scalar() : den_(1) {}  // 0 over Q
  explicit Scalar(Field f) : field_(f) {
    if (f.is_rational()) den_ = BigInt(1);
  }

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f);
  static Scalar of_int(Field f, long long v);
  static Scalar of_big(Field f, const BigInt& v);
  static Scalar fraction(const BigInt& num, const BigInt& den);  // rational mode
  static Scalar residue(Field f, std::uint64_t r);               // prime mode

  static Scalar parse(Field f, std::string_view s);
  std::string to_string() const;  // canonical: reduced "a/b" or integer

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // total order used only for canonical forms and deterministic output
  friend bool operator<(const Scalar& a, const Scalar& b);

  // prime-mode residue; throws in rational mode
  std::uint64_t residue_value() const;
  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

 private:
  Field field_;
  std::uint64_t res_ = 0;  // prime mode
  BigInt num_ = BigInt(0);
  BigInt den_ = BigInt(1);  // rational mode invariant: den_ > 0, gcd = 1

  void check_same_field(const Scalar& o) const;
  void reduce();
};

}  // namespace coalglab
