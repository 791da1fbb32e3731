#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coalglab/matrix.hpp"

namespace coalglab {

// Dense univariate polynomial, coefficients low to high, no leading zeros.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

  static Poly zero(Field f) { return Poly(f); }
  static Poly constant(const Scalar& s);
  static Poly x(Field f);  // the monomial x
  // x - a
  static Poly x_minus(const Scalar& a);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  Scalar coeff(std::size_t i) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar leading() const;

  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic

  Scalar eval(const Scalar& v) const;
  Matrix eval(const Matrix& m) const;  // Horner

  std::string to_string() const;  // for reports, variable "x"

 private:
  Field field_;
  std::vector<Scalar> c_;
  void trim();
};

// Minimal polynomial of a square matrix (monic), via Krylov iteration on the
// flattened powers I, m, m^2, ...
Poly minimal_polynomial(const Matrix& m);

// Characteristic polynomial via Hessenberg reduction; works over any field.
Poly characteristic_polynomial(const Matrix& m);

// Factor the minimal polynomial of m into monic irreducibles with
// multiplicities. Over GF(p): Berlekamp. Over Q: linear factors by rational
// root search plus quadratic discriminants; throws undecided_error on
// higher-degree factors it cannot certify.
std::vector<std::pair<Poly, std::size_t>> minpoly_factors(const Matrix& m);

// Same factorization applied to an arbitrary polynomial.
std::vector<std::pair<Poly, std::size_t>> factor_poly(const Poly& f);

}  // namespace coalglab
