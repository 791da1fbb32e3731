#include "coalglab/poly.hpp"

#include <algorithm>
#include <map>

namespace coalglab {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& s) {
  Poly p(s.field());
  if (!s.is_zero()) p.c_.push_back(s);
  return p;
}

Poly Poly::x(Field f) {
  Poly p(f);
  p.c_ = {Scalar::zero(f), Scalar::one(f)};
  return p;
}

Poly Poly::x_minus(const Scalar& a) {
  Poly p(a.field());
  p.c_ = {-a, Scalar::one(a.field())};
  return p;
}

Scalar Poly::coeff(std::size_t i) const {
  if (i < c_.size()) return c_[i];
  return Scalar::zero(field_);
}

Scalar Poly::leading() const {
  if (c_.empty()) return Scalar::zero(field_);
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Scalar inv = c_.back().inverse();
  for (auto& s : r.c_) s *= inv;
  return r;
}

Poly Poly::derivative() const {
  Poly r(field_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * Scalar::of_int(field_, static_cast<long long>(i)));
  r.trim();
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(a.field_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly nb = b;
  for (auto& s : nb.c_) s = -s;
  return a + nb;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero");
  q = Poly(a.field_);
  r = a;
  if (r.c_.size() < b.c_.size()) return;
  q.c_.assign(r.c_.size() - b.c_.size() + 1, Scalar::zero(a.field_));
  Scalar lead_inv = b.c_.back().inverse();
  while (!r.is_zero() && r.c_.size() >= b.c_.size()) {
    std::size_t shift = r.c_.size() - b.c_.size();
    Scalar f = r.c_.back() * lead_inv;
    q.c_[shift] += f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[shift + j] -= f * b.c_[j];
    r.trim();
  }
  q.trim();
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q(a.field_), r(a.field_);
  Poly::divmod(a, b, q, r);
  return q;
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q(a.field_), r(a.field_);
  Poly::divmod(a, b, q, r);
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Scalar Poly::eval(const Scalar& v) const {
  Scalar r = Scalar::zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
  return r;
}

Matrix Poly::eval(const Matrix& m) const {
  Matrix r(field_, m.rows(), m.cols());
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t d = 0; d < m.rows(); ++d) r.at(d, d) += c_[i];
  }
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c_[i].to_string();
    } else {
      if (!c_[i].is_one()) out += c_[i].to_string() + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

Poly minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw input_error("minimal_polynomial: non-square");
  Field f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return Poly(f, {Scalar::one(f)});
  std::size_t nn = n * n;
  // Incremental elimination over flattened powers.
  // reduced[r]: a row with leading column lead[r]; combo[r]: its expression in powers.
  std::vector<std::vector<Scalar>> reduced, combo;
  std::vector<std::size_t> lead;
  Matrix power = Matrix::identity(f, n);
  for (std::size_t k = 0;; ++k) {
    std::vector<Scalar> v(nn, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = power.at(i, j);
    std::vector<Scalar> expr(k + 1, Scalar::zero(f));
    expr[k] = Scalar::one(f);
    // reduce v against current rows
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      Scalar c = v[lead[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < nn; ++j)
        if (!reduced[r][j].is_zero()) v[j] -= c * reduced[r][j];
      for (std::size_t j = 0; j < combo[r].size() && j < expr.size(); ++j)
        expr[j] -= c * combo[r][j];
      // note: combo rows only involve powers < k, so sizes fit
    }
    std::size_t l = nn;
    for (std::size_t j = 0; j < nn; ++j)
      if (!v[j].is_zero()) {
        l = j;
        break;
      }
    if (l == nn) {
      // dependence found: expr gives the minimal polynomial coefficients
      return Poly(f, std::move(expr)).monic();
    }
    Scalar inv = v[l].inverse();
    for (auto& s : v) s *= inv;
    for (auto& s : expr) s *= inv;
    expr.resize(n + 1, Scalar::zero(f));
    reduced.push_back(std::move(v));
    combo.push_back(std::move(expr));
    lead.push_back(l);
    power = power * m;
    if (k > n) throw std::logic_error("minimal_polynomial: no dependence found");
  }
}

Poly characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw input_error("characteristic_polynomial: non-square");
  Field f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return Poly(f, {Scalar::one(f)});
  Matrix h = m;
  // Hessenberg reduction with exact pivoting
  for (std::size_t col = 0; col + 2 < n + 1 && col + 1 < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col + 1; r < n; ++r)
      if (!h.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h.at(piv, c), h.at(col + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h.at(r, piv), h.at(r, col + 1));
    }
    Scalar inv = h.at(col + 1, col).inverse();
    for (std::size_t r = col + 2; r < n; ++r) {
      if (h.at(r, col).is_zero()) continue;
      Scalar fac = h.at(r, col) * inv;
      for (std::size_t c = 0; c < n; ++c) h.at(r, c) -= fac * h.at(col + 1, c);
      for (std::size_t c = 0; c < n; ++c) h.at(c, col + 1) += fac * h.at(c, r);
    }
  }
  // charpoly of Hessenberg matrix by the standard recurrence:
  // p_0 = 1, p_k(x) = (x - h[k-1][k-1]) p_{k-1}
  //                   - sum_{i<k-1} h[i][k-1] (prod_{j=i+1..k-1} h[j][j-1]) p_i
  std::vector<Poly> p;
  p.push_back(Poly(f, {Scalar::one(f)}));
  for (std::size_t k = 1; k <= n; ++k) {
    Poly cur = Poly::x_minus(h.at(k - 1, k - 1)) * p[k - 1];
    Scalar prod = Scalar::one(f);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h.at(i + 1, i);
      if (prod.is_zero()) break;
      Scalar c = h.at(i, k - 1) * prod;
      if (!c.is_zero()) cur = cur - Poly::constant(c) * p[i];
    }
    p.push_back(std::move(cur));
  }
  return p[n];
}

namespace {

// squarefree part list: pairs (g_i, e_i) with f = prod g_i^{e_i}, g_i squarefree
std::vector<std::pair<Poly, std::size_t>> squarefree_decompose(const Poly& f_in) {
  Field f = f_in.field();
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly cur = f_in.monic();
  std::size_t outer_mult = 1;
  while (cur.degree() >= 1) {
    Poly d = cur.derivative();
    if (d.is_zero()) {
      // char p and cur is a polynomial in x^p; over GF(p) take p-th "root"
      if (!f.is_prime()) throw std::logic_error("squarefree: zero derivative over Q");
      std::size_t p = static_cast<std::size_t>(f.p);
      std::vector<Scalar> root;
      for (std::size_t i = 0; i <= cur.degree(); i += p) root.push_back(cur.coeff(i));
      cur = Poly(f, std::move(root));
      outer_mult *= p;
      continue;
    }
    Poly g = Poly::gcd(cur, d);
    // w = product of squarefree parts with multiplicity not divisible by char
    Poly w = cur / g;
    std::size_t mult = 1;
    while (w.degree() >= 1) {
      Poly y = Poly::gcd(w, g);
      Poly part = w / y;
      if (part.degree() >= 1) out.emplace_back(part.monic(), mult * outer_mult);
      ++mult;
      w = y;
      g = g / y;
    }
    cur = g;  // remaining part: all multiplicities divisible by char (or done)
  }
  return out;
}

// Berlekamp factorization of a squarefree monic polynomial over GF(p).
void berlekamp(const Poly& f, std::vector<Poly>& out) {
  Field fld = f.field();
  std::size_t n = f.degree();
  if (n <= 1) {
    if (n == 1) out.push_back(f.monic());
    return;
  }
  std::uint64_t p = fld.p;
  // Q matrix: row i = coefficients of x^{i p} mod f
  Matrix q(fld, n, n);
  Poly xp = Poly(fld, {Scalar::one(fld)});
  // x^p mod f by repeated multiplication (p < 2^31 but desk-scale p is small;
  // use square-and-multiply on exponent p)
  {
    Poly base = Poly::x(fld) % f;
    std::uint64_t e = p;
    Poly acc = Poly(fld, {Scalar::one(fld)});
    Poly sq = base;
    while (e) {
      if (e & 1) acc = (acc * sq) % f;
      e >>= 1;
      if (e) sq = (sq * sq) % f;
    }
    xp = acc;
  }
  Poly pow = Poly(fld, {Scalar::one(fld)});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= pow.degree() && j < n; ++j) q.at(i, j) = pow.coeff(j);
    if (pow.is_zero())
      for (std::size_t j = 0; j < n; ++j) q.at(i, j) = Scalar::zero(fld);
    pow = (pow * xp) % f;
  }
  // kernel of (Q - I)^T acting on coefficient columns: v(x) with v^p = v mod f.
  Matrix qmi = q.transpose() - Matrix::identity(fld, n);
  Matrix ker = qmi.kernel_basis();
  if (ker.rows() <= 1) {
    out.push_back(f.monic());
    return;
  }
  // pick a non-constant kernel element and split with gcds
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    bool nonconst = false;
    for (std::size_t c = 1; c < n; ++c)
      if (!ker.at(r, c).is_zero()) nonconst = true;
    if (!nonconst) continue;
    Poly v(fld, ker.row(r));
    std::vector<Poly> parts;
    Poly rem = f.monic();
    for (std::uint64_t c = 0; c < p && rem.degree() >= 1; ++c) {
      Poly g = Poly::gcd(rem, v - Poly::constant(Scalar::residue(fld, c)));
      if (g.degree() >= 1) {
        parts.push_back(g);
        rem = rem / g;
      }
    }
    if (rem.degree() >= 1) parts.push_back(rem);
    if (parts.size() > 1) {
      for (const Poly& part : parts) berlekamp(part, out);
      return;
    }
  }
  // kernel gave no split (should not happen for squarefree input)
  out.push_back(f.monic());
}

bool bigint_sqrt(const BigInt& v, BigInt& root) {
  if (v.is_negative()) return false;
  if (v.is_zero()) {
    root = BigInt(0);
    return true;
  }
  BigInt lo(0), hi(1);
  while (hi * hi <= v) hi = hi * BigInt(2);
  while (lo + BigInt(1) < hi) {
    BigInt mid = (lo + hi) / BigInt(2);
    if (mid * mid <= v)
      lo = mid;
    else
      hi = mid;
  }
  if (lo * lo == v) {
    root = lo;
    return true;
  }
  return false;
}

// all positive divisors of |v| (desk scale: trial division)
std::vector<BigInt> divisors(const BigInt& v) {
  std::vector<BigInt> out;
  BigInt a = v.abs();
  if (a.is_zero()) return out;
  if (!a.fits_int64()) throw undecided_error("factor: coefficient too large for root search");
  std::int64_t n = a.to_int64();
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.emplace_back(d);
      if (d != n / d) out.emplace_back(n / d);
    }
  }
  return out;
}

// one rational root of a monic poly over Q, if any (rational root theorem
// applied to the denominator-cleared integer polynomial)
bool find_rational_root(const Poly& f, Scalar& root) {
  if (f.coeff(0).is_zero()) {
    root = Scalar::zero(f.field());
    return true;
  }
  BigInt lcm_den(1);
  for (const auto& c : f.coeffs()) {
    BigInt g = BigInt::gcd(lcm_den, c.den());
    lcm_den = lcm_den / g * c.den();
  }
  std::vector<BigInt> ic;
  for (const auto& c : f.coeffs()) ic.push_back(c.num() * (lcm_den / c.den()));
  for (const BigInt& pnum : divisors(ic.front())) {
    for (const BigInt& qden : divisors(ic.back())) {
      for (int sgn : {1, -1}) {
        Scalar cand = Scalar::fraction(sgn > 0 ? pnum : -pnum, qden);
        if (f.eval(cand).is_zero()) {
          root = cand;
          return true;
        }
      }
    }
  }
  return false;
}

// factor squarefree monic poly over Q: rational roots + quadratic discriminant
void factor_squarefree_q(const Poly& f, std::vector<Poly>& out) {
  Poly cur = f.monic();
  Scalar root = Scalar::zero(f.field());
  while (cur.degree() >= 1 && find_rational_root(cur, root)) {
    Poly lin = Poly::x_minus(root);
    out.push_back(lin);
    cur = (cur / lin).monic();
  }
  if (cur.degree() == 0) return;
  if (cur.degree() == 1) {
    out.push_back(cur);
    return;
  }
  if (cur.degree() == 2) {
    // x^2 + bx + c: roots rational iff disc is a rational square
    Scalar b = cur.coeff(1), c0 = cur.coeff(0);
    Scalar disc = b * b - Scalar::of_int(f.field(), 4) * c0;
    BigInt rn, rd;
    if (!disc.num().is_negative() && bigint_sqrt(disc.num(), rn) && bigint_sqrt(disc.den(), rd)) {
      Scalar root_disc = Scalar::fraction(rn, rd);
      Scalar two = Scalar::of_int(f.field(), 2);
      Scalar r1 = (-b + root_disc) / two;
      Scalar r2 = (-b - root_disc) / two;
      out.push_back(Poly::x_minus(r1));
      out.push_back(Poly::x_minus(r2));
    } else {
      out.push_back(cur);  // irreducible over Q
    }
    return;
  }
  throw undecided_error("factor: cannot certify irreducibility of degree-" +
                        std::to_string(cur.degree()) + " factor over Q");
}

}  // namespace

std::vector<std::pair<Poly, std::size_t>> factor_poly(const Poly& f) {
  if (f.is_zero()) throw input_error("factor: zero polynomial");
  std::vector<std::pair<Poly, std::size_t>> out;
  for (const auto& [part, mult] : squarefree_decompose(f)) {
    std::vector<Poly> irr;
    if (f.field().is_prime())
      berlekamp(part, irr);
    else
      factor_squarefree_q(part, irr);
    for (const Poly& g : irr) out.emplace_back(g, mult);
  }
  // deterministic order: by degree then coefficient strings
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.to_string() < b.first.to_string();
  });
  return out;
}

std::vector<std::pair<Poly, std::size_t>> minpoly_factors(const Matrix& m) {
  return factor_poly(minimal_polynomial(m));
}

}  // namespace coalglab
