#include "coalglab/comodule.hpp"

#include "coalglab/matrep.hpp"

#include <algorithm>

namespace coalglab {

std::size_t DimensionVector::total() const {
  std::size_t t = 0;
  for (const auto& [k, v] : entries) t += v;
  return t;
}

std::string DimensionVector::to_string() const {
  std::string s = "(";
  bool first = true;
  for (const auto& [k, v] : entries) {
    if (v == 0) continue;
    if (!first) s += ", ";
    s += k + ":" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

bool DimensionVector::leq(const DimensionVector& other) const {
  for (const auto& [k, v] : entries) {
    auto it = other.entries.find(k);
    std::size_t o = it == other.entries.end() ? 0 : it->second;
    if (v > o) return false;
  }
  return true;
}

DimensionVector DimensionVector::sum(const DimensionVector& a, const DimensionVector& b) {
  DimensionVector r = a;
  for (const auto& [k, v] : b.entries) r.entries[k] += v;
  return r;
}

Comodule::Comodule(CoalgebraPtr over, std::size_t dim, std::vector<std::vector<RhoTerm>> rho)
    : over_(std::move(over)), dim_(dim), rho_(std::move(rho)) {
  if (rho_.size() != dim_) throw input_error("Comodule: rho size mismatch");
  for (const auto& terms : rho_)
    for (const auto& t : terms)
      if (t.c_index >= over_->dim() || t.target >= dim_)
        throw input_error("Comodule: rho index out of range");
  // built eagerly so shared comodules stay immutable across threads
  std::vector<Matrix> mats(over_->dim(), Matrix(field(), dim_, dim_));
  for (std::size_t s = 0; s < dim_; ++s)
    for (const auto& t : rho_[s]) mats[t.c_index].at(t.target, s) += t.coeff;
  action_ = std::move(mats);
}

Comodule Comodule::zero(CoalgebraPtr c) { return Comodule(std::move(c), 0, {}); }

Comodule Comodule::simple(CoalgebraPtr c, const std::vector<Scalar>& grouplike) {
  std::vector<RhoTerm> terms;
  for (std::size_t i = 0; i < c->dim(); ++i)
    if (!grouplike[i].is_zero()) terms.push_back({i, 0, grouplike[i]});
  return Comodule(std::move(c), 1, {terms});
}

Comodule Comodule::regular(CoalgebraPtr c) {
  std::vector<std::vector<RhoTerm>> rho(c->dim());
  for (std::size_t i = 0; i < c->dim(); ++i)
    for (const auto& t : c->delta()[i]) rho[i].push_back({t.j, t.k, t.coeff});
  return Comodule(std::move(c), c->dim(), std::move(rho));
}

CheckReport Comodule::check() const {
  CheckReport rep;
  std::size_t n = over_->dim(), m = dim_;
  const auto& delta = over_->delta();
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<Scalar> lhs(n * n * m, Scalar::zero(field()));
    std::vector<Scalar> rhs(n * n * m, Scalar::zero(field()));
    for (const auto& t : rho_[s]) {
      for (const auto& u : delta[t.c_index])
        lhs[(u.j * n + u.k) * m + t.target] += t.coeff * u.coeff;
      for (const auto& u : rho_[t.target])
        rhs[(t.c_index * n + u.c_index) * m + u.target] += t.coeff * u.coeff;
    }
    if (lhs != rhs) {
      rep.ok = false;
      rep.violations.push_back("coaction coassociativity fails at x_" + std::to_string(s));
    }
    std::vector<Scalar> cu(m, Scalar::zero(field()));
    for (const auto& t : rho_[s]) cu[t.target] += t.coeff * over_->counit()[t.c_index];
    for (std::size_t t = 0; t < m; ++t) {
      Scalar expect = t == s ? Scalar::one(field()) : Scalar::zero(field());
      if (cu[t] != expect) {
        rep.ok = false;
        rep.violations.push_back("counit law fails at x_" + std::to_string(s));
        break;
      }
    }
  }
  return rep;
}

std::vector<Scalar> Comodule::rho_of(const std::vector<Scalar>& v) const {
  std::size_t n = over_->dim(), m = dim_;
  std::vector<Scalar> out(n * m, Scalar::zero(field()));
  for (std::size_t s = 0; s < m; ++s) {
    if (v[s].is_zero()) continue;
    for (const auto& t : rho_[s]) out[t.c_index * m + t.target] += v[s] * t.coeff;
  }
  return out;
}

const std::vector<Matrix>& Comodule::action_matrices() const { return *action_; }

Matrix Comodule::action_of(const std::vector<Scalar>& functional) const {
  Matrix a(field(), dim_, dim_);
  const auto& mats = action_matrices();
  for (std::size_t i = 0; i < over_->dim(); ++i)
    if (!functional[i].is_zero()) a = a + mats[i] * functional[i];
  return a;
}

Subspace Comodule::cf() const {
  std::size_t n = over_->dim();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t s = 0; s < dim_; ++s)
    for (std::size_t t = 0; t < dim_; ++t) {
      std::vector<Scalar> c(n, Scalar::zero(field()));
      bool nz = false;
      for (const auto& term : rho_[s])
        if (term.target == t) {
          c[term.c_index] += term.coeff;
          nz = true;
        }
      if (nz) rows.push_back(std::move(c));
    }
  Subspace span = Subspace::from_vectors(field(), n, rows);
  if (!over_->is_subcoalgebra(span))
    throw input_error("cf: coefficient span is not a subcoalgebra; run check_comodule");
  return span;
}

Subspace Comodule::annihilator() const {
  std::size_t n = over_->dim(), m = dim_;
  const auto& mats = action_matrices();
  Matrix cond(field(), m * m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t s = 0; s < m; ++s) cond.at(t * m + s, i) = mats[i].at(t, s);
  return Subspace::from_rows(cond.kernel_basis());
}

Comodule direct_sum(const Comodule& a, const Comodule& b) {
  if (!same_coalgebra(a, b)) throw input_error("direct_sum: different coalgebras");
  std::vector<std::vector<RhoTerm>> rho(a.dim_ + b.dim_);
  for (std::size_t s = 0; s < a.dim_; ++s) rho[s] = a.rho_[s];
  for (std::size_t s = 0; s < b.dim_; ++s) {
    rho[a.dim_ + s] = b.rho_[s];
    for (auto& t : rho[a.dim_ + s]) t.target += a.dim_;
  }
  return Comodule(a.over_, a.dim_ + b.dim_, std::move(rho));
}

Comodule Comodule::base_change(const Matrix& p) const {
  // new basis y = P x (columns of P^-1 express old in new); coaction
  // transported so that the comodule is isomorphic via P
  if (p.rows() != dim_ || p.cols() != dim_ || !p.invertible())
    throw input_error("base_change: need invertible square matrix");
  Matrix pinv = p.inverse();
  std::size_t n = over_->dim();
  std::vector<std::vector<RhoTerm>> rho(dim_);
  // action matrices transform by conjugation: A_i' = P A_i P^-1
  const auto& mats = action_matrices();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ai = p * mats[i] * pinv;
    for (std::size_t t = 0; t < dim_; ++t)
      for (std::size_t s = 0; s < dim_; ++s)
        if (!ai.at(t, s).is_zero()) rho[s].push_back({i, t, ai.at(t, s)});
  }
  return Comodule(over_, dim_, std::move(rho));
}

bool same_coalgebra(const Comodule& a, const Comodule& b) {
  return a.coalgebra() == b.coalgebra() || *a.coalgebra() == *b.coalgebra();
}

bool is_subcomodule(const Comodule& m, const Subspace& x) {
  const auto& mats = m.action_matrices();
  for (const auto& a : mats)
    for (std::size_t r = 0; r < x.dim(); ++r)
      if (!x.contains(a.apply(x.basis().row(r)))) return false;
  return true;
}

Comodule restrict_to_subcomodule(const Comodule& m, const Subspace& x) {
  std::size_t n = m.coalgebra()->dim(), k = x.dim();
  Matrix basis_t = x.basis().transpose();
  std::vector<std::vector<RhoTerm>> rho(k);
  for (std::size_t s = 0; s < k; ++s) {
    auto img = m.rho_of(x.basis().row(s));  // C (x) M coords
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> w(m.dim(), Scalar::zero(m.field()));
      bool nz = false;
      for (std::size_t t = 0; t < m.dim(); ++t) {
        w[t] = img[i * m.dim() + t];
        nz = nz || !w[t].is_zero();
      }
      if (!nz) continue;
      std::vector<Scalar> coords;
      if (!basis_t.solve(w, coords))
        throw input_error("restrict_to_subcomodule: subspace not coaction-stable");
      for (std::size_t t = 0; t < k; ++t)
        if (!coords[t].is_zero()) rho[s].push_back({i, t, coords[t]});
    }
  }
  return Comodule(m.coalgebra(), k, std::move(rho));
}

QuotientComodule quotient_comodule(const Comodule& m, const Subspace& x) {
  std::size_t md = m.dim(), n = m.coalgebra()->dim(), k = x.dim();
  std::vector<bool> is_piv(md, false);
  {
    auto rr = x.basis().rref();
    for (std::size_t p : rr.pivots) is_piv[p] = true;
  }
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < md; ++c)
    if (!is_piv[c]) comp.push_back(c);
  std::size_t qd = md - k;
  Matrix proj(m.field(), qd, md);
  for (std::size_t c = 0; c < md; ++c) {
    std::vector<Scalar> e(md, Scalar::zero(m.field()));
    e[c] = Scalar::one(m.field());
    auto red = x.reduce(e);
    for (std::size_t r = 0; r < qd; ++r) proj.at(r, c) = red[comp[r]];
  }
  std::vector<std::vector<RhoTerm>> rho(qd);
  for (std::size_t r = 0; r < qd; ++r) {
    std::vector<Scalar> lift(md, Scalar::zero(m.field()));
    lift[comp[r]] = Scalar::one(m.field());
    auto img = m.rho_of(lift);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> w(md, Scalar::zero(m.field()));
      for (std::size_t t = 0; t < md; ++t) w[t] = img[i * md + t];
      auto pw = proj.apply(w);
      for (std::size_t t = 0; t < qd; ++t)
        if (!pw[t].is_zero()) rho[r].push_back({i, t, pw[t]});
    }
  }
  return QuotientComodule{Comodule(m.coalgebra(), qd, std::move(rho)), std::move(proj)};
}

namespace {

MatRep as_matrep(const Comodule& m) {
  return MatRep{m.field(), m.dim(), m.action_matrices()};
}

}  // namespace

std::vector<Matrix> hom_space(const Comodule& m, const Comodule& n) {
  if (!same_coalgebra(m, n)) throw input_error("hom_space: different coalgebras");
  return mat_hom(as_matrep(m), as_matrep(n));
}

EndRing end_ring(const Comodule& m) {
  MatEnd e = mat_end(as_matrep(m));
  return EndRing{std::move(e.basis), std::move(e.algebra), std::move(e.radical)};
}

Subspace socle(const Comodule& m) {
  std::size_t n = m.coalgebra()->dim(), md = m.dim();
  Subspace c0 = m.coalgebra()->coradical();
  Subspace functionals = c0.perp();  // vanish on the coradical
  // conditions: for x, every (functional, target) component of rho(x) is 0
  Matrix cond(m.field(), functionals.dim() * md, md);
  for (std::size_t s = 0; s < md; ++s) {
    std::vector<Scalar> e(md, Scalar::zero(m.field()));
    e[s] = Scalar::one(m.field());
    auto img = m.rho_of(e);
    for (std::size_t fr = 0; fr < functionals.dim(); ++fr)
      for (std::size_t t = 0; t < md; ++t) {
        Scalar v = Scalar::zero(m.field());
        for (std::size_t i = 0; i < n; ++i) {
          const Scalar& phi = functionals.basis().at(fr, i);
          if (!phi.is_zero() && !img[i * md + t].is_zero()) v += phi * img[i * md + t];
        }
        cond.at(fr * md + t, s) = v;
      }
  }
  return Subspace::from_rows(cond.kernel_basis());
}

std::size_t socle_multiplicity(const Comodule& m, const std::vector<Scalar>& grouplike) {
  // {x : rho(x) = g (x) x} is the isotypic part of the socle for pointed C
  std::size_t n = m.coalgebra()->dim(), md = m.dim();
  Matrix cond(m.field(), n * md, md);
  for (std::size_t s = 0; s < md; ++s) {
    std::vector<Scalar> e(md, Scalar::zero(m.field()));
    e[s] = Scalar::one(m.field());
    auto img = m.rho_of(e);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < md; ++t) {
        Scalar v = img[i * md + t];
        if (t == s) v -= grouplike[i];
        cond.at(i * md + t, s) = v;
      }
  }
  return cond.kernel_basis().rows();
}

DimensionVector dimension_vector(const Comodule& m) {
  auto gl = m.coalgebra()->grouplikes();
  if (!gl.pointed) throw input_error("dimension_vector: coalgebra is not pointed");
  DimensionVector dv;
  Comodule cur = m;
  while (cur.dim() > 0) {
    Subspace soc = socle(cur);
    if (soc.is_zero()) throw std::logic_error("dimension_vector: empty socle");
    std::size_t counted = 0;
    for (std::size_t g = 0; g < gl.elements.size(); ++g) {
      std::size_t mult = socle_multiplicity(cur, gl.elements[g]);
      if (mult) dv.entries[gl.labels[g]] += mult;
      counted += mult;
    }
    if (counted != soc.dim())
      throw std::logic_error("dimension_vector: socle is not a sum of grouplike simples");
    cur = quotient_comodule(cur, soc).comodule;
  }
  return dv;
}

std::vector<DecompPiece> decompose(const Comodule& m, const Budget& budget) {
  std::vector<DecompPiece> out;
  for (const auto& part : mat_decompose(as_matrep(m), budget))
    out.push_back(DecompPiece{restrict_to_subcomodule(m, part), part.basis().transpose()});
  // witness sanity: embeddings stack to a basis
  if (m.dim() > 0) {
    Matrix full(m.field(), m.dim(), m.dim());
    std::size_t col = 0;
    for (const auto& p : out)
      for (std::size_t c = 0; c < p.piece.dim(); ++c, ++col)
        for (std::size_t r = 0; r < m.dim(); ++r) full.at(r, col) = p.embedding.at(r, c);
    if (col != m.dim() || !full.invertible())
      throw std::logic_error("decompose: witness embeddings are not a basis");
  }
  return out;
}

bool is_indecomposable(const Comodule& m, const Budget& budget) {
  return m.dim() > 0 && mat_indecomposable(as_matrep(m), budget);
}

std::optional<Matrix> find_isomorphism(const Comodule& a, const Comodule& b,
                                       const Budget& budget) {
  if (!same_coalgebra(a, b)) return std::nullopt;
  return mat_isomorphism(as_matrep(a), as_matrep(b), budget);
}

RightComodule::RightComodule(CoalgebraPtr over, std::size_t dim,
                             std::vector<std::vector<RightRhoTerm>> rho)
    : over_(std::move(over)), dim_(dim), rho_(std::move(rho)) {
  if (rho_.size() != dim_) throw input_error("RightComodule: rho size mismatch");
  for (const auto& terms : rho_)
    for (const auto& t : terms)
      if (t.c_index >= over_->dim() || t.target >= dim_)
        throw input_error("RightComodule: rho index out of range");
}

RightComodule RightComodule::regular(CoalgebraPtr c) {
  std::vector<std::vector<RightRhoTerm>> rho(c->dim());
  for (std::size_t i = 0; i < c->dim(); ++i)
    for (const auto& t : c->delta()[i]) rho[i].push_back({t.j, t.k, t.coeff});
  return RightComodule(std::move(c), c->dim(), std::move(rho));
}

std::vector<Scalar> RightComodule::rho_of(const std::vector<Scalar>& v) const {
  std::size_t n = over_->dim(), m = dim_;
  std::vector<Scalar> out(m * n, Scalar::zero(over_->field()));
  for (std::size_t s = 0; s < m; ++s) {
    if (v[s].is_zero()) continue;
    for (const auto& t : rho_[s]) out[t.target * n + t.c_index] += v[s] * t.coeff;
  }
  return out;
}

CheckReport RightComodule::check() const {
  CheckReport rep;
  std::size_t n = over_->dim(), m = dim_;
  const auto& delta = over_->delta();
  Field f = over_->field();
  for (std::size_t s = 0; s < m; ++s) {
    // (rho (x) id) rho = (id (x) Delta) rho in M (x) D (x) D coordinates
    std::vector<Scalar> lhs(m * n * n, Scalar::zero(f));
    std::vector<Scalar> rhs(m * n * n, Scalar::zero(f));
    for (const auto& t : rho_[s]) {
      for (const auto& u : rho_[t.target])
        lhs[(u.target * n + u.c_index) * n + t.c_index] += t.coeff * u.coeff;
      for (const auto& u : delta[t.c_index])
        rhs[(t.target * n + u.j) * n + u.k] += t.coeff * u.coeff;
    }
    if (lhs != rhs) {
      rep.ok = false;
      rep.violations.push_back("right coaction coassociativity fails at x_" + std::to_string(s));
    }
    std::vector<Scalar> cu(m, Scalar::zero(f));
    for (const auto& t : rho_[s]) cu[t.target] += t.coeff * over_->counit()[t.c_index];
    for (std::size_t t = 0; t < m; ++t) {
      Scalar expect = t == s ? Scalar::one(f) : Scalar::zero(f);
      if (cu[t] != expect) {
        rep.ok = false;
        rep.violations.push_back("right counit law fails at x_" + std::to_string(s));
        break;
      }
    }
  }
  return rep;
}

bool Bicomodule::compatible() const {
  if (left.dim() != right.dim()) return false;
  std::size_t m = left.dim(), nc = left.coalgebra()->dim(), nd = right.coalgebra()->dim();
  Field f = left.field();
  // (lambda (x) id_D) rho_r == (id_C (x) rho_r) lambda in C (x) M (x) D
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<Scalar> lhs(nc * m * nd, Scalar::zero(f));
    std::vector<Scalar> rhs(nc * m * nd, Scalar::zero(f));
    for (const auto& t : right.rho()[s])
      for (const auto& u : left.rho()[t.target])
        lhs[(u.c_index * m + u.target) * nd + t.c_index] += t.coeff * u.coeff;
    for (const auto& u : left.rho()[s])
      for (const auto& t : right.rho()[u.target])
        rhs[(u.c_index * m + t.target) * nd + t.c_index] += u.coeff * t.coeff;
    if (lhs != rhs) return false;
  }
  return true;
}

Subspace cotensor(const RightComodule& m, const Comodule& n) {
  if (!(m.coalgebra() == n.coalgebra() || *m.coalgebra() == *n.coalgebra()))
    throw input_error("cotensor: different coalgebras");
  std::size_t md = m.dim(), nd = n.dim(), d = m.coalgebra()->dim();
  Field f = m.coalgebra()->field();
  // map M (x) N -> M (x) D (x) N: rho_M (x) id - id (x) rho_N
  Matrix cond(f, md * d * nd, md * nd);
  for (std::size_t s = 0; s < md; ++s)
    for (const auto& t : m.rho()[s])
      for (std::size_t u = 0; u < nd; ++u)
        cond.at((t.target * d + t.c_index) * nd + u, s * nd + u) += t.coeff;
  for (std::size_t u = 0; u < nd; ++u)
    for (const auto& t : n.rho()[u])
      for (std::size_t s = 0; s < md; ++s)
        cond.at((s * d + t.c_index) * nd + t.target, s * nd + u) -= t.coeff;
  return Subspace::from_rows(cond.kernel_basis());
}

Comodule cotensor_left(const Bicomodule& m, const Comodule& n) {
  if (!m.compatible()) throw input_error("cotensor_left: incompatible bicomodule");
  Subspace w = cotensor(m.right, n);
  std::size_t md = m.left.dim(), nd = n.dim(), nc = m.left.coalgebra()->dim();
  Field f = m.left.field();
  Matrix basis_t = w.basis().transpose();
  std::vector<std::vector<RhoTerm>> rho(w.dim());
  for (std::size_t s = 0; s < w.dim(); ++s) {
    auto row = w.basis().row(s);  // in M (x) N coordinates
    // apply lambda (x) id_N
    std::vector<Scalar> img(nc * md * nd, Scalar::zero(f));
    for (std::size_t a = 0; a < md; ++a)
      for (std::size_t u = 0; u < nd; ++u) {
        const Scalar& c = row[a * nd + u];
        if (c.is_zero()) continue;
        for (const auto& t : m.left.rho()[a])
          img[(t.c_index * md + t.target) * nd + u] += c * t.coeff;
      }
    for (std::size_t i = 0; i < nc; ++i) {
      std::vector<Scalar> comp(md * nd, Scalar::zero(f));
      bool nz = false;
      for (std::size_t k = 0; k < md * nd; ++k) {
        comp[k] = img[i * md * nd + k];
        nz = nz || !comp[k].is_zero();
      }
      if (!nz) continue;
      std::vector<Scalar> coords;
      if (!basis_t.solve(comp, coords))
        throw std::logic_error("cotensor_left: induced coaction escapes the cotensor");
      for (std::size_t t = 0; t < w.dim(); ++t)
        if (!coords[t].is_zero()) rho[s].push_back({i, t, coords[t]});
    }
  }
  return Comodule(m.left.coalgebra(), w.dim(), std::move(rho));
}

std::vector<Subspace> all_subcomodules(const Comodule& m, const Budget& budget) {
  if (!m.field().is_prime()) throw input_error("all_subcomodules: needs GF(p)");
  auto gl = m.coalgebra()->grouplikes();
  if (!gl.pointed) throw input_error("all_subcomodules: coalgebra is not pointed");
  Field f = m.field();
  std::uint64_t p = f.p;
  std::map<std::string, Subspace> seen;
  auto key_of = [&](const Subspace& s) {
    std::string k = std::to_string(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (std::size_t c = 0; c < s.ambient(); ++c) k += "," + s.basis().at(r, c).to_string();
    return k;
  };
  std::vector<Subspace> frontier{Subspace(f, m.dim())};
  seen.emplace(key_of(frontier[0]), frontier[0]);
  std::uint64_t work = 0;
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const Subspace& x : frontier) {
      if (x.dim() == m.dim()) continue;
      auto q = quotient_comodule(m, x);
      // section of the projection for pulling socle lines back
      Matrix sect(f, m.dim(), q.comodule.dim());
      for (std::size_t c = 0; c < q.comodule.dim(); ++c) {
        std::vector<Scalar> e(q.comodule.dim(), Scalar::zero(f));
        e[c] = Scalar::one(f);
        std::vector<Scalar> lift;
        if (!q.projection.solve(e, lift))
          throw std::logic_error("all_subcomodules: projection not onto");
        for (std::size_t r2 = 0; r2 < m.dim(); ++r2) sect.at(r2, c) = lift[r2];
      }
      for (const auto& g : gl.elements) {
        // isotypic part of socle(Q) at g
        std::size_t qd = q.comodule.dim();
        Matrix cond(f, m.coalgebra()->dim() * qd, qd);
        for (std::size_t s2 = 0; s2 < qd; ++s2) {
          std::vector<Scalar> e(qd, Scalar::zero(f));
          e[s2] = Scalar::one(f);
          auto img = q.comodule.rho_of(e);
          for (std::size_t i = 0; i < m.coalgebra()->dim(); ++i)
            for (std::size_t t = 0; t < qd; ++t) {
              Scalar v = img[i * qd + t];
              if (t == s2) v -= g[i];
              cond.at(i * qd + t, s2) = v;
            }
        }
        Matrix iso_part = cond.kernel_basis();
        std::size_t k = iso_part.rows();
        if (k == 0) continue;
        // all lines of the isotypic component: projective normal forms
        std::uint64_t lines = 0;
        for (std::size_t i = 0; i < k; ++i) lines = lines * p + 1;
        work += lines;
        if (work > budget.work) throw budget_error("all_subcomodules: budget exceeded");
        for (std::size_t lead = 0; lead < k; ++lead) {
          std::uint64_t count = 1;
          for (std::size_t i = lead + 1; i < k; ++i) count *= p;
          for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<Scalar> coeff(k, Scalar::zero(f));
            coeff[lead] = Scalar::one(f);
            std::uint64_t cc = code;
            for (std::size_t i = lead + 1; i < k; ++i) {
              coeff[i] = Scalar::residue(f, cc % p);
              cc /= p;
            }
            std::vector<Scalar> line(qd, Scalar::zero(f));
            for (std::size_t i = 0; i < k; ++i)
              for (std::size_t t = 0; t < qd; ++t) line[t] += coeff[i] * iso_part.at(i, t);
            auto lifted = sect.apply(line);
            std::vector<std::vector<Scalar>> rows;
            for (std::size_t r2 = 0; r2 < x.dim(); ++r2) rows.push_back(x.basis().row(r2));
            rows.push_back(std::move(lifted));
            Subspace bigger = Subspace::from_vectors(f, m.dim(), rows);
            auto key = key_of(bigger);
            if (seen.emplace(key, bigger).second) next.push_back(bigger);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subspace> out;
  for (auto& [k, s] : seen) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    return a.dim() < b.dim();
  });
  return out;
}

std::vector<ShortExactTriple> short_exact_triples(const Comodule& m, const Budget& budget) {
  std::vector<Subspace> candidates;
  if (m.field().is_prime()) {
    bool pointed = true;
    try {
      candidates = all_subcomodules(m, budget);
    } catch (const input_error&) {
      pointed = false;
    }
    if (!pointed) candidates = enumerate_subspaces(m.field(), m.dim(), m.dim(), budget);
  } else {
    // finite lattice generated by socle-series refinements
    std::vector<Subspace> gens;
    gens.emplace_back(m.field(), m.dim());
    gens.push_back(Subspace::full(m.field(), m.dim()));
    Comodule cur = m;
    Matrix lift = Matrix::identity(m.field(), m.dim());
    Subspace acc(m.field(), m.dim());
    while (cur.dim() > 0) {
      Subspace soc = socle(cur);
      if (soc.is_zero()) break;
      // pull back to M coordinates: acc + lift(soc)
      std::vector<std::vector<Scalar>> rows;
      for (std::size_t r = 0; r < acc.dim(); ++r) rows.push_back(acc.basis().row(r));
      for (std::size_t r = 0; r < soc.dim(); ++r)
        rows.push_back(lift.apply(soc.basis().row(r)));
      acc = Subspace::from_vectors(m.field(), m.dim(), rows);
      gens.push_back(acc);
      // isotypic refinements of this socle layer
      try {
        auto gl = m.coalgebra()->grouplikes();
        for (const auto& g : gl.elements) {
          std::vector<std::vector<Scalar>> rows2;
          for (std::size_t r = 0; r < acc.dim(); ++r) rows2.push_back(acc.basis().row(r));
          // isotypic part of socle(cur) at g, pulled back
          std::size_t nd2 = cur.dim();
          Matrix cond(m.field(), m.coalgebra()->dim() * nd2, nd2);
          for (std::size_t s = 0; s < nd2; ++s) {
            std::vector<Scalar> e(nd2, Scalar::zero(m.field()));
            e[s] = Scalar::one(m.field());
            auto img = cur.rho_of(e);
            for (std::size_t i = 0; i < m.coalgebra()->dim(); ++i)
              for (std::size_t t = 0; t < nd2; ++t) {
                Scalar v = img[i * nd2 + t];
                if (t == s) v -= g[i];
                cond.at(i * nd2 + t, s) = v;
              }
          }
          Matrix iso_part = cond.kernel_basis();
          for (std::size_t r = 0; r < iso_part.rows(); ++r)
            rows2.push_back(lift.apply(iso_part.row(r)));
          gens.push_back(Subspace::from_vectors(m.field(), m.dim(), rows2));
        }
      } catch (const undecided_error&) {
        // non-pointed Q-mode: keep the plain socle series
      }
      auto q = quotient_comodule(cur, soc);
      // new lift: sections of the projection composed with the old lift
      Matrix sect(m.field(), cur.dim(), q.comodule.dim());
      // projection has full row rank; pick the pseudo-section via solve
      for (std::size_t c = 0; c < q.comodule.dim(); ++c) {
        std::vector<Scalar> e(q.comodule.dim(), Scalar::zero(m.field()));
        e[c] = Scalar::one(m.field());
        std::vector<Scalar> x;
        if (!q.projection.solve(e, x)) throw std::logic_error("triples: projection not onto");
        for (std::size_t r2 = 0; r2 < cur.dim(); ++r2) sect.at(r2, c) = x[r2];
      }
      lift = lift * sect;
      cur = q.comodule;
    }
    // closure under sum and intersection
    std::vector<Subspace> closure = gens;
    bool grew = true;
    std::size_t rounds = 0;
    while (grew && rounds++ < 4) {
      grew = false;
      std::size_t sz = closure.size();
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i + 1; j < sz; ++j) {
          for (Subspace s : {Subspace::sum(closure[i], closure[j]),
                             Subspace::intersect(closure[i], closure[j])}) {
            bool present = false;
            for (const auto& t : closure) present = present || t == s;
            if (!present) {
              closure.push_back(s);
              grew = true;
            }
          }
        }
    }
    candidates = std::move(closure);
  }
  std::vector<Subspace> unique;
  for (const auto& x : candidates) {
    bool seen = false;
    for (const auto& u : unique) seen = seen || u == x;
    if (!seen) unique.push_back(x);
  }
  std::vector<ShortExactTriple> out;
  for (const auto& x : unique) {
    if (!is_subcomodule(m, x)) continue;
    Comodule sub = restrict_to_subcomodule(m, x);
    auto quot = quotient_comodule(m, x);
    out.push_back(ShortExactTriple{x, std::move(sub), std::move(quot.comodule),
                                   x.basis().transpose(), std::move(quot.projection)});
  }
  return out;
}

}  // namespace coalglab
