#include "coalglab/algebra.hpp"

#include <algorithm>

namespace coalglab {

StructureAlgebra::StructureAlgebra(Field f, std::size_t dim)
    : field_(f),
      dim_(dim),
      table_(dim * dim, std::vector<Scalar>(dim, Scalar::zero(f))),
      unit_(dim, Scalar::zero(f)) {}

void StructureAlgebra::set_product(std::size_t i, std::size_t j, std::vector<Scalar> coords) {
  table_[i * dim_ + j] = std::move(coords);
}

void StructureAlgebra::set_unit(std::vector<Scalar> coords) { unit_ = std::move(coords); }

const std::vector<Scalar>& StructureAlgebra::basis_product(std::size_t i, std::size_t j) const {
  return table_[i * dim_ + j];
}

std::vector<Scalar> StructureAlgebra::multiply(const std::vector<Scalar>& a,
                                               const std::vector<Scalar>& b) const {
  std::vector<Scalar> r(dim_, Scalar::zero(field_));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const auto& prod = table_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!prod[k].is_zero()) r[k] += c * prod[k];
    }
  }
  return r;
}

Matrix StructureAlgebra::left_mult_matrix(const std::vector<Scalar>& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    std::vector<Scalar> ej(dim_, Scalar::zero(field_));
    ej[j] = Scalar::one(field_);
    auto col = multiply(a, ej);
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool StructureAlgebra::check_associative_unital() const {
  std::vector<std::vector<Scalar>> basis(dim_, std::vector<Scalar>(dim_, Scalar::zero(field_)));
  for (std::size_t i = 0; i < dim_; ++i) basis[i][i] = Scalar::one(field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (multiply(unit_, basis[i]) != basis[i]) return false;
    if (multiply(basis[i], unit_) != basis[i]) return false;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        auto ab_c = multiply(basis_product(i, j), basis[k]);
        auto a_bc = multiply(basis[i], basis_product(j, k));
        if (ab_c != a_bc) return false;
      }
  }
  return true;
}

bool StructureAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

Subspace StructureAlgebra::radical_char0() const {
  // Dickson: rad(A) = kernel of the trace form tau(x, y) = tr(L_{xy}).
  Matrix gram(field_, dim_, dim_);
  std::vector<Matrix> lm;
  lm.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<Scalar> ei(dim_, Scalar::zero(field_));
    ei[i] = Scalar::one(field_);
    lm.push_back(left_mult_matrix(ei));
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) gram.at(i, j) = (lm[i] * lm[j]).trace();
  return Subspace::from_rows(gram.kernel_basis());
}

Subspace StructureAlgebra::radical_charp() const {
  // Ivanyos-Ronyai chain over the prime field: starting from the trace
  // condition, refine with characteristic-polynomial coefficient maps
  // z -> c_{n - p^i}(L_z), which are additive on each stage.
  std::size_t n = dim_;
  std::uint64_t p = field_.p;
  Subspace stage = Subspace::full(field_, n);
  std::vector<std::uint64_t> powers;
  for (std::uint64_t q = 1; q <= n; q *= p) {
    powers.push_back(q);
    if (q > n / p) break;
  }
  for (std::uint64_t q : powers) {
    if (stage.is_zero()) break;
    std::size_t sd = stage.dim();
    // condition matrix: rows (y over stage basis), cols (x in stage coords)
    Matrix cond(field_, sd, sd);
    for (std::size_t yi = 0; yi < sd; ++yi) {
      auto y = stage.basis().row(yi);
      for (std::size_t xi = 0; xi < sd; ++xi) {
        auto x = stage.basis().row(xi);
        auto xy = multiply(x, y);
        Poly cp = characteristic_polynomial(left_mult_matrix(xy));
        cond.at(yi, xi) = cp.coeff(n - static_cast<std::size_t>(q));
      }
    }
    Matrix ker = cond.kernel_basis();  // coordinates within stage
    Matrix rows = ker * stage.basis();
    stage = Subspace::from_rows(rows);
  }
  return stage;
}

Subspace StructureAlgebra::radical() const {
  Subspace j = field_.is_rational() ? radical_char0() : radical_charp();
  if (!subspace_is_nilpotent(j))
    throw std::logic_error("StructureAlgebra: computed radical is not nilpotent");
  return j;
}

bool StructureAlgebra::subspace_is_nilpotent(const Subspace& s, std::size_t max_steps) const {
  if (max_steps == 0) max_steps = dim_ + 1;
  Subspace power = s;
  for (std::size_t step = 0; step < max_steps; ++step) {
    if (power.is_zero()) return true;
    power = subspace_product(power, s);
  }
  return power.is_zero();
}

Subspace StructureAlgebra::subspace_product(const Subspace& a, const Subspace& b) const {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      rows.push_back(multiply(a.basis().row(i), b.basis().row(j)));
  return Subspace::from_vectors(field_, dim_, rows);
}

Subspace StructureAlgebra::ideal_closure(Subspace s) const {
  Subspace whole = Subspace::full(field_, dim_);
  for (;;) {
    Subspace next = Subspace::sum(
        s, Subspace::sum(subspace_product(whole, s), subspace_product(s, whole)));
    if (next == s) return s;
    s = next;
  }
}

AlgebraQuotient StructureAlgebra::quotient_by_ideal(const Subspace& ideal) const {
  // complement coordinates: non-pivot columns of the ideal basis
  std::vector<bool> is_pivot(dim_, false);
  {
    auto rr = ideal.basis().rref();
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
  }
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < dim_; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  std::size_t qd = comp.size();
  // projection: reduce modulo ideal, then read complement coordinates
  Matrix proj(field_, qd, dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    std::vector<Scalar> e(dim_, Scalar::zero(field_));
    e[c] = Scalar::one(field_);
    auto red = ideal.reduce(e);
    for (std::size_t r = 0; r < qd; ++r) proj.at(r, c) = red[comp[r]];
  }
  StructureAlgebra q(field_, qd);
  auto project = [&](const std::vector<Scalar>& v) {
    return proj.apply(v);
  };
  std::vector<std::vector<Scalar>> lifted(qd, std::vector<Scalar>(dim_, Scalar::zero(field_)));
  for (std::size_t r = 0; r < qd; ++r) lifted[r][comp[r]] = Scalar::one(field_);
  for (std::size_t i = 0; i < qd; ++i)
    for (std::size_t j = 0; j < qd; ++j)
      q.set_product(i, j, project(multiply(lifted[i], lifted[j])));
  q.set_unit(project(unit_));
  return AlgebraQuotient{std::move(q), std::move(proj)};
}

std::vector<std::vector<Scalar>> StructureAlgebra::characters() const {
  // characters factor through the commutative quotient
  std::vector<std::vector<Scalar>> commutators;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      auto ab = basis_product(i, j);
      auto ba = basis_product(j, i);
      std::vector<Scalar> d(dim_, Scalar::zero(field_));
      bool nz = false;
      for (std::size_t k = 0; k < dim_; ++k) {
        d[k] = ab[k] - ba[k];
        nz = nz || !d[k].is_zero();
      }
      if (nz) commutators.push_back(std::move(d));
    }
  Subspace comm_ideal = ideal_closure(Subspace::from_vectors(field_, dim_, commutators));
  AlgebraQuotient q = quotient_by_ideal(comm_ideal);

  // split the commutative quotient into local pieces; a piece contributes a
  // character exactly when every generator has a linear-primary minimal
  // polynomial on it.
  std::vector<std::vector<Scalar>> chars;
  struct Piece {
    StructureAlgebra alg;
    Matrix proj;  // piece-coords x dim_ (composed projection from A)
  };
  std::vector<Piece> work;
  work.push_back(Piece{q.algebra, q.projection});
  while (!work.empty()) {
    Piece piece = std::move(work.back());
    work.pop_back();
    std::size_t d = piece.alg.dim();
    if (d == 0) continue;
    bool split_done = false;
    for (std::size_t g = 0; g < d && !split_done; ++g) {
      std::vector<Scalar> e(d, Scalar::zero(field_));
      e[g] = Scalar::one(field_);
      Matrix lx = piece.alg.left_mult_matrix(e);
      auto factors = factor_poly(minimal_polynomial(lx));
      if (factors.size() < 2) continue;
      // CRT split along generalized kernels of the factors
      for (const auto& [f, mult] : factors) {
        Poly fm = f;
        for (std::size_t m = 1; m < mult; ++m) fm = fm * f;
        Matrix ker = fm.eval(lx).kernel_basis();  // ideal of the piece
        // the kernel is a unital subalgebra-with-own-unit (an ideal direct
        // summand); build its algebra structure by restriction
        Subspace sub = Subspace::from_rows(ker);
        std::size_t sd = sub.dim();
        StructureAlgebra part(field_, sd);
        Matrix basis_t = sub.basis().transpose();
        auto to_part = [&](const std::vector<Scalar>& v) {
          std::vector<Scalar> x;
          if (!basis_t.solve(v, x))
            throw std::logic_error("characters: split piece not closed");
          return x;
        };
        for (std::size_t i = 0; i < sd; ++i)
          for (std::size_t j = 0; j < sd; ++j)
            part.set_product(
                i, j, to_part(piece.alg.multiply(sub.basis().row(i), sub.basis().row(j))));
        // unit of the summand: component of the piece unit in this summand
        // solve: unit = u_part + u_rest with u_part in sub, u_rest in the
        // complementary generalized kernel; use projection via CRT idempotent
        // -- compute by solving linear system on the direct sum
        // complement = kernel of prod of the other factors
        Poly others(field_, {Scalar::one(field_)});
        for (const auto& [f2, mult2] : factors) {
          if (f2 == f) continue;
          for (std::size_t m = 0; m < mult2; ++m) others = others * f2;
        }
        Matrix ker2 = others.eval(lx).kernel_basis();
        Matrix stacked = Matrix::vstack(sub.basis(), ker2).transpose();
        std::vector<Scalar> coords;
        if (!stacked.solve(piece.alg.unit(), coords))
          throw std::logic_error("characters: unit does not split");
        std::vector<Scalar> upart(d, Scalar::zero(field_));
        for (std::size_t r = 0; r < sd; ++r)
          for (std::size_t c = 0; c < d; ++c)
            upart[c] += coords[r] * sub.basis().at(r, c);
        part.set_unit(to_part(upart));
        // composed projection: x -> coords of (component of x) in part basis.
        // component map: via CRT idempotent u_part: x_part = x * u_part
        Matrix comp_proj(field_, sd, dim_);
        for (std::size_t c = 0; c < dim_; ++c) {
          std::vector<Scalar> col(piece.proj.rows(), Scalar::zero(field_));
          for (std::size_t r = 0; r < piece.proj.rows(); ++r) col[r] = piece.proj.at(r, c);
          auto xp = piece.alg.multiply(col, upart);
          auto pc = to_part(xp);
          for (std::size_t r = 0; r < sd; ++r) comp_proj.at(r, c) = pc[r];
        }
        work.push_back(Piece{std::move(part), std::move(comp_proj)});
      }
      split_done = true;
    }
    if (split_done) continue;
    // local commutative piece: every generator has primary minimal polynomial
    bool ok = true;
    std::vector<Scalar> values(d, Scalar::zero(field_));
    for (std::size_t g = 0; g < d && ok; ++g) {
      std::vector<Scalar> e(d, Scalar::zero(field_));
      e[g] = Scalar::one(field_);
      auto factors = factor_poly(minimal_polynomial(piece.alg.left_mult_matrix(e)));
      if (factors.size() != 1 || factors[0].first.degree() != 1) {
        ok = false;  // residue field is a proper extension: no character here
        break;
      }
      values[g] = -factors[0].first.coeff(0);  // the root
    }
    if (!ok) continue;
    // candidate character on the piece; verify multiplicativity, then pull back
    bool valid = true;
    for (std::size_t i = 0; i < d && valid; ++i)
      for (std::size_t j = 0; j < d && valid; ++j) {
        Scalar lhs = Scalar::zero(field_);
        const auto& prod = piece.alg.basis_product(i, j);
        for (std::size_t k = 0; k < d; ++k) lhs += prod[k] * values[k];
        if (lhs != values[i] * values[j]) valid = false;
      }
    {
      Scalar u = Scalar::zero(field_);
      for (std::size_t k = 0; k < d; ++k) u += piece.alg.unit()[k] * values[k];
      if (!u.is_one()) valid = false;
    }
    if (!valid) continue;
    std::vector<Scalar> chi(dim_, Scalar::zero(field_));
    for (std::size_t c = 0; c < dim_; ++c)
      for (std::size_t r = 0; r < d; ++r) chi[c] += piece.proj.at(r, c) * values[r];
    chars.push_back(std::move(chi));
  }
  // deterministic order
  std::sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  return chars;
}

}  // namespace coalglab
