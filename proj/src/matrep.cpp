#include "coalglab/matrep.hpp"

#include <algorithm>

#include "coalglab/subspace.hpp"

namespace coalglab {

std::vector<Matrix> mat_hom(const MatRep& a, const MatRep& b) {
  if (a.field != b.field || a.ops.size() != b.ops.size())
    throw input_error("mat_hom: incompatible representations");
  std::size_t md = a.dim, nd = b.dim, no = a.ops.size();
  Matrix cond(a.field, no * nd * md, nd * md);
  for (std::size_t i = 0; i < no; ++i)
    for (std::size_t r = 0; r < nd; ++r)
      for (std::size_t c = 0; c < md; ++c) {
        std::size_t row = (i * nd + r) * md + c;
        for (std::size_t k = 0; k < nd; ++k)
          if (!b.ops[i].at(r, k).is_zero()) cond.at(row, k * md + c) += b.ops[i].at(r, k);
        for (std::size_t k = 0; k < md; ++k)
          if (!a.ops[i].at(k, c).is_zero()) cond.at(row, r * md + k) -= a.ops[i].at(k, c);
      }
  Matrix ker = cond.kernel_basis();
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Matrix f(a.field, nd, md);
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t j = 0; j < md; ++j) f.at(i, j) = ker.at(r, i * md + j);
    out.push_back(std::move(f));
  }
  return out;
}

MatEnd mat_end(const MatRep& m) {
  auto basis = mat_hom(m, m);
  std::size_t r = basis.size(), d = m.dim;
  Matrix flat(m.field, r, d * d);
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) flat.at(b, i * d + j) = basis[b].at(i, j);
  Matrix flat_t = flat.transpose();
  StructureAlgebra alg(m.field, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Matrix prod = basis[i] * basis[j];
      std::vector<Scalar> v(d * d, Scalar::zero(m.field));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) v[a * d + b] = prod.at(a, b);
      std::vector<Scalar> coords;
      if (!flat_t.solve(v, coords))
        throw std::logic_error("mat_end: composition escaped the hom space");
      alg.set_product(i, j, std::move(coords));
    }
  {
    std::vector<Scalar> v(d * d, Scalar::zero(m.field));
    for (std::size_t a = 0; a < d; ++a) v[a * d + a] = Scalar::one(m.field);
    std::vector<Scalar> coords;
    if (d > 0 && !flat_t.solve(v, coords))
      throw std::logic_error("mat_end: identity not in hom space");
    if (d == 0) coords.assign(r, Scalar::zero(m.field));
    alg.set_unit(std::move(coords));
  }
  Subspace rad = r == 0 ? Subspace(m.field, 0) : alg.radical();
  return MatEnd{std::move(basis), std::move(alg), std::move(rad)};
}

bool subspace_stable(const MatRep& m, const Subspace& x) {
  for (const auto& a : m.ops)
    for (std::size_t r = 0; r < x.dim(); ++r)
      if (!x.contains(a.apply(x.basis().row(r)))) return false;
  return true;
}

MatRep mat_restrict(const MatRep& m, const Subspace& x) {
  Matrix basis_t = x.basis().transpose();
  MatRep out{m.field, x.dim(), {}};
  for (const auto& a : m.ops) {
    Matrix ra(m.field, x.dim(), x.dim());
    for (std::size_t r = 0; r < x.dim(); ++r) {
      auto img = a.apply(x.basis().row(r));
      std::vector<Scalar> coords;
      if (!basis_t.solve(img, coords))
        throw input_error("mat_restrict: subspace is not stable");
      for (std::size_t t = 0; t < x.dim(); ++t) ra.at(t, r) = coords[t];
    }
    out.ops.push_back(std::move(ra));
  }
  return out;
}

namespace {

std::optional<std::vector<Subspace>> try_fitting_split(const MatRep& m, const Matrix& phi) {
  std::vector<std::pair<Poly, std::size_t>> fac;
  try {
    fac = minpoly_factors(phi);
  } catch (const undecided_error&) {
    return std::nullopt;
  }
  if (fac.size() < 2) return std::nullopt;
  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (const auto& [f, mult] : fac) {
    Poly fm(f.field(), {Scalar::one(f.field())});
    for (std::size_t i = 0; i < mult; ++i) fm = fm * f;
    Subspace ker = Subspace::from_rows(fm.eval(phi).kernel_basis());
    total += ker.dim();
    parts.push_back(std::move(ker));
  }
  if (total != m.dim) throw std::logic_error("fitting split: dimensions do not add up");
  return parts;
}

Matrix frobenius_matrix(const StructureAlgebra& alg) {
  std::size_t d = alg.dim();
  Field f = alg.field();
  Matrix fr(f, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Scalar> x(d, Scalar::zero(f));
    x[j] = Scalar::one(f);
    std::uint64_t e = f.p;
    std::vector<Scalar> acc = alg.unit();
    std::vector<Scalar> sq = x;
    while (e) {
      if (e & 1) acc = alg.multiply(acc, sq);
      e >>= 1;
      if (e) sq = alg.multiply(sq, sq);
    }
    for (std::size_t i = 0; i < d; ++i) fr.at(i, j) = acc[i];
  }
  return fr;
}

Matrix lift_to_end(const MatEnd& end, const Matrix& quot_proj, const std::vector<Scalar>& u,
                   Field f, std::size_t dim) {
  std::vector<Scalar> coords;
  if (!quot_proj.solve(u, coords)) throw std::logic_error("mat_decompose: lift failed");
  Matrix phi(f, dim, dim);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) phi = phi + end.basis[i] * coords[i];
  return phi;
}

// embed a subspace of a subspace back into the ambient coordinates
Subspace compose_subspace(const Subspace& outer, const Subspace& inner) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < inner.dim(); ++r) {
    std::vector<Scalar> v(outer.ambient(), Scalar::zero(outer.field()));
    for (std::size_t c = 0; c < inner.ambient(); ++c) {
      const Scalar& s = inner.basis().at(r, c);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < outer.ambient(); ++j) v[j] += s * outer.basis().at(c, j);
    }
    rows.push_back(std::move(v));
  }
  return Subspace::from_vectors(outer.field(), outer.ambient(), rows);
}

void mat_decompose_impl(const MatRep& m, const Subspace& where, const Budget& budget,
                        std::vector<Subspace>& out) {
  if (m.dim == 0) return;
  MatEnd end = mat_end(m);
  auto recurse_on = [&](const std::vector<Subspace>& parts) {
    for (const auto& part : parts)
      mat_decompose_impl(mat_restrict(m, part), compose_subspace(where, part), budget, out);
  };
  if (end.basis.size() > 1) {
    std::vector<Matrix> battery = end.basis;
    for (std::size_t i = 0; i < end.basis.size(); ++i)
      for (std::size_t j = i + 1; j < end.basis.size(); ++j)
        battery.push_back(end.basis[i] + end.basis[j]);
    for (const auto& phi : battery) {
      auto split = try_fitting_split(m, phi);
      if (split) {
        recurse_on(*split);
        return;
      }
    }
    AlgebraQuotient quot = end.algebra.quotient_by_ideal(end.radical);
    const StructureAlgebra& b = quot.algebra;
    if (b.dim() > 1) {
      if (m.field.is_prime()) {
        if (b.is_commutative()) {
          Matrix fr = frobenius_matrix(b);
          Matrix fixed = (fr - Matrix::identity(m.field, b.dim())).kernel_basis();
          if (fixed.rows() == 1) {
            out.push_back(where);  // End/J is a finite field: indecomposable
            return;
          }
          for (std::size_t r = 0; r < fixed.rows(); ++r) {
            auto split = try_fitting_split(
                m, lift_to_end(end, quot.projection, fixed.row(r), m.field, m.dim));
            if (split) {
              recurse_on(*split);
              return;
            }
          }
          for (std::size_t r = 0; r < fixed.rows(); ++r)
            for (std::size_t r2 = r + 1; r2 < fixed.rows(); ++r2) {
              std::vector<Scalar> u(b.dim(), Scalar::zero(m.field));
              for (std::size_t c = 0; c < b.dim(); ++c)
                u[c] = fixed.at(r, c) + fixed.at(r2, c);
              auto split =
                  try_fitting_split(m, lift_to_end(end, quot.projection, u, m.field, m.dim));
              if (split) {
                recurse_on(*split);
                return;
              }
            }
          throw std::logic_error("mat_decompose: GF(p) fixed space yielded no splitter");
        }
        // noncommutative End/J over GF(p): exhaustive splitter scan
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < end.basis.size(); ++i) {
          total *= m.field.p;
          if (total > budget.work)
            throw budget_error("mat_decompose: splitter scan budget exceeded");
        }
        for (std::uint64_t code = 1; code < total; ++code) {
          std::uint64_t cc = code;
          Matrix phi(m.field, m.dim, m.dim);
          for (const auto& bmat : end.basis) {
            phi = phi + bmat * Scalar::residue(m.field, cc % m.field.p);
            cc /= m.field.p;
          }
          auto split = try_fitting_split(m, phi);
          if (split) {
            recurse_on(*split);
            return;
          }
        }
        throw std::logic_error("mat_decompose: exhaustive scan found no splitter");
      }
      if (b.is_commutative()) {
        DetRng rng(budget.seed + 17);
        for (int attempt = 0; attempt < 24; ++attempt) {
          std::vector<Scalar> u(b.dim(), Scalar::zero(m.field));
          for (std::size_t c = 0; c < b.dim(); ++c)
            u[c] = Scalar::of_int(m.field,
                                  static_cast<long long>(rng.next() % (3 + attempt)) - 1);
          Poly mp = minimal_polynomial(b.left_mult_matrix(u));
          if (mp.degree() != b.dim()) continue;
          auto fac = factor_poly(mp);
          if (fac.size() == 1 && fac[0].second == 1) {
            out.push_back(where);  // End/J is a field
            return;
          }
          if (fac.size() >= 2) {
            auto split =
                try_fitting_split(m, lift_to_end(end, quot.projection, u, m.field, m.dim));
            if (split) {
              recurse_on(*split);
              return;
            }
          }
        }
        throw undecided_error("mat_decompose: no primitive element found over Q");
      }
      throw undecided_error("mat_decompose: End/J noncommutative over Q; possibly a division algebra");
    }
  }
  out.push_back(where);
}

}  // namespace

std::vector<Subspace> mat_decompose(const MatRep& m, const Budget& budget) {
  std::vector<Subspace> out;
  mat_decompose_impl(m, Subspace::full(m.field, m.dim), budget, out);
  std::size_t total = 0;
  for (const auto& s : out) total += s.dim();
  if (total != m.dim) throw std::logic_error("mat_decompose: pieces do not fill the space");
  return out;
}

bool mat_indecomposable(const MatRep& m, const Budget& budget) {
  return m.dim > 0 && mat_decompose(m, budget).size() == 1;
}

namespace {

bool try_invertible_combo(const std::vector<Matrix>& homs, const std::vector<Scalar>& coeffs,
                          Matrix& result) {
  Matrix f(homs[0].field(), homs[0].rows(), homs[0].cols());
  for (std::size_t i = 0; i < homs.size(); ++i)
    if (!coeffs[i].is_zero()) f = f + homs[i] * coeffs[i];
  if (f.rows() == f.cols() && f.invertible()) {
    result = f;
    return true;
  }
  return false;
}

}  // namespace

namespace {
std::optional<Matrix> mat_isomorphism_match_impl(const MatRep& a, const MatRep& b,
                                                 const std::vector<Subspace>& da,
                                                 const std::vector<Subspace>& db,
                                                 const Budget& budget);
}  // namespace

std::optional<Matrix> mat_isomorphism(const MatRep& a, const MatRep& b, const Budget& budget) {
  if (a.dim != b.dim) return std::nullopt;
  if (a.dim == 0) return Matrix(a.field, 0, 0);
  auto homs = mat_hom(a, b);
  if (homs.empty()) return std::nullopt;
  std::size_t r = homs.size();
  Matrix result(a.field, 0, 0);
  for (const auto& h : homs)
    if (h.invertible()) return h;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (try_invertible_combo({homs[i], homs[j]},
                               {Scalar::one(a.field), Scalar::one(a.field)}, result))
        return result;
  auto homs_back = mat_hom(b, a);
  if (homs_back.empty()) return std::nullopt;
  // small complete scan: all GF(p) combinations, or the determinant-polynomial
  // grid over Q (degree <= dim per variable)
  std::uint64_t side = a.field.is_prime() ? a.field.p : a.dim + 1;
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < r; ++i) {
    total *= side;
    if (total > 4096 || total > budget.work) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive) {
    std::vector<Scalar> coeffs(r, Scalar::zero(a.field));
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t cc = code;
      for (std::size_t i = 0; i < r; ++i) {
        coeffs[i] = a.field.is_prime()
                        ? Scalar::residue(a.field, cc % side)
                        : Scalar::of_int(a.field, static_cast<long long>(cc % side));
        cc /= side;
      }
      if (try_invertible_combo(homs, coeffs, result)) return result;
    }
    return std::nullopt;
  }
  // decompose and match
  auto da_parts = mat_decompose(a, budget);
  auto db_parts = mat_decompose(b, budget);
  if (da_parts.size() == 1 && db_parts.size() == 1) {
    // both indecomposable: endomorphism rings are local, so the objects are
    // isomorphic exactly when some product g*f of hom-basis elements is
    // invertible (an invertible gf makes f a monomorphism between equal
    // dimensions; conversely an iso phi = sum c_j f_j with inverse sum d_i g_i
    // forces some g_i f_j outside the radical)
    for (const auto& g : homs_back)
      for (const auto& f : homs)
        if ((g * f).invertible()) return f;
    return std::nullopt;
  }
  return mat_isomorphism_match_impl(a, b, da_parts, db_parts, budget);
}


std::optional<Matrix> mat_isomorphism_indec(const MatRep& a, const MatRep& b) {
  if (a.dim != b.dim) return std::nullopt;
  if (a.dim == 0) return Matrix(a.field, 0, 0);
  auto homs = mat_hom(a, b);
  if (homs.empty()) return std::nullopt;
  auto homs_back = mat_hom(b, a);
  for (const auto& g : homs_back)
    for (const auto& f : homs)
      if ((g * f).invertible()) return f;
  return std::nullopt;
}

namespace {

std::optional<Matrix> mat_isomorphism_match_impl(const MatRep& a, const MatRep& b,
                                                 const std::vector<Subspace>& da,
                                                 const std::vector<Subspace>& db,
                                                 const Budget& budget) {
  if (da.size() != db.size()) return std::nullopt;
  std::vector<bool> used(db.size(), false);
  std::vector<std::size_t> match(da.size());
  std::vector<Matrix> piece_iso;
  for (std::size_t i = 0; i < da.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < db.size() && !found; ++j) {
      if (used[j]) continue;
      auto iso = mat_isomorphism(mat_restrict(a, da[i]), mat_restrict(b, db[j]), budget);
      if (iso) {
        used[j] = true;
        match[i] = j;
        piece_iso.push_back(*iso);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  Matrix ea(a.field, a.dim, a.dim), diag(a.field, a.dim, a.dim);
  std::vector<std::size_t> b_offset(db.size(), 0);
  {
    std::size_t off = 0;
    for (std::size_t j = 0; j < db.size(); ++j) {
      b_offset[j] = off;
      off += db[j].dim();
    }
  }
  std::size_t acol = 0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t c = 0; c < da[i].dim(); ++c, ++acol)
      for (std::size_t rr = 0; rr < a.dim; ++rr)
        ea.at(rr, acol) = da[i].basis().at(c, rr);
  }
  acol = 0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    std::size_t j = match[i];
    for (std::size_t c = 0; c < da[i].dim(); ++c)
      for (std::size_t rr = 0; rr < db[j].dim(); ++rr)
        diag.at(b_offset[j] + rr, acol + c) = piece_iso[i].at(rr, c);
    acol += da[i].dim();
  }
  Matrix eb(a.field, a.dim, a.dim);
  std::size_t bcol = 0;
  for (std::size_t j = 0; j < db.size(); ++j)
    for (std::size_t c = 0; c < db[j].dim(); ++c, ++bcol)
      for (std::size_t rr = 0; rr < a.dim; ++rr) eb.at(rr, bcol) = db[j].basis().at(c, rr);
  Matrix iso = eb * diag * ea.inverse();
  if (!iso.invertible()) return std::nullopt;
  return iso;
}

}  // namespace

std::vector<Subspace> mat_stable_subspaces(const MatRep& m, const Budget& budget) {
  if (!m.field.is_prime()) throw input_error("mat_stable_subspaces: needs GF(p)");
  std::vector<Subspace> out;
  for (const auto& s : enumerate_subspaces(m.field, m.dim, m.dim, budget))
    if (subspace_stable(m, s)) out.push_back(s);
  return out;
}

}  // namespace coalglab
