#include "coalglab/coalgebra.hpp"

#include <algorithm>
#include <set>

namespace coalglab {

std::string CheckReport::to_string() const {
  if (ok) return "valid";
  std::string s = "invalid:";
  for (const auto& v : violations) s += "\n  " + v;
  return s;
}

Coalgebra::Coalgebra(Field f, std::vector<std::string> labels,
                     std::vector<std::vector<DeltaTerm>> delta, std::vector<Scalar> counit)
    : field_(f), labels_(std::move(labels)), delta_(std::move(delta)), counit_(std::move(counit)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw input_error("Coalgebra: duplicate basis labels");
  if (delta_.size() != labels_.size() || counit_.size() != labels_.size())
    throw input_error("Coalgebra: delta/counit size mismatch");
  for (const auto& terms : delta_)
    for (const auto& t : terms)
      if (t.j >= dim() || t.k >= dim()) throw input_error("Coalgebra: delta index out of range");
  // built eagerly so shared coalgebras stay immutable across threads
  std::size_t n = dim();
  Matrix m(field_, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : delta_[i]) m.at(t.j * n + t.k, i) += t.coeff;
  delta_matrix_ = std::move(m);
}

std::size_t Coalgebra::label_index(const std::string& l) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == l) return i;
  throw input_error("Coalgebra: unknown basis label: " + l);
}

std::vector<Scalar> Coalgebra::basis_vector(std::size_t i) const {
  std::vector<Scalar> v(dim(), Scalar::zero(field_));
  v[i] = Scalar::one(field_);
  return v;
}

Scalar Coalgebra::counit_of(const std::vector<Scalar>& x) const {
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) s += x[i] * counit_[i];
  return s;
}

const Matrix& Coalgebra::delta_matrix() const { return *delta_matrix_; }

std::vector<Scalar> Coalgebra::delta_of(const std::vector<Scalar>& x) const {
  std::size_t n = dim();
  std::vector<Scalar> out(n * n, Scalar::zero(field_));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : delta_[i]) out[t.j * n + t.k] += x[i] * t.coeff;
  }
  return out;
}

std::vector<Scalar> Coalgebra::delta2_of(const std::vector<Scalar>& x) const {
  std::size_t n = dim();
  std::vector<Scalar> out(n * n * n, Scalar::zero(field_));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : delta_[i]) {
      Scalar c = x[i] * t.coeff;
      for (const auto& u : delta_[t.j]) out[(u.j * n + u.k) * n + t.k] += c * u.coeff;
    }
  }
  return out;
}

CheckReport Coalgebra::check() const {
  CheckReport rep;
  std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    // coassociativity at b_i
    std::vector<Scalar> lhs(n * n * n, Scalar::zero(field_));
    std::vector<Scalar> rhs(n * n * n, Scalar::zero(field_));
    for (const auto& t : delta_[i]) {
      for (const auto& u : delta_[t.j]) lhs[(u.j * n + u.k) * n + t.k] += t.coeff * u.coeff;
      for (const auto& u : delta_[t.k]) rhs[(t.j * n + u.j) * n + u.k] += t.coeff * u.coeff;
    }
    for (std::size_t idx = 0; idx < lhs.size(); ++idx)
      if (lhs[idx] != rhs[idx]) {
        std::size_t a = idx / (n * n), b = (idx / n) % n, c = idx % n;
        rep.ok = false;
        rep.violations.push_back("coassociativity fails at " + labels_[i] + ", coordinate " +
                                 labels_[a] + "(x)" + labels_[b] + "(x)" + labels_[c] + ": " +
                                 lhs[idx].to_string() + " vs " + rhs[idx].to_string());
      }
    // counit laws at b_i
    std::vector<Scalar> left(n, Scalar::zero(field_));
    std::vector<Scalar> right(n, Scalar::zero(field_));
    for (const auto& t : delta_[i]) {
      left[t.k] += t.coeff * counit_[t.j];
      right[t.j] += t.coeff * counit_[t.k];
    }
    for (std::size_t k = 0; k < n; ++k) {
      Scalar expect = k == i ? Scalar::one(field_) : Scalar::zero(field_);
      if (left[k] != expect) {
        rep.ok = false;
        rep.violations.push_back("counit law (eps(x)id) fails at " + labels_[i] +
                                 ", coordinate " + labels_[k]);
      }
      if (right[k] != expect) {
        rep.ok = false;
        rep.violations.push_back("counit law (id(x)eps) fails at " + labels_[i] +
                                 ", coordinate " + labels_[k]);
      }
    }
  }
  return rep;
}

StructureAlgebra Coalgebra::dual_algebra() const {
  std::size_t n = dim();
  StructureAlgebra a(field_, n);
  std::vector<std::vector<std::vector<Scalar>>> table(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::zero(field_))));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : delta_[i]) table[t.j][t.k][i] += t.coeff;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) a.set_product(j, k, std::move(table[j][k]));
  a.set_unit(counit_);
  return a;
}

std::vector<Scalar> Coalgebra::convolve(const std::vector<Scalar>& f,
                                        const std::vector<Scalar>& g) const {
  std::size_t n = dim();
  std::vector<Scalar> out(n, Scalar::zero(field_));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : delta_[i]) {
      if (f[t.j].is_zero() || g[t.k].is_zero()) continue;
      out[i] += t.coeff * f[t.j] * g[t.k];
    }
  return out;
}

Subspace Coalgebra::ideal_product(const Subspace& a, const Subspace& b) const {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      rows.push_back(convolve(a.basis().row(i), b.basis().row(j)));
  return Subspace::from_vectors(field_, dim(), rows);
}

Subspace Coalgebra::wedge(const Subspace& v, const Subspace& w) const {
  std::size_t n = dim();
  if (v.ambient() != n || w.ambient() != n) throw input_error("wedge: ambient mismatch");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    auto vr = v.basis().row(r);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> t(n * n, Scalar::zero(field_));
      for (std::size_t j = 0; j < n; ++j)
        if (!vr[j].is_zero()) t[j * n + i] = vr[j];
      rows.push_back(std::move(t));
    }
  }
  for (std::size_t r = 0; r < w.dim(); ++r) {
    auto wr = w.basis().row(r);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> t(n * n, Scalar::zero(field_));
      for (std::size_t k = 0; k < n; ++k)
        if (!wr[k].is_zero()) t[i * n + k] = wr[k];
      rows.push_back(std::move(t));
    }
  }
  Subspace tensor_sub = Subspace::from_vectors(field_, n * n, rows);
  Subspace functionals = tensor_sub.perp();
  Matrix cond = functionals.basis() * delta_matrix();
  return Subspace::from_rows(cond.kernel_basis());
}

Subspace Coalgebra::coradical() const {
  return dual_algebra().radical().perp();
}

std::vector<Subspace> Coalgebra::coradical_filtration() const {
  std::vector<Subspace> chain;
  chain.push_back(coradical());
  while (chain.back().dim() < dim()) {
    Subspace next = wedge(chain.back(), chain.front());
    if (!next.contains(chain.back()))
      throw std::logic_error("coradical_filtration: chain not ascending");
    if (next == chain.back())
      throw std::logic_error("coradical_filtration: stabilized below C");
    chain.push_back(next);
    if (chain.size() > dim() + 1)
      throw std::logic_error("coradical_filtration: did not terminate");
  }
  return chain;
}

bool Coalgebra::is_subcoalgebra(const Subspace& x) const {
  std::size_t n = dim();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t a = 0; a < x.dim(); ++a)
    for (std::size_t b = 0; b < x.dim(); ++b) {
      auto ra = x.basis().row(a);
      auto rb = x.basis().row(b);
      std::vector<Scalar> t(n * n, Scalar::zero(field_));
      for (std::size_t j = 0; j < n; ++j)
        if (!ra[j].is_zero())
          for (std::size_t k = 0; k < n; ++k)
            if (!rb[k].is_zero()) t[j * n + k] = ra[j] * rb[k];
      rows.push_back(std::move(t));
    }
  Subspace tensor_sq = Subspace::from_vectors(field_, n * n, rows);
  for (std::size_t r = 0; r < x.dim(); ++r)
    if (!tensor_sq.contains(delta_of(x.basis().row(r)))) return false;
  return true;
}

Coalgebra Coalgebra::restrict_to(const Subspace& x,
                                 std::optional<std::vector<std::string>> labels) const {
  std::size_t n = dim(), m = x.dim();
  std::vector<std::string> ls;
  if (labels) {
    ls = *labels;
  } else {
    for (std::size_t i = 0; i < m; ++i) ls.push_back("e" + std::to_string(i));
  }
  // tensor square basis rows u_a (x) u_b, solve coordinates of Delta(u_s)
  Matrix tensor_rows(field_, m * m, n * n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto ra = x.basis().row(a);
      auto rb = x.basis().row(b);
      for (std::size_t j = 0; j < n; ++j)
        if (!ra[j].is_zero())
          for (std::size_t k = 0; k < n; ++k)
            if (!rb[k].is_zero()) tensor_rows.at(a * m + b, j * n + k) = ra[j] * rb[k];
    }
  Matrix tensor_t = tensor_rows.transpose();
  std::vector<std::vector<DeltaTerm>> delta(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<Scalar> coords;
    if (!tensor_t.solve(delta_of(x.basis().row(s)), coords))
      throw input_error("restrict_to: subspace is not a subcoalgebra");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (!coords[a * m + b].is_zero()) delta[s].push_back({a, b, coords[a * m + b]});
  }
  std::vector<Scalar> counit(m, Scalar::zero(field_));
  for (std::size_t s = 0; s < m; ++s) counit[s] = counit_of(x.basis().row(s));
  return Coalgebra(field_, std::move(ls), std::move(delta), std::move(counit));
}

Subspace Coalgebra::skew_primitives(const std::vector<Scalar>& g,
                                    const std::vector<Scalar>& h) const {
  std::size_t n = dim();
  // rows: n^2 conditions, cols: n unknowns x with Delta x - g(x)x - x(x)h = 0
  Matrix cond(field_, n * n, n);
  const Matrix& dm = delta_matrix();
  for (std::size_t row = 0; row < n * n; ++row)
    for (std::size_t c = 0; c < n; ++c) cond.at(row, c) = dm.at(row, c);
  for (std::size_t c = 0; c < n; ++c) {
    // subtract g (x) e_c and e_c (x) h from column c
    for (std::size_t j = 0; j < n; ++j) {
      if (!g[j].is_zero()) cond.at(j * n + c, c) -= g[j];
      if (!h[j].is_zero()) cond.at(c * n + j, c) -= h[j];
    }
  }
  return Subspace::from_rows(cond.kernel_basis());
}

GrouplikeInfo Coalgebra::grouplikes() const {
  GrouplikeInfo info;
  Subspace c0 = coradical();
  // fast path: basis elements that are themselves grouplike (covers path
  // coalgebras, where the vertices qualify)
  std::size_t n = dim();
  std::vector<std::vector<Scalar>> found;
  for (std::size_t i = 0; i < n; ++i) {
    if (!counit_[i].is_one()) continue;
    auto b = basis_vector(i);
    std::vector<Scalar> expect(n * n, Scalar::zero(field_));
    expect[i * n + i] = Scalar::one(field_);
    if (delta_of(b) == expect) found.push_back(b);
  }
  if (Subspace::from_vectors(field_, n, found) == c0) {
    for (const auto& g : found)
      for (std::size_t i = 0; i < n; ++i)
        if (g[i].is_one()) {
          info.labels.push_back(labels_[i]);
          break;
        }
    info.elements = std::move(found);
    info.pointed = true;
    return info;
  }
  // general route: characters of the dual algebra of the coradical
  Coalgebra crad = restrict_to(c0);
  auto chars = crad.dual_algebra().characters();
  for (const auto& chi : chars) {
    // chi gives coordinates in the coradical basis; map back to C
    std::vector<Scalar> g(n, Scalar::zero(field_));
    for (std::size_t r = 0; r < c0.dim(); ++r)
      for (std::size_t c = 0; c < n; ++c) g[c] += chi[r] * c0.basis().at(r, c);
    // machine-check grouplikeness in C
    std::vector<Scalar> dg = delta_of(g);
    std::vector<Scalar> gg(n * n, Scalar::zero(field_));
    for (std::size_t j = 0; j < n; ++j)
      if (!g[j].is_zero())
        for (std::size_t k = 0; k < n; ++k)
          if (!g[k].is_zero()) gg[j * n + k] = g[j] * g[k];
    if (dg != gg || !counit_of(g).is_one())
      throw std::logic_error("grouplikes: character failed the grouplike check");
    // reuse the basis label when the grouplike is a standard basis vector
    std::string lab = "g" + std::to_string(info.elements.size());
    std::size_t nz = 0, where = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!g[i].is_zero()) {
        ++nz;
        where = i;
      }
    if (nz == 1 && g[where].is_one()) lab = labels_[where];
    info.labels.push_back(lab);
    info.elements.push_back(std::move(g));
  }
  info.pointed = info.elements.size() == c0.dim();
  return info;
}

Coalgebra path_coalgebra(const Quiver& q, std::size_t max_len, Field fld,
                         std::size_t basis_cap) {
  struct Path {
    std::size_t src = 0, tgt = 0;
    std::vector<std::size_t> arrows;
  };
  const auto& arrows = q.arrows();
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices().size(); ++v) paths.push_back({v, v, {}});
  std::size_t level_begin = 0, level_end = paths.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t p = level_begin; p < level_end; ++p)
      for (std::size_t a = 0; a < arrows.size(); ++a)
        if (q.vertex_index(arrows[a].src) == paths[p].tgt) {
          Path ext = paths[p];
          ext.arrows.push_back(a);
          ext.tgt = q.vertex_index(arrows[a].tgt);
          paths.push_back(std::move(ext));
          if (paths.size() > basis_cap)
            throw budget_error("path_coalgebra: basis-size cap exceeded");
        }
    level_begin = level_end;
    level_end = paths.size();
    if (level_begin == level_end) break;  // no longer paths exist
  }
  auto label_of = [&](const Path& p) {
    if (p.arrows.empty()) return q.vertices()[p.src];
    std::string l;
    for (std::size_t a : p.arrows) l += arrows[a].label;
    return l;
  };
  std::vector<std::string> labels;
  for (const Path& p : paths) labels.push_back(label_of(p));
  auto index_of = [&](const Path& p) {
    std::string l = label_of(p);
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw std::logic_error("path_coalgebra: missing split part");
  };
  std::vector<std::vector<DeltaTerm>> delta(paths.size());
  std::vector<Scalar> counit(paths.size(), Scalar::zero(fld));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    std::size_t k = p.arrows.size();
    counit[i] = k == 0 ? Scalar::one(fld) : Scalar::zero(fld);
    for (std::size_t cut = 0; cut <= k; ++cut) {
      Path prefix, suffix;
      prefix.src = p.src;
      prefix.arrows.assign(p.arrows.begin(), p.arrows.begin() + static_cast<std::ptrdiff_t>(cut));
      prefix.tgt = cut == 0 ? p.src : q.vertex_index(arrows[p.arrows[cut - 1]].tgt);
      suffix.src = prefix.tgt;
      suffix.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(cut), p.arrows.end());
      suffix.tgt = p.tgt;
      delta[i].push_back({index_of(prefix), index_of(suffix), Scalar::one(fld)});
    }
  }
  return Coalgebra(fld, std::move(labels), std::move(delta), std::move(counit));
}

Coalgebra grouplike_coalgebra(Field f, std::vector<std::string> labels) {
  std::vector<std::vector<DeltaTerm>> delta(labels.size());
  std::vector<Scalar> counit(labels.size(), Scalar::one(f));
  for (std::size_t i = 0; i < labels.size(); ++i) delta[i].push_back({i, i, Scalar::one(f)});
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

Coalgebra comatrix_coalgebra(Field f, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<DeltaTerm>> delta(n * n);
  std::vector<Scalar> counit(n * n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t k = 0; k < n; ++k)
        delta[i * n + j].push_back({i * n + k, k * n + j, Scalar::one(f)});
      if (i == j) counit[i * n + j] = Scalar::one(f);
    }
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

bool operator==(const Coalgebra& a, const Coalgebra& b) {
  if (a.field_ != b.field_ || a.labels_ != b.labels_ || a.counit_ != b.counit_) return false;
  return a.delta_matrix() == b.delta_matrix();
}

}  // namespace coalglab
