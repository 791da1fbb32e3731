#include "coalglab/subspace.hpp"

namespace coalglab {

Subspace Subspace::full(Field f, std::size_t ambient) {
  Subspace s;
  s.basis_ = Matrix::identity(f, ambient);
  return s;
}

Subspace Subspace::from_rows(const Matrix& rows) {
  Subspace s;
  RrefResult rr = rows.rref();
  s.basis_ = rr.mat.rows_slice(0, rr.rank);
  return s;
}

Subspace Subspace::from_vectors(Field f, std::size_t ambient,
                                const std::vector<std::vector<Scalar>>& vecs) {
  Matrix m(f, vecs.size(), ambient);
  for (std::size_t r = 0; r < vecs.size(); ++r) m.set_row(r, vecs[r]);
  return from_rows(m);
}

Subspace Subspace::span_of(Field f, std::size_t ambient, const std::vector<Scalar>& v) {
  return from_vectors(f, ambient, {v});
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
  // basis_ is RREF: eliminate pivot coordinates
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t piv = 0;
    while (piv < ambient() && basis_.at(r, piv).is_zero()) ++piv;
    if (piv == ambient()) continue;
    const Scalar& c = v[piv];
    if (c.is_zero()) continue;
    Scalar f = c;  // pivot entry is 1
    for (std::size_t j = piv; j < ambient(); ++j) v[j] -= f * basis_.at(r, j);
  }
  return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  for (const auto& s : r)
    if (!s.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  return from_rows(Matrix::vstack(a.basis_, b.basis_));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  return sum(a.perp(), b.perp()).perp();
}

Subspace Subspace::perp() const {
  Subspace s;
  s.basis_ = basis_.kernel_basis();
  return s;
}

std::vector<Scalar> Subspace::coordinates(const std::vector<Scalar>& v) const {
  std::vector<Scalar> x;
  if (!basis_.transpose().solve(v, x))
    throw input_error("Subspace: vector not a member");
  return x;
}

namespace {

void fill_free_entries(Matrix& m, const std::vector<std::size_t>& pivots,
                       const std::vector<std::pair<std::size_t, std::size_t>>& free_pos,
                       std::uint64_t code, std::uint64_t p) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = Scalar::zero(m.field());
    m.at(r, pivots[r]) = Scalar::one(m.field());
  }
  for (const auto& [r, c] : free_pos) {
    m.at(r, c) = Scalar::residue(m.field(), code % p);
    code /= p;
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(Field f, std::size_t ambient,
                                          std::size_t max_dim, const Budget& budget) {
  if (!f.is_prime()) throw input_error("enumerate_subspaces: needs GF(p)");
  std::uint64_t p = f.p;
  std::vector<Subspace> out;
  out.emplace_back(f, ambient);  // zero subspace
  std::uint64_t work = 0;
  for (std::size_t d = 1; d <= std::min(max_dim, ambient); ++d) {
    std::vector<std::size_t> pivots(d);
    for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
    bool more = true;
    while (more) {
      std::vector<bool> is_piv(ambient, false);
      for (std::size_t i : pivots) is_piv[i] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = pivots[r] + 1; c < ambient; ++c)
          if (!is_piv[c]) free_pos.push_back({r, c});
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < free_pos.size(); ++i) {
        count *= p;
        if (count > budget.work) throw budget_error("enumerate_subspaces: budget exceeded");
      }
      work += count;
      if (work > budget.work) throw budget_error("enumerate_subspaces: budget exceeded");
      Matrix m(f, d, ambient);
      for (std::uint64_t code = 0; code < count; ++code) {
        fill_free_entries(m, pivots, free_pos, code, p);
        out.push_back(Subspace::from_rows(m));
      }
      // advance the pivot combination in lexicographic order
      more = false;
      for (std::size_t i = d; i-- > 0;) {
        if (pivots[i] + (d - i) < ambient) {
          ++pivots[i];
          for (std::size_t j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace coalglab
