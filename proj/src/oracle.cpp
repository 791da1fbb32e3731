#include "coalglab/oracle.hpp"

#include "coalglab/matrep.hpp"

#include <algorithm>

namespace coalglab {

ExtensionSpace extension_space(const Comodule& mprime, const std::vector<Scalar>& g) {
  const Coalgebra& c = *mprime.coalgebra();
  Field f = c.field();
  std::size_t n = c.dim(), m = mprime.dim();
  // c'_{tu} in C coordinates from rho'
  std::vector<std::vector<std::vector<Scalar>>> cp(
      m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(n, Scalar::zero(f))));
  for (std::size_t t = 0; t < m; ++t)
    for (const auto& term : mprime.rho()[t]) cp[t][term.target][term.c_index] += term.coeff;
  // unknowns (c_t)_i at column t*n + i
  std::size_t cols = m * n;
  Matrix cond(f, m + m * n * n, cols);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t i = 0; i < n; ++i) cond.at(t, t * n + i) = c.counit()[i];
  const Matrix& dm = c.delta_matrix();
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = m + (t * n + j) * n + k;
        // [Delta c_t]_{jk}
        for (std::size_t i = 0; i < n; ++i) {
          const Scalar& d = dm.at(j * n + k, i);
          if (!d.is_zero()) cond.at(row, t * n + i) += d;
        }
        // - sum_u (c'_{tu})_j (c_u)_k
        for (std::size_t u = 0; u < m; ++u) {
          const Scalar& cj = cp[t][u][j];
          if (!cj.is_zero()) cond.at(row, u * n + k) -= cj;
        }
        // - (c_t)_j g_k
        if (!g[k].is_zero()) cond.at(row, t * n + j) -= g[k];
      }
  ExtensionSpace out;
  out.cocycles = Subspace::from_rows(cond.kernel_basis());
  // coboundaries: lambda -> (c_t = lambda_t g - sum_u lambda_u c'_{tu})
  Matrix cob(f, m, cols);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t i = 0; i < n; ++i) {
      cob.at(u, u * n + i) += g[i];
      for (std::size_t t = 0; t < m; ++t) cob.at(u, t * n + i) -= cp[t][u][i];
    }
  }
  out.coboundaries = Subspace::from_rows(cob);
  if (!out.cocycles.contains(out.coboundaries))
    throw std::logic_error("extension_space: coboundaries escape the cocycle space");
  // complement of B inside Z
  std::vector<std::vector<Scalar>> comp_rows;
  for (std::size_t r = 0; r < out.cocycles.dim(); ++r) {
    auto red = out.coboundaries.reduce(out.cocycles.basis().row(r));
    bool nz = false;
    for (const auto& s : red) nz = nz || !s.is_zero();
    if (nz) comp_rows.push_back(std::move(red));
  }
  out.complement = Subspace::from_vectors(f, cols, comp_rows).basis();
  if (out.complement.rows() + out.coboundaries.dim() != out.cocycles.dim())
    throw std::logic_error("extension_space: complement dimension mismatch");
  return out;
}

Comodule extension_comodule(const Comodule& mprime, const std::vector<Scalar>& g,
                            const std::vector<Scalar>& cocycle) {
  const Coalgebra& c = *mprime.coalgebra();
  std::size_t n = c.dim(), m = mprime.dim();
  std::vector<std::vector<RhoTerm>> rho(m + 1);
  for (std::size_t i = 0; i < n; ++i)
    if (!g[i].is_zero()) rho[0].push_back({i, 0, g[i]});
  for (std::size_t t = 0; t < m; ++t) {
    for (const auto& term : mprime.rho()[t])
      rho[t + 1].push_back({term.c_index, term.target + 1, term.coeff});
    for (std::size_t i = 0; i < n; ++i)
      if (!cocycle[t * n + i].is_zero()) rho[t + 1].push_back({i, 0, cocycle[t * n + i]});
  }
  return Comodule(mprime.coalgebra(), m + 1, std::move(rho));
}

namespace {

// all vectors of K^r with first nonzero coordinate 1 (projective normal forms)
void projective_vectors(Field f, std::size_t r, std::uint64_t work_cap,
                        std::vector<std::vector<Scalar>>& out) {
  std::uint64_t p = f.p;
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < r; ++i) {
      count *= p;
      if (count > work_cap) throw budget_error("enumerate: projective scan budget exceeded");
    }
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Scalar> v(r, Scalar::zero(f));
      v[lead] = Scalar::one(f);
      std::uint64_t cc = code;
      for (std::size_t i = lead + 1; i < r; ++i) {
        v[i] = Scalar::residue(f, cc % p);
        cc /= p;
      }
      out.push_back(std::move(v));
    }
  }
}

std::vector<Scalar> combine_rows(const Matrix& rows, const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> v(rows.cols(), Scalar::zero(rows.field()));
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    if (coeffs[r].is_zero()) continue;
    for (std::size_t c = 0; c < rows.cols(); ++c) v[c] += coeffs[r] * rows.at(r, c);
  }
  return v;
}

struct GlIndex {
  GrouplikeInfo info;
  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < info.labels.size(); ++i)
      if (info.labels[i] == label) return i;
    throw input_error("oracle: unknown vertex label " + label);
  }
};

std::vector<Comodule> dedupe_classes(std::vector<Comodule> cand, const Budget& budget,
                                     ParallelMode mode) {
  // per-candidate data once: matrix view, decomposition shape, invariants
  struct Entry {
    MatRep rep;
    bool indec = false;
    std::string sig;
  };
  auto entries = parallel_map_indexed<Entry>(cand.size(), mode, [&](std::size_t i) {
    Entry e;
    e.rep = MatRep{cand[i].field(), cand[i].dim(), cand[i].action_matrices()};
    std::vector<std::size_t> piece_dims;
    for (const auto& part : mat_decompose(e.rep, budget)) piece_dims.push_back(part.dim());
    std::sort(piece_dims.begin(), piece_dims.end());
    e.indec = piece_dims.size() == 1;
    e.sig = "d" + std::to_string(cand[i].dim());
    for (auto d : piece_dims) e.sig += "." + std::to_string(d);
    e.sig += ":s" + std::to_string(socle(cand[i]).dim());
    e.sig += ":c" + std::to_string(cand[i].cf().dim());
    e.sig += ":e" + std::to_string(mat_hom(e.rep, e.rep).size());
    return e;
  });
  std::vector<bool> dead(cand.size(), false);
  std::uint64_t pair_work = 0;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (dead[i]) continue;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (dead[j] || entries[i].sig != entries[j].sig) continue;
      if (++pair_work > budget.work)
        throw budget_error("enumerate_comodules: dedupe budget exceeded");
      bool iso = entries[i].indec && entries[j].indec
                     ? mat_isomorphism_indec(entries[i].rep, entries[j].rep).has_value()
                     : mat_isomorphism(entries[i].rep, entries[j].rep, budget).has_value();
      if (iso) dead[j] = true;
    }
  }
  std::vector<Comodule> out;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (!dead[i]) out.push_back(std::move(cand[i]));
  return out;
}

std::vector<Comodule> classes_impl(const CoalgebraPtr& c, const GlIndex& gl,
                                   const DimensionVector& d, const Budget& budget,
                                   ParallelMode mode);

// complete classification in length two: split sums plus one projective
// family per ordered (top, socle) pair
std::vector<Comodule> classes_len2(const CoalgebraPtr& c, const GlIndex& gl,
                                   const DimensionVector& d, const Budget& budget) {
  std::vector<std::pair<std::size_t, std::size_t>> support;  // (vertex, count)
  for (const auto& [label, count] : d.entries)
    if (count) support.push_back({gl.index_of(label), count});
  std::vector<Comodule> out;
  auto simple_of = [&](std::size_t v) { return Comodule::simple(c, gl.info.elements[v]); };
  // the split class
  if (support.size() == 1) {
    out.push_back(direct_sum(simple_of(support[0].first), simple_of(support[0].first)));
  } else {
    out.push_back(direct_sum(simple_of(support[0].first), simple_of(support[1].first)));
  }
  // nonsplit families per ordered (top, socle)
  std::vector<std::pair<std::size_t, std::size_t>> ordered;
  if (support.size() == 1) {
    ordered.push_back({support[0].first, support[0].first});
  } else {
    ordered.push_back({support[0].first, support[1].first});
    ordered.push_back({support[1].first, support[0].first});
  }
  for (const auto& [top, soc] : ordered) {
    Comodule mp = simple_of(top);
    ExtensionSpace es = extension_space(mp, gl.info.elements[soc]);
    std::vector<std::vector<Scalar>> reps;
    projective_vectors(c->field(), es.complement.rows(), budget.work, reps);
    for (const auto& coeffs : reps)
      out.push_back(extension_comodule(mp, gl.info.elements[soc],
                                       combine_rows(es.complement, coeffs)));
  }
  return out;
}

std::vector<Comodule> classes_impl(const CoalgebraPtr& c, const GlIndex& gl,
                                   const DimensionVector& d, const Budget& budget,
                                   ParallelMode mode) {
  std::size_t total = d.total();
  if (total == 0) return {Comodule::zero(c)};
  if (total == 1) {
    for (const auto& [label, count] : d.entries)
      if (count) return {Comodule::simple(c, gl.info.elements[gl.index_of(label)])};
  }
  if (total == 2) return classes_len2(c, gl, d, budget);
  // general recursion through every socle vertex choice
  struct Job {
    std::size_t vertex;
    Comodule mprime;
  };
  std::vector<Job> jobs;
  for (const auto& [label, count] : d.entries) {
    if (!count) continue;
    std::size_t v = gl.index_of(label);
    DimensionVector dp = d;
    if (--dp.entries[label] == 0) dp.entries.erase(label);
    for (auto& mp : classes_impl(c, gl, dp, budget, mode)) jobs.push_back({v, std::move(mp)});
  }
  // solve all cocycle spaces first and bound the candidate count before any
  // family is materialized: the dedupe pass is quadratic in it
  auto spaces = parallel_map_indexed<ExtensionSpace>(jobs.size(), mode, [&](std::size_t idx) {
    return extension_space(jobs[idx].mprime, gl.info.elements[jobs[idx].vertex]);
  });
  std::uint64_t p = c->field().p;
  std::uint64_t total_cand = 0;
  for (const auto& es : spaces) {
    // 1 + (p^r - 1)/(p - 1): the zero extension plus the projective family
    std::uint64_t fam = 0;
    for (std::size_t i = 0; i < es.complement.rows(); ++i) {
      fam = fam * p + 1;
      if (fam > budget.work) break;
    }
    total_cand += fam + 1;
    if (total_cand * total_cand > budget.work)
      throw budget_error("enumerate_comodules: candidate set too large for dedupe");
  }
  auto blocks = parallel_map_indexed<std::vector<Comodule>>(
      jobs.size(), mode, [&](std::size_t idx) {
        const Job& job = jobs[idx];
        const ExtensionSpace& es = spaces[idx];
        std::vector<std::vector<Scalar>> reps;
        reps.push_back(std::vector<Scalar>(es.complement.rows(), Scalar::zero(c->field())));
        projective_vectors(c->field(), es.complement.rows(), budget.work, reps);
        std::vector<Comodule> block;
        block.reserve(reps.size());
        for (const auto& coeffs : reps)
          block.push_back(extension_comodule(job.mprime, gl.info.elements[job.vertex],
                                             combine_rows(es.complement, coeffs)));
        return block;
      });
  std::vector<Comodule> cand;
  for (auto& b : blocks)
    for (auto& m : b) cand.push_back(std::move(m));
  return dedupe_classes(std::move(cand), budget, mode);
}

}  // namespace

std::vector<Comodule> enumerate_comodules(const CoalgebraPtr& c, const DimensionVector& d,
                                          const Budget& budget, ParallelMode mode) {
  if (!c->field().is_prime()) throw input_error("enumerate_comodules: needs GF(p)");
  GlIndex gl{c->grouplikes()};
  if (!gl.info.pointed) throw input_error("enumerate_comodules: coalgebra is not pointed");
  return classes_impl(c, gl, d, budget, mode);
}

ExtensionEnum enumerate_extensions(const CoalgebraPtr& c, const std::string& top_label,
                                   const std::string& socle_label) {
  GlIndex gl{c->grouplikes()};
  if (!gl.info.pointed) throw input_error("enumerate_extensions: coalgebra is not pointed");
  Comodule top = Comodule::simple(c, gl.info.elements[gl.index_of(top_label)]);
  const auto& soc = gl.info.elements[gl.index_of(socle_label)];
  ExtensionSpace es = extension_space(top, soc);
  ExtensionEnum out;
  out.count = es.complement.rows();
  for (std::size_t r = 0; r < es.complement.rows(); ++r) {
    Comodule rep = extension_comodule(top, soc, es.complement.row(r));
    auto chk = rep.check();
    if (!chk.ok)
      throw std::logic_error("enumerate_extensions: representative fails the comodule axioms");
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

Subspace min_subcoalgebra_oracle(const Comodule& m, const Budget& budget) {
  const Coalgebra& c = *m.coalgebra();
  std::size_t n = c.dim();
  // raw coefficient span, assembled directly from the coaction data
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t s = 0; s < m.dim(); ++s)
    for (std::size_t t = 0; t < m.dim(); ++t) {
      std::vector<Scalar> v(n, Scalar::zero(m.field()));
      bool nz = false;
      for (const auto& term : m.rho()[s])
        if (term.target == t) {
          v[term.c_index] += term.coeff;
          nz = true;
        }
      if (nz) rows.push_back(std::move(v));
    }
  Subspace x = Subspace::from_vectors(m.field(), n, rows);
  for (std::uint64_t iter = 0; iter <= n + 1; ++iter) {
    if (iter > budget.work) throw budget_error("min_subcoalgebra_oracle: budget exceeded");
    std::vector<std::vector<Scalar>> add;
    for (std::size_t r = 0; r < x.dim(); ++r) {
      auto dx = c.delta_of(x.basis().row(r));
      // legs of the tensor: row and column spaces of the n x n coefficient grid
      Matrix grid(m.field(), n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) grid.at(j, k) = dx[j * n + k];
      for (std::size_t j = 0; j < n; ++j) add.push_back(grid.row(j));          // right legs
      Matrix gt = grid.transpose();
      for (std::size_t k = 0; k < n; ++k) add.push_back(gt.row(k));            // left legs
    }
    for (std::size_t r = 0; r < x.dim(); ++r) add.push_back(x.basis().row(r));
    Subspace next = Subspace::from_vectors(m.field(), n, add);
    if (next == x) return x;
    x = next;
  }
  throw std::logic_error("min_subcoalgebra_oracle: closure did not stabilize");
}

Subspace cf_dimvec_oracle(const CoalgebraPtr& c, const DimensionVector& d,
                          const Budget& budget, ParallelMode mode) {
  if (!c->field().is_prime()) throw input_error("cf_dimvec_oracle: needs GF(p)");
  GlIndex gl{c->grouplikes()};
  if (!gl.info.pointed) throw input_error("cf_dimvec_oracle: coalgebra is not pointed");
  std::size_t n = c->dim();
  std::size_t total = d.total();
  if (total == 0) return Subspace(c->field(), n);
  if (total == 1) {
    for (const auto& [label, count] : d.entries)
      if (count)
        return Subspace::span_of(c->field(), n, gl.info.elements[gl.index_of(label)]);
  }
  struct Job {
    std::size_t vertex;
    Comodule mprime;
  };
  std::vector<Job> jobs;
  for (const auto& [label, count] : d.entries) {
    if (!count) continue;
    std::size_t v = gl.index_of(label);
    DimensionVector dp = d;
    if (--dp.entries[label] == 0) dp.entries.erase(label);
    for (auto& mp : classes_impl(c, gl, dp, budget, mode)) jobs.push_back({v, std::move(mp)});
  }
  auto blocks = parallel_map_indexed<std::vector<std::vector<Scalar>>>(
      jobs.size(), mode, [&](std::size_t idx) {
        const Job& job = jobs[idx];
        std::vector<std::vector<Scalar>> rows;
        // cf of the quotient part
        Subspace cfm = job.mprime.cf();
        for (std::size_t r = 0; r < cfm.dim(); ++r) rows.push_back(cfm.basis().row(r));
        // socle grouplike
        rows.push_back(gl.info.elements[job.vertex]);
        // every component of every cocycle: linear span over the full cocycle
        // space, since coefficients are affine-linear in the cocycle
        ExtensionSpace es = extension_space(job.mprime, gl.info.elements[job.vertex]);
        for (std::size_t r = 0; r < es.cocycles.dim(); ++r) {
          auto z = es.cocycles.basis().row(r);
          for (std::size_t t = 0; t < job.mprime.dim(); ++t) {
            std::vector<Scalar> comp(n, Scalar::zero(c->field()));
            bool nz = false;
            for (std::size_t i = 0; i < n; ++i) {
              comp[i] = z[t * n + i];
              nz = nz || !comp[i].is_zero();
            }
            if (nz) rows.push_back(std::move(comp));
          }
        }
        return rows;
      });
  std::vector<std::vector<Scalar>> all;
  for (auto& b : blocks)
    for (auto& r : b) all.push_back(std::move(r));
  return Subspace::from_vectors(c->field(), n, all);
}

}  // namespace coalglab
