#include "coalglab/embeddings.hpp"

#include <algorithm>
#include <functional>

namespace coalglab {

FreeAlgebraModule::FreeAlgebraModule(Field f, std::size_t dim, std::vector<Matrix> generators)
    : field_(f), dim_(dim), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.rows() != dim_ || g.cols() != dim_)
      throw input_error("FreeAlgebraModule: generator shape mismatch");
}

bool FreeAlgebraModule::nilpotent_action() const {
  // descending chain N_{l+1} = B * N_l for the non-unital algebra B generated
  // by the action matrices; nilpotent iff the chain hits zero
  std::size_t nn = dim_ * dim_;
  auto flatten = [&](const Matrix& m) {
    std::vector<Scalar> v(nn, Scalar::zero(field_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) v[i * dim_ + j] = m.at(i, j);
    return v;
  };
  auto unflatten = [&](const std::vector<Scalar>& v) {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = v[i * dim_ + j];
    return m;
  };
  if (dim_ == 0) return true;
  // close span{X_i} under multiplication
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens_) rows.push_back(flatten(g));
  Subspace b = Subspace::from_vectors(field_, nn, rows);
  for (;;) {
    std::vector<std::vector<Scalar>> prods;
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        prods.push_back(flatten(unflatten(b.basis().row(i)) * unflatten(b.basis().row(j))));
    for (std::size_t i = 0; i < b.dim(); ++i) prods.push_back(b.basis().row(i));
    Subspace next = Subspace::from_vectors(field_, nn, prods);
    if (next == b) break;
    b = next;
  }
  Subspace chain = b;
  for (std::size_t step = 0; step <= nn + 1; ++step) {
    if (chain.is_zero()) return true;
    std::vector<std::vector<Scalar>> prods;
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < chain.dim(); ++j)
        prods.push_back(
            flatten(unflatten(b.basis().row(i)) * unflatten(chain.basis().row(j))));
    Subspace next = Subspace::from_vectors(field_, nn, prods);
    if (next == chain) return false;  // stabilized above zero
    chain = next;
  }
  return chain.is_zero();
}

FreeAlgebraModule direct_sum(const FreeAlgebraModule& a, const FreeAlgebraModule& b) {
  if (a.field_ != b.field_ || a.gens_.size() != b.gens_.size())
    throw input_error("direct_sum: incompatible free modules");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.gens_.size(); ++i) {
    Matrix g(a.field_, a.dim_ + b.dim_, a.dim_ + b.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
      for (std::size_t c = 0; c < a.dim_; ++c) g.at(r, c) = a.gens_[i].at(r, c);
    for (std::size_t r = 0; r < b.dim_; ++r)
      for (std::size_t c = 0; c < b.dim_; ++c)
        g.at(a.dim_ + r, a.dim_ + c) = b.gens_[i].at(r, c);
    gens.push_back(std::move(g));
  }
  return FreeAlgebraModule(a.field_, a.dim_ + b.dim_, std::move(gens));
}

Field QuiverRep::field() const {
  if (!maps.empty()) return maps.begin()->second.field();
  return fld;
}

std::size_t QuiverRep::total_dim() const {
  std::size_t t = 0;
  for (const auto& v : quiver.vertices()) {
    auto it = dims.find(v);
    t += it == dims.end() ? 0 : it->second;
  }
  return t;
}

std::size_t QuiverRep::vertex_offset(const std::string& v) const {
  std::size_t off = 0;
  for (const auto& w : quiver.vertices()) {
    if (w == v) return off;
    auto it = dims.find(w);
    off += it == dims.end() ? 0 : it->second;
  }
  throw input_error("QuiverRep: unknown vertex " + v);
}

void QuiverRep::validate() const {
  for (const auto& a : quiver.arrows()) {
    auto it = maps.find(a.label);
    std::size_t ds = dims.count(a.src) ? dims.at(a.src) : 0;
    std::size_t dt = dims.count(a.tgt) ? dims.at(a.tgt) : 0;
    if (it == maps.end()) {
      if (ds && dt) throw input_error("QuiverRep: missing map for arrow " + a.label);
      continue;
    }
    if (it->second.rows() != dt || it->second.cols() != ds)
      throw input_error("QuiverRep: map shape mismatch at arrow " + a.label);
  }
}

MatRep QuiverRep::as_matrep() const {
  validate();
  std::size_t d = total_dim();
  Field f = field();
  MatRep out{f, d, {}};
  for (const auto& v : quiver.vertices()) {
    Matrix proj(f, d, d);
    if (dims.count(v)) {
      std::size_t off = vertex_offset(v);
      for (std::size_t i = 0; i < dims.at(v); ++i) proj.at(off + i, off + i) = Scalar::one(f);
    }
    out.ops.push_back(std::move(proj));
  }
  for (const auto& a : quiver.arrows()) {
    Matrix block(f, d, d);
    auto it = maps.find(a.label);
    if (it != maps.end() && dims.count(a.src) && dims.count(a.tgt)) {
      std::size_t so = vertex_offset(a.src), to = vertex_offset(a.tgt);
      for (std::size_t r = 0; r < it->second.rows(); ++r)
        for (std::size_t c = 0; c < it->second.cols(); ++c)
          block.at(to + r, so + c) = it->second.at(r, c);
    }
    out.ops.push_back(std::move(block));
  }
  return out;
}

QuiverRep functor_F(const FreeAlgebraModule& m) {
  std::size_t k = m.generator_count();
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i <= k; ++i)
    arrows.push_back({"y" + std::to_string(i), "a", "b"});
  QuiverRep rep{Quiver({"a", "b"}, std::move(arrows)), {}, {}, m.field()};
  rep.dims["a"] = m.dim();
  rep.dims["b"] = m.dim();
  rep.maps["y0"] = Matrix::identity(m.field(), m.dim());
  for (std::size_t i = 0; i < k; ++i) rep.maps["y" + std::to_string(i + 1)] = m.generators()[i];
  return rep;
}

Matrix functor_F_map(const Matrix& f) {
  Matrix out(f.field(), 2 * f.rows(), 2 * f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) {
      out.at(r, c) = f.at(r, c);
      out.at(f.rows() + r, f.cols() + c) = f.at(r, c);
    }
  return out;
}

CoalgebraPtr functor_G_coalgebra(Field f, std::size_t k) {
  return std::make_shared<Coalgebra>(path_coalgebra(Quiver::loops(k + 1), 1, f));
}

Comodule functor_G(const FreeAlgebraModule& m, const CoalgebraPtr& loops_coalgebra) {
  std::size_t k = m.generator_count(), d = m.dim();
  const Coalgebra& c = *loops_coalgebra;
  if (c.dim() != k + 2) throw input_error("functor_G: coalgebra has wrong loop count");
  Field f = m.field();
  // loop actions z_0 = (0 I; 0 0), z_{i+1} = (0 X_i; 0 0); z_i z_j = 0 verified
  std::vector<Matrix> z;
  for (std::size_t j = 0; j <= k; ++j) {
    Matrix zj(f, 2 * d, 2 * d);
    const Matrix* top = nullptr;
    Matrix idm = Matrix::identity(f, d);
    top = j == 0 ? &idm : &m.generators()[j - 1];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t cix = 0; cix < d; ++cix) zj.at(r, d + cix) = top->at(r, cix);
    z.push_back(std::move(zj));
  }
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      if (!(z[i] * z[j]).is_zero()) throw std::logic_error("functor_G: z_i z_j != 0");
  std::size_t g = c.label_index("g");
  std::vector<std::vector<RhoTerm>> rho(2 * d);
  for (std::size_t s = 0; s < 2 * d; ++s) {
    rho[s].push_back({g, s, Scalar::one(f)});
    for (std::size_t j = 0; j <= k; ++j) {
      std::size_t lj = c.label_index("z" + std::to_string(j + 1));
      for (std::size_t t = 0; t < 2 * d; ++t)
        if (!z[j].at(t, s).is_zero()) rho[s].push_back({lj, t, z[j].at(t, s)});
    }
  }
  return Comodule(loops_coalgebra, 2 * d, std::move(rho));
}

Matrix functor_G_map(const Matrix& f) { return functor_F_map(f); }

FreeAlgebraModule shift_embedding(const FreeAlgebraModule& m, std::size_t trunc,
                                  const std::vector<Scalar>& lambdas) {
  if (lambdas.size() < trunc) throw input_error("shift_embedding: not enough lambdas");
  for (std::size_t i = 0; i < trunc; ++i)
    for (std::size_t j = i + 1; j < trunc; ++j)
      if (lambdas[i] == lambdas[j]) throw input_error("shift_embedding: repeated lambdas");
  Field f = m.field();
  std::size_t d = m.dim(), k = m.generator_count();
  std::size_t total = d * trunc;
  Matrix y(f, total, total), z(f, total, total), t(f, total, total);
  for (std::size_t blk = 0; blk < trunc; ++blk) {
    if (blk < k) {
      const Matrix& x = m.generators()[blk];
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) y.at(blk * d + r, blk * d + c) = x.at(r, c);
    }
    if (blk >= 1)
      for (std::size_t r = 0; r < d; ++r) z.at((blk - 1) * d + r, blk * d + r) = Scalar::one(f);
    for (std::size_t r = 0; r < d; ++r) t.at(blk * d + r, blk * d + r) = lambdas[blk];
  }
  return FreeAlgebraModule(f, total, {std::move(y), std::move(z), std::move(t)});
}

FreeAlgebraModule bounded_quiver_embedding(const QuiverRep& r, std::size_t bound,
                                           const std::map<std::string, Scalar>& lambdas) {
  r.validate();
  Field f = r.field();
  // bound check and distinct lambdas on the support
  for (const auto& v : r.quiver.vertices())
    for (const auto& w : r.quiver.vertices())
      if (r.quiver.pair_count(v, w) > bound)
        throw input_error("bounded_quiver_embedding: arrow bound violated at " + v + "->" + w);
  std::vector<std::string> support;
  for (const auto& v : r.quiver.vertices())
    if (r.dims.count(v) && r.dims.at(v) > 0) support.push_back(v);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!lambdas.count(support[i]))
      throw input_error("bounded_quiver_embedding: missing lambda for " + support[i]);
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (lambdas.at(support[i]) == lambdas.at(support[j]))
        throw input_error("bounded_quiver_embedding: repeated lambdas");
  }
  std::size_t total = r.total_dim();
  std::vector<Matrix> gens(bound + 1, Matrix(f, total, total));
  for (const auto& v : support) {
    std::size_t off = r.vertex_offset(v);
    for (std::size_t i = 0; i < r.dims.at(v); ++i)
      gens[0].at(off + i, off + i) = lambdas.at(v);
  }
  // x_i assembles the i-th arrow of every ordered pair, in declaration order
  for (const auto& v : r.quiver.vertices())
    for (const auto& w : r.quiver.vertices()) {
      std::size_t seen = 0;
      for (const auto& a : r.quiver.arrows()) {
        if (a.src != v || a.tgt != w) continue;
        ++seen;
        if (!r.dims.count(v) || !r.dims.count(w)) continue;
        auto it = r.maps.find(a.label);
        if (it == r.maps.end()) continue;
        std::size_t so = r.vertex_offset(v), to = r.vertex_offset(w);
        for (std::size_t rr = 0; rr < it->second.rows(); ++rr)
          for (std::size_t cc = 0; cc < it->second.cols(); ++cc)
            gens[seen].at(to + rr, so + cc) += it->second.at(rr, cc);
      }
    }
  return FreeAlgebraModule(f, total, std::move(gens));
}

Matrix bounded_quiver_embedding_map(const QuiverRep& src,
                                    const std::map<std::string, Matrix>& vertex_maps) {
  // block-diagonal assembly of a representation morphism
  Field f = src.field();
  std::size_t total = src.total_dim();
  Matrix out(f, total, total);
  for (const auto& [v, fm] : vertex_maps) {
    std::size_t off = src.vertex_offset(v);
    for (std::size_t r = 0; r < fm.rows(); ++r)
      for (std::size_t c = 0; c < fm.cols(); ++c) out.at(off + r, off + c) = fm.at(r, c);
  }
  return out;
}

Comodule nilpotent_rep_to_comodule(const QuiverRep& r, const CoalgebraPtr& kq,
                                   std::size_t max_len) {
  r.validate();
  Field f = kq->field();
  std::size_t total = r.total_dim();
  std::vector<std::vector<RhoTerm>> rho(total);
  // walk all paths of length <= max_len with nonzero composite action
  struct Walk {
    std::string label;  // path label (concatenated arrow labels), vertex label if empty path
    std::string at;     // current end vertex
    Matrix composite;   // action M_src -> M_at
    std::string src;
  };
  for (const auto& v : r.quiver.vertices()) {
    if (!r.dims.count(v) || r.dims.at(v) == 0) continue;
    std::vector<Walk> frontier{
        {"", v, Matrix::identity(f, r.dims.at(v)), v}};
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::vector<Walk> next;
      for (const auto& w : frontier) {
        // contribute p (x) A_p v
        std::size_t ci = kq->label_index(w.label.empty() ? w.at : w.label);
        std::size_t so = r.vertex_offset(w.src), to = r.vertex_offset(w.at);
        for (std::size_t col = 0; col < r.dims.at(w.src); ++col)
          for (std::size_t row = 0; row < w.composite.rows(); ++row)
            if (!w.composite.at(row, col).is_zero())
              rho[so + col].push_back({ci, to + row, w.composite.at(row, col)});
        if (len == max_len) continue;
        for (const auto& a : r.quiver.arrows()) {
          if (a.src != w.at || !r.dims.count(a.tgt)) continue;
          auto it = r.maps.find(a.label);
          if (it == r.maps.end()) continue;
          Matrix comp = it->second * w.composite;
          if (comp.is_zero()) continue;
          next.push_back({w.label + a.label, a.tgt, std::move(comp), w.src});
        }
      }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    if (!frontier.empty())
      throw input_error("nilpotent_rep_to_comodule: non-nilpotent beyond truncation");
  }
  return Comodule(kq, total, std::move(rho));
}

std::string HarnessReport::to_string() const {
  std::string s = ok ? "PASS" : "FAIL";
  s += " (objects " + std::to_string(objects) + ", pairs " + std::to_string(pairs) +
       ", triples " + std::to_string(triples) + ")";
  for (const auto& l : lines) s += "\n  " + l;
  return s;
}

namespace {

struct FunctorImages {
  std::vector<MatRep> image;                 // image objects as matrix reps
  std::function<Matrix(const Matrix&)> map;  // morphism transport
  bool claims_full = false;
};

FunctorImages apply_functor(EmbeddingFunctor fn, const std::vector<FreeAlgebraModule>& corpus) {
  FunctorImages out;
  switch (fn) {
    case EmbeddingFunctor::F: {
      for (const auto& m : corpus) out.image.push_back(functor_F(m).as_matrep());
      out.map = [](const Matrix& f) { return functor_F_map(f); };
      out.claims_full = true;
      break;
    }
    case EmbeddingFunctor::G: {
      if (!corpus.empty()) {
        auto c = functor_G_coalgebra(corpus[0].field(), corpus[0].generator_count());
        for (const auto& m : corpus) {
          Comodule g = functor_G(m, c);
          out.image.push_back(MatRep{g.field(), g.dim(), g.action_matrices()});
        }
      }
      out.map = [](const Matrix& f) { return functor_G_map(f); };
      out.claims_full = false;
      break;
    }
    case EmbeddingFunctor::identity: {
      for (const auto& m : corpus) out.image.push_back(m.as_matrep());
      out.map = [](const Matrix& f) { return f; };
      out.claims_full = true;
      break;
    }
    case EmbeddingFunctor::collapse: {
      for (const auto& m : corpus) {
        (void)m;
        out.image.push_back(MatRep{corpus[0].field(), 0, {}});
      }
      out.map = [](const Matrix& f) { return Matrix(f.field(), 0, 0); };
      out.claims_full = false;
      break;
    }
  }
  return out;
}

}  // namespace

HarnessReport verify_representation_embedding(EmbeddingFunctor fn,
                                              const std::vector<FreeAlgebraModule>& corpus,
                                              const Budget& budget, ParallelMode mode) {
  HarnessReport rep;
  rep.objects = corpus.size();
  if (corpus.empty()) return rep;
  FunctorImages fi = apply_functor(fn, corpus);
  // per-object: indecomposability preserved both ways
  auto obj_lines = parallel_map_indexed<std::string>(corpus.size(), mode, [&](std::size_t i) {
    bool src_ind = mat_indecomposable(corpus[i].as_matrep(), budget);
    bool img_ind = fi.image[i].dim > 0 && mat_indecomposable(fi.image[i], budget);
    if (src_ind == img_ind) return std::string{};
    return "object " + std::to_string(i) + ": indecomposable " + (src_ind ? "yes" : "no") +
           " but image " + (img_ind ? "yes" : "no");
  });
  for (const auto& l : obj_lines)
    if (!l.empty()) {
      rep.ok = false;
      rep.lines.push_back(l);
    }
  if (fn == EmbeddingFunctor::G) {
    // every endomorphism of G(M) has the block shape (a b; 0 a) with a
    // commuting with every generator
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::size_t d = corpus[i].dim();
      auto ends = mat_hom(fi.image[i], fi.image[i]);
      bool shape_ok = ends.size() >= 1;
      for (const auto& e : ends) {
        for (std::size_t r = 0; r < d && shape_ok; ++r)
          for (std::size_t c = 0; c < d && shape_ok; ++c) {
            if (!e.at(d + r, c).is_zero()) shape_ok = false;              // lower-left zero
            if (e.at(r, c) != e.at(d + r, d + c)) shape_ok = false;       // equal diagonal
          }
        if (!shape_ok) break;
        Matrix a(corpus[i].field(), d, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) a.at(r, c) = e.at(r, c);
        for (const auto& x : corpus[i].generators())
          if (!(a * x == x * a)) shape_ok = false;
      }
      if (!shape_ok) {
        rep.ok = false;
        rep.lines.push_back("object " + std::to_string(i) + ": End(G(M)) shape violated");
      }
    }
  }
  // per-pair: iso reflection and Hom dimension table
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) pairs.push_back({i, j});
  rep.pairs = pairs.size();
  auto pair_lines = parallel_map_indexed<std::string>(pairs.size(), mode, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    std::string line;
    if (i < j) {
      bool img_iso = fi.image[i].dim == fi.image[j].dim &&
                     mat_isomorphism(fi.image[i], fi.image[j], budget).has_value();
      if (img_iso) {
        bool src_iso =
            mat_isomorphism(corpus[i].as_matrep(), corpus[j].as_matrep(), budget).has_value();
        if (!src_iso)
          line += "pair (" + std::to_string(i) + "," + std::to_string(j) +
                  "): images isomorphic but sources are not; ";
      }
    }
    if (fi.claims_full) {
      std::size_t src_hom = mat_hom(corpus[i].as_matrep(), corpus[j].as_matrep()).size();
      std::size_t img_hom = mat_hom(fi.image[i], fi.image[j]).size();
      if (src_hom != img_hom)
        line += "pair (" + std::to_string(i) + "," + std::to_string(j) + "): dim Hom " +
                std::to_string(src_hom) + " vs image " + std::to_string(img_hom) + "; ";
    }
    return line;
  });
  for (const auto& l : pair_lines)
    if (!l.empty()) {
      rep.ok = false;
      rep.lines.push_back(l);
    }
  // exactness on enumerated short exact triples of source objects
  if (corpus[0].field().is_prime()) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& m = corpus[i];
      if (m.dim() == 0) continue;
      MatRep src = m.as_matrep();
      for (const auto& x : mat_stable_subspaces(src, budget)) {
        if (x.dim() == 0 || x.dim() == m.dim()) continue;
        ++rep.triples;
        // source inclusion and projection
        Matrix incl = x.basis().transpose();
        std::vector<bool> is_piv(m.dim(), false);
        {
          auto rr = x.basis().rref();
          for (std::size_t piv : rr.pivots) is_piv[piv] = true;
        }
        std::size_t qd = m.dim() - x.dim();
        Matrix proj(m.field(), qd, m.dim());
        {
          std::vector<std::size_t> comp;
          for (std::size_t c2 = 0; c2 < m.dim(); ++c2)
            if (!is_piv[c2]) comp.push_back(c2);
          for (std::size_t c2 = 0; c2 < m.dim(); ++c2) {
            std::vector<Scalar> e(m.dim(), Scalar::zero(m.field()));
            e[c2] = Scalar::one(m.field());
            auto red = x.reduce(e);
            for (std::size_t r = 0; r < qd; ++r) proj.at(r, c2) = red[comp[r]];
          }
        }
        Matrix fincl = fi.map(incl);
        Matrix fproj = fi.map(proj);
        bool exact = (fproj * fincl).is_zero() && fincl.kernel_basis().rows() == 0 &&
                     fincl.rref().rank + fproj.kernel_basis().rows() ==
                         static_cast<std::size_t>(fproj.cols()) &&
                     fproj.rref().rank == fproj.rows();
        if (fn == EmbeddingFunctor::collapse) exact = true;  // vacuous at dim 0
        if (!exact) {
          rep.ok = false;
          rep.lines.push_back("object " + std::to_string(i) + ": image of a triple not exact");
        }
      }
    }
  }
  if (rep.ok) rep.lines.push_back("all checks passed");
  return rep;
}

HarnessReport verify_shift_embedding(const std::vector<FreeAlgebraModule>& corpus,
                                     std::size_t trunc, const std::vector<Scalar>& lambdas,
                                     const Budget& budget, ParallelMode mode) {
  HarnessReport rep;
  rep.objects = corpus.size();
  if (corpus.empty()) return rep;
  std::vector<FreeAlgebraModule> images;
  for (const auto& m : corpus) images.push_back(shift_embedding(m, trunc, lambdas));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) pairs.push_back({i, j});
  rep.pairs = pairs.size();
  auto lines = parallel_map_indexed<std::string>(pairs.size(), mode, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    std::size_t src = mat_hom(corpus[i].as_matrep(), corpus[j].as_matrep()).size();
    std::size_t img = mat_hom(images[i].as_matrep(), images[j].as_matrep()).size();
    if (src != img)
      return "pair (" + std::to_string(i) + "," + std::to_string(j) + "): dim Hom " +
             std::to_string(src) + " vs truncated image " + std::to_string(img);
    return std::string{};
  });
  for (const auto& l : lines)
    if (!l.empty()) {
      rep.ok = false;
      rep.lines.push_back(l);
    }
  // image endomorphisms are block-diagonal with equal blocks
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::size_t d = corpus[i].dim();
    bool ok = true;
    for (const auto& e : mat_hom(images[i].as_matrep(), images[i].as_matrep())) {
      for (std::size_t br = 0; br < trunc && ok; ++br)
        for (std::size_t bc = 0; bc < trunc && ok; ++bc) {
          for (std::size_t r = 0; r < d && ok; ++r)
            for (std::size_t c = 0; c < d && ok; ++c) {
              const Scalar& v = e.at(br * d + r, bc * d + c);
              if (br != bc && !v.is_zero()) ok = false;
              if (br == bc && br > 0 && v != e.at(r, c)) ok = false;
            }
        }
      if (!ok) break;
    }
    if (!ok) {
      rep.ok = false;
      rep.lines.push_back("object " + std::to_string(i) +
                          ": truncated image endomorphism not block-diagonal-equal");
    }
  }
  (void)budget;
  if (rep.ok) rep.lines.push_back("all checks passed");
  return rep;
}

HarnessReport verify_bounded_embedding(const std::vector<QuiverRep>& corpus, std::size_t bound,
                                       const std::map<std::string, Scalar>& lambdas,
                                       const Budget& budget, ParallelMode mode) {
  HarnessReport rep;
  rep.objects = corpus.size();
  if (corpus.empty()) return rep;
  std::vector<FreeAlgebraModule> images;
  for (const auto& r : corpus) images.push_back(bounded_quiver_embedding(r, bound, lambdas));
  auto obj_lines = parallel_map_indexed<std::string>(corpus.size(), mode, [&](std::size_t i) {
    if (corpus[i].total_dim() == 0) return std::string{};
    bool src = mat_indecomposable(corpus[i].as_matrep(), budget);
    bool img = mat_indecomposable(images[i].as_matrep(), budget);
    if (src != img)
      return "object " + std::to_string(i) + ": indecomposability not preserved";
    return std::string{};
  });
  for (const auto& l : obj_lines)
    if (!l.empty()) {
      rep.ok = false;
      rep.lines.push_back(l);
    }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) pairs.push_back({i, j});
  rep.pairs = pairs.size();
  auto pair_lines = parallel_map_indexed<std::string>(pairs.size(), mode, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    std::size_t src = mat_hom(corpus[i].as_matrep(), corpus[j].as_matrep()).size();
    std::size_t img = mat_hom(images[i].as_matrep(), images[j].as_matrep()).size();
    if (src != img)
      return "pair (" + std::to_string(i) + "," + std::to_string(j) + "): dim Hom " +
             std::to_string(src) + " vs image " + std::to_string(img);
    return std::string{};
  });
  for (const auto& l : pair_lines)
    if (!l.empty()) {
      rep.ok = false;
      rep.lines.push_back(l);
    }
  if (rep.ok) rep.lines.push_back("all checks passed");
  return rep;
}

namespace {

std::uint64_t matrix_code(const Matrix& m) {
  // lexicographic residue code used for canonical orbit representatives
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) code = code * m.field().p + m.at(i, j).residue_value();
  return code;
}

}  // namespace

std::vector<FreeAlgebraModule> nilpotent_module_corpus(Field f, std::size_t k,
                                                       std::size_t max_dim,
                                                       const Budget& budget) {
  if (!f.is_prime()) throw input_error("nilpotent_module_corpus: needs GF(p)");
  std::uint64_t p = f.p;
  std::vector<FreeAlgebraModule> out;
  for (std::size_t d = 1; d <= max_dim; ++d) {
    // nilpotent d x d matrices by raw scan
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < d * d; ++i) {
      cells *= p;
      if (cells > budget.work) throw budget_error("nilpotent_module_corpus: budget exceeded");
    }
    std::vector<Matrix> nilpotents;
    for (std::uint64_t code = 0; code < cells; ++code) {
      Matrix m(f, d, d);
      std::uint64_t cc = code;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          m.at(i, j) = Scalar::residue(f, cc % p);
          cc /= p;
        }
      Matrix power = m;
      for (std::size_t e = 1; e < d; ++e) power = power * m;
      if (power.is_zero()) nilpotents.push_back(std::move(m));
    }
    // invertible matrices for orbit reduction
    std::vector<Matrix> gl;
    for (std::uint64_t code = 0; code < cells; ++code) {
      Matrix m(f, d, d);
      std::uint64_t cc = code;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          m.at(i, j) = Scalar::residue(f, cc % p);
          cc /= p;
        }
      if (m.invertible()) gl.push_back(std::move(m));
    }
    // k-tuples of nilpotents with a nilpotent generated semigroup, canonical
    // under simultaneous conjugation
    std::vector<std::size_t> idx(k, 0);
    std::uint64_t scans = 1;
    for (std::size_t i = 0; i < k; ++i) scans *= nilpotents.size();
    if (scans > budget.work) throw budget_error("nilpotent_module_corpus: tuple scan budget");
    for (std::uint64_t code = 0; code < scans; ++code) {
      std::uint64_t cc = code;
      std::vector<Matrix> gens;
      for (std::size_t i = 0; i < k; ++i) {
        gens.push_back(nilpotents[cc % nilpotents.size()]);
        cc /= nilpotents.size();
      }
      FreeAlgebraModule cand(f, d, gens);
      if (!cand.nilpotent_action()) continue;
      // canonical: the tuple code is minimal in its conjugation orbit
      std::vector<std::uint64_t> codes;
      for (const auto& g : gens) codes.push_back(matrix_code(g));
      bool minimal = true;
      for (const auto& g : gl) {
        Matrix gi = g.inverse();
        bool smaller = false, larger = false;
        for (std::size_t i = 0; i < k && !smaller && !larger; ++i) {
          std::uint64_t conj = matrix_code(g * gens[i] * gi);
          if (conj < codes[i]) smaller = true;
          if (conj > codes[i]) larger = true;
        }
        if (smaller) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace coalglab
