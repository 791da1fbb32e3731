#include "coalglab/ext.hpp"

namespace coalglab {

Quiver ExtQuiver::to_quiver() const {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      for (std::size_t k = 0; k < mult[i][j]; ++k)
        arrows.push_back({"e_" + vertices[i] + "_" + vertices[j] + "_" + std::to_string(k + 1),
                          vertices[i], vertices[j]});
  return Quiver(vertices, std::move(arrows));
}

std::size_t ext1_dim(const Coalgebra& c, const std::vector<Scalar>& g_top,
                     const std::vector<Scalar>& g_soc) {
  Subspace z = c.skew_primitives(g_top, g_soc);
  bool same = g_top == g_soc;
  return z.dim() - (same ? 0 : 1);
}

ExtQuiver ext_quiver(const Coalgebra& c) {
  auto gl = c.grouplikes();
  if (!gl.pointed) throw input_error("ext_quiver: coalgebra is not pointed");
  ExtQuiver q;
  q.vertices = gl.labels;
  q.mult.assign(gl.elements.size(),
                std::vector<std::size_t>(gl.elements.size(), 0));
  for (std::size_t i = 0; i < gl.elements.size(); ++i)
    for (std::size_t j = 0; j < gl.elements.size(); ++j)
      q.mult[i][j] = ext1_dim(c, gl.elements[i], gl.elements[j]);
  return q;
}

namespace {

void all_subvectors(const DimensionVector& d,
                    std::vector<DimensionVector>& out) {
  // the full downset of d in componentwise order
  std::vector<std::pair<std::string, std::size_t>> items(d.entries.begin(), d.entries.end());
  std::vector<std::size_t> cur(items.size(), 0);
  for (;;) {
    DimensionVector v;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (cur[i]) v.entries[items[i].first] = cur[i];
    out.push_back(v);
    std::size_t i = 0;
    while (i < items.size()) {
      if (cur[i] < items[i].second) {
        ++cur[i];
        for (std::size_t j = 0; j < i; ++j) cur[j] = 0;
        break;
      }
      ++i;
    }
    if (i == items.size()) break;
  }
}

Subspace cf_dimvec_impl(const Coalgebra& c, const GrouplikeInfo& gl, const DimensionVector& d,
                        std::map<std::string, Subspace>& memo) {
  auto key = d.to_string();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Subspace result(c.field(), c.dim());
  if (d.total() == 1) {
    // the simple subcoalgebra at the supported vertex
    for (const auto& [label, count] : d.entries) {
      if (count == 0) continue;
      for (std::size_t g = 0; g < gl.labels.size(); ++g)
        if (gl.labels[g] == label)
          result = Subspace::span_of(c.field(), c.dim(), gl.elements[g]);
    }
    if (result.is_zero()) throw input_error("cf_dimvec: unknown vertex label in " + key);
  } else if (d.total() > 1) {
    // sum of wedge(cf(f), cf(e)) over nontrivial decompositions e + f = d
    std::vector<DimensionVector> downset;
    all_subvectors(d, downset);
    for (const auto& e : downset) {
      if (e.total() == 0 || e.total() == d.total()) continue;
      DimensionVector f;
      for (const auto& [label, count] : d.entries) {
        auto ite = e.entries.find(label);
        std::size_t ec = ite == e.entries.end() ? 0 : ite->second;
        if (count > ec) f.entries[label] = count - ec;
      }
      Subspace cfe = cf_dimvec_impl(c, gl, e, memo);
      Subspace cff = cf_dimvec_impl(c, gl, f, memo);
      result = Subspace::sum(result, c.wedge(cff, cfe));
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

Subspace cf_dimvec(const Coalgebra& c, const DimensionVector& d, const Budget& budget) {
  auto gl = c.grouplikes();
  if (!gl.pointed) throw input_error("cf_dimvec: coalgebra is not pointed");
  std::uint64_t downset_size = 1;
  for (const auto& [label, count] : d.entries) {
    downset_size *= count + 1;
    if (downset_size > budget.work) throw budget_error("cf_dimvec: downset budget exceeded");
  }
  std::map<std::string, Subspace> memo;
  return cf_dimvec_impl(c, gl, d, memo);
}

namespace {

void validate_presentation(const ArrowCountQuiver& q) {
  if (q.vertex_multiplicity.size() != q.vertices.size())
    throw input_error("arrow-count quiver: one multiplicity per vertex class required");
  for (const auto& [pair, count] : q.pair_counts) {
    (void)count;
    if (pair.first >= q.vertices.size() || pair.second >= q.vertices.size())
      throw input_error("arrow-count quiver: pair index out of range");
  }
}

}  // namespace

bool is_locally_finite(const ArrowCountQuiver& q) {
  validate_presentation(q);
  for (const auto& [pair, count] : q.pair_counts)
    if (count.infinite) return false;
  return true;
}

bool is_f_finite(const ArrowCountQuiver& q) {
  validate_presentation(q);
  // in-bound degree at v: sum over u of count(u -> v) * multiplicity(u)
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    for (const auto& [pair, count] : q.pair_counts) {
      if (pair.second != v) continue;
      if (count.infinite) return false;
      if (count.count > 0 && q.vertex_multiplicity[pair.first].infinite) return false;
    }
  }
  return true;
}

WildnessWitness wildness_witness(const Coalgebra& c) {
  auto gl = c.grouplikes();
  if (!gl.pointed) throw input_error("wildness_witness: coalgebra is not pointed");
  WildnessWitness w;
  for (std::size_t i = 0; i < gl.elements.size(); ++i)
    for (std::size_t j = 0; j < gl.elements.size(); ++j) {
      std::size_t mult = ext1_dim(c, gl.elements[i], gl.elements[j]);
      if (mult < 3) continue;
      // three independent extension classes plus the grouplikes span an
      // embedded wild subcoalgebra
      Subspace z = c.skew_primitives(gl.elements[i], gl.elements[j]);
      Subspace b(c.field(), c.dim());
      if (!(gl.elements[i] == gl.elements[j])) {
        std::vector<Scalar> diff(c.dim(), Scalar::zero(c.field()));
        for (std::size_t t = 0; t < c.dim(); ++t)
          diff[t] = gl.elements[j][t] - gl.elements[i][t];
        b = Subspace::span_of(c.field(), c.dim(), diff);
      }
      std::vector<std::vector<Scalar>> rows;
      rows.push_back(gl.elements[i]);
      if (i != j) rows.push_back(gl.elements[j]);
      std::size_t taken = 0;
      for (std::size_t r = 0; r < z.dim() && taken < 3; ++r) {
        auto cand = b.reduce(z.basis().row(r));
        bool nz = false;
        for (const auto& s : cand) nz = nz || !s.is_zero();
        if (!nz) continue;
        Subspace so_far = Subspace::from_vectors(c.field(), c.dim(), rows);
        if (so_far.contains(cand)) continue;
        rows.push_back(cand);
        ++taken;
      }
      if (taken < 3) continue;
      w.found = true;
      w.kind = i == j ? "(KQ')_1" : "Gamma3";
      w.top_label = gl.labels[i];
      w.socle_label = gl.labels[j];
      w.basis = Subspace::from_vectors(c.field(), c.dim(), rows);
      if (!c.is_subcoalgebra(w.basis))
        throw std::logic_error("wildness_witness: span is not a subcoalgebra");
      auto rep = c.restrict_to(w.basis).check();
      if (!rep.ok) throw std::logic_error("wildness_witness: witness fails the coalgebra check");
      w.message = "dim Ext^1(S_" + w.top_label + ", S_" + w.socle_label + ") = " +
                  std::to_string(mult) + " >= 3: embedded " + w.kind + " subcoalgebra";
      return w;
    }
  w.message = "no Ext-count witness (not a tameness certificate)";
  return w;
}

Subspace wild_locality_subcoalgebra(const std::vector<Comodule>& images) {
  if (images.empty()) throw input_error("wild_locality_subcoalgebra: empty image list");
  Subspace h(images[0].field(), images[0].coalgebra()->dim());
  for (const auto& m : images) h = Subspace::sum(h, m.cf());
  if (!images[0].coalgebra()->is_subcoalgebra(h))
    throw std::logic_error("wild_locality_subcoalgebra: sum of cf's not a subcoalgebra");
  return h;
}

}  // namespace coalglab
