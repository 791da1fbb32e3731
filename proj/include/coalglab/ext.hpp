#pragma once

#include <map>

#include "coalglab/comodule.hpp"

namespace coalglab {

// Ext quiver of a pointed coalgebra: vertices are the grouplikes, and the
// number of arrows i -> j is dim Ext^1(S_i, S_j), the space of classes of
// extensions 0 -> S_j -> Y -> S_i -> 0. With the library's path-splitting
// convention this makes ext_quiver(path_coalgebra(Q, n)) = Q for n >= 2.
struct ExtQuiver {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::size_t>> mult;  // mult[i][j] = arrows i -> j
  Quiver to_quiver() const;
};

// dim Ext^1(S_top, S_soc) from the skew-primitive cocycle space modulo the
// coboundary line.
std::size_t ext1_dim(const Coalgebra& c, const std::vector<Scalar>& g_top,
                     const std::vector<Scalar>& g_soc);

ExtQuiver ext_quiver(const Coalgebra& c);

// Upper-bound recursion for the coefficient coalgebra of a dimension vector:
// base case a single simple, inductive case the sum of wedge(cf(f), cf(e))
// over all nontrivial decompositions e + f = d, memoized over the downset.
Subspace cf_dimvec(const Coalgebra& c, const DimensionVector& d, const Budget& budget = Budget{});

// Arrow-count presentation allowing symbolically infinite counts and vertex
// classes with infinite multiplicity.
struct ArrowCount {
  bool infinite = false;
  std::size_t count = 0;
  static ArrowCount inf() { return {true, 0}; }
  static ArrowCount fin(std::size_t n) { return {false, n}; }
};

struct ArrowCountQuiver {
  std::vector<std::string> vertices;
  std::vector<ArrowCount> vertex_multiplicity;  // instances of each vertex class
  std::map<std::pair<std::size_t, std::size_t>, ArrowCount> pair_counts;
};

bool is_locally_finite(const ArrowCountQuiver& q);
bool is_f_finite(const ArrowCountQuiver& q);

struct WildnessWitness {
  bool found = false;
  std::string kind;  // "Gamma3" or "(KQ')_1"
  std::string top_label, socle_label;
  Subspace basis;  // spans a subcoalgebra of C
  std::string message;
};

// Ext-count wildness scan: a pair with multiplicity >= 3 yields an explicit
// embedded wild subcoalgebra; absence of a witness is NOT a tameness
// certificate.
WildnessWitness wildness_witness(const Coalgebra& c);

// H = cf of the span of claimed embedding images: the finite-dimensional
// subcoalgebra any representation embedding must factor through.
Subspace wild_locality_subcoalgebra(const std::vector<Comodule>& images);

}  // namespace coalglab
