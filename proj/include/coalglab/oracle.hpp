#pragma once

#include "coalglab/comodule.hpp"
#include "coalglab/parallel.hpp"

namespace coalglab {

// Exhaustive iso-class listing of comodules with dimension vector d over a
// pointed GF(p) coalgebra. Built recursively: every comodule is an extension
// of a smaller one by a simple socle summand, so classes are enumerated
// through cocycle spaces with projective normalization, then orbit-reduced.
// Exceeding the work budget is an error, never a silent truncation.
std::vector<Comodule> enumerate_comodules(const CoalgebraPtr& c, const DimensionVector& d,
                                          const Budget& budget = Budget{},
                                          ParallelMode mode = ParallelMode::openmp);

struct ExtensionEnum {
  std::size_t count = 0;                  // = dim Ext^1(S_top, S_soc)
  std::vector<Comodule> representatives;  // length-2 comodules for a class basis
};
// All length-2 coaction data with the given socle and top, modulo equivalence.
ExtensionEnum enumerate_extensions(const CoalgebraPtr& c, const std::string& top_label,
                                   const std::string& socle_label);

// Smallest subcoalgebra containing the coaction coefficients, computed by the
// closure iteration (add tensor-leg components of Delta images until stable).
// Must agree with Comodule::cf.
Subspace min_subcoalgebra_oracle(const Comodule& m, const Budget& budget = Budget{});

// Ground truth for cf_dimvec (ext.hpp): the sum of cf(M) over all M with
// dv(M) = d. Computed over the recursive extension parameterization; since
// the coaction coefficients are affine-linear in the cocycle space, the union
// of cf over a cocycle family is spanned without pointwise enumeration.
Subspace cf_dimvec_oracle(const CoalgebraPtr& c, const DimensionVector& d,
                          const Budget& budget = Budget{},
                          ParallelMode mode = ParallelMode::openmp);

// cocycle data for extensions 0 -> S_g -> M -> M' -> 0; exposed for tests
struct ExtensionSpace {
  Subspace cocycles;     // in K^{m'*n}, stacked (c_t) coordinates
  Subspace coboundaries; // image of the lift-change map
  Matrix complement;     // rows: class representatives basis
};
ExtensionSpace extension_space(const Comodule& mprime, const std::vector<Scalar>& grouplike);
Comodule extension_comodule(const Comodule& mprime, const std::vector<Scalar>& grouplike,
                            const std::vector<Scalar>& cocycle);

}  // namespace coalglab
