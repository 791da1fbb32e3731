#pragma once

#include <optional>

#include "coalglab/algebra.hpp"
#include "coalglab/budget.hpp"

namespace coalglab {

// A linear category object presented by matrices: morphisms a -> b are the
// matrices F with b.ops[i] F = F a.ops[i] for every i. Comodules (through
// their dual-basis actions), free-algebra modules and quiver representations
// all reduce to this view.
struct MatRep {
  Field field = Field::Q();
  std::size_t dim = 0;
  std::vector<Matrix> ops;
};

std::vector<Matrix> mat_hom(const MatRep& a, const MatRep& b);

struct MatEnd {
  std::vector<Matrix> basis;
  StructureAlgebra algebra;
  Subspace radical;
};
MatEnd mat_end(const MatRep& m);

bool subspace_stable(const MatRep& m, const Subspace& x);
MatRep mat_restrict(const MatRep& m, const Subspace& x);

// Direct-sum decomposition into indecomposables: returns one embedding matrix
// (dim x piece-dim) per piece; the horizontal concatenation is invertible and
// every column space is ops-stable. GF(p) mode is complete; Q mode throws
// undecided_error when a division-algebra check is inconclusive.
std::vector<Subspace> mat_decompose(const MatRep& m, const Budget& budget = Budget{});
bool mat_indecomposable(const MatRep& m, const Budget& budget = Budget{});

// Isomorphism witness; std::nullopt is a certified negative at desk scale
// (exhaustive combination scan over GF(p), polynomial-identity grid over Q,
// decompose-and-match fallback).
std::optional<Matrix> mat_isomorphism(const MatRep& a, const MatRep& b,
                                      const Budget& budget = Budget{});

// Exact test for two objects already known indecomposable: local endomorphism
// rings make "some hom-basis product g*f invertible" equivalent to isomorphy.
std::optional<Matrix> mat_isomorphism_indec(const MatRep& a, const MatRep& b);

// All ops-stable subspaces over GF(p), via the RREF-shape scan.
std::vector<Subspace> mat_stable_subspaces(const MatRep& m, const Budget& budget = Budget{});

}  // namespace coalglab
