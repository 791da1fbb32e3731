#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalglab/algebra.hpp"
#include "coalglab/quiver.hpp"
#include "coalglab/subspace.hpp"

namespace coalglab {

struct DeltaTerm {
  std::size_t j, k;
  Scalar coeff;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::string to_string() const;
};

struct GrouplikeInfo {
  std::vector<std::vector<Scalar>> elements;  // coordinate vectors in C
  std::vector<std::string> labels;            // basis label when available
  bool pointed = false;
};

// Finite-dimensional coalgebra by structure constants over a labeled basis:
// Delta(b_i) = sum over terms (j, k, c) of c * b_j (x) b_k, counit by values.
class Coalgebra {
 public:
  Coalgebra(Field f, std::vector<std::string> labels,
            std::vector<std::vector<DeltaTerm>> delta, std::vector<Scalar> counit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t label_index(const std::string& l) const;
  const std::vector<std::vector<DeltaTerm>>& delta() const { return delta_; }
  const std::vector<Scalar>& counit() const { return counit_; }

  std::vector<Scalar> basis_vector(std::size_t i) const;
  Scalar counit_of(const std::vector<Scalar>& x) const;

  // Delta as an n^2 x n matrix in the library's tensor coordinates
  // (index of b_j (x) b_k is j*n + k).
  const Matrix& delta_matrix() const;
  std::vector<Scalar> delta_of(const std::vector<Scalar>& x) const;
  // (Delta (x) id)Delta(x) in n^3 coordinates, index ((a*n)+b)*n+c
  std::vector<Scalar> delta2_of(const std::vector<Scalar>& x) const;

  // exact verification of coassociativity and the counit laws
  CheckReport check() const;

  // dual convolution algebra C^* on the dual basis
  StructureAlgebra dual_algebra() const;
  std::vector<Scalar> convolve(const std::vector<Scalar>& f,
                               const std::vector<Scalar>& g) const;

  // annihilator subspaces; coordinates of C and C^* share the basis pairing
  static Subspace orthogonal(const Subspace& x) { return x.perp(); }
  // span of all pairwise convolution products {a_r * b_s}
  Subspace ideal_product(const Subspace& a, const Subspace& b) const;

  // wedge(V, W) = preimage of V(x)C + C(x)W under Delta
  Subspace wedge(const Subspace& v, const Subspace& w) const;

  Subspace coradical() const;
  std::vector<Subspace> coradical_filtration() const;

  bool is_subcoalgebra(const Subspace& x) const;
  Coalgebra restrict_to(const Subspace& x,
                        std::optional<std::vector<std::string>> labels = std::nullopt) const;

  // {x : Delta(x) = g(x)x + x(x)h} for grouplikes g, h
  Subspace skew_primitives(const std::vector<Scalar>& g, const std::vector<Scalar>& h) const;

  // May throw undecided_error in Q mode outside the supported fragment.
  GrouplikeInfo grouplikes() const;
  bool is_pointed() const { return grouplikes().pointed; }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b);
  friend bool operator!=(const Coalgebra& a, const Coalgebra& b) { return !(a == b); }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<DeltaTerm>> delta_;
  std::vector<Scalar> counit_;
  mutable std::optional<Matrix> delta_matrix_;
};

// Path coalgebra of a quiver truncated at paths of length <= max_len; paths
// compose left to right and Delta splits a path into prefix (x) suffix, so for
// an arrow alpha: a -> b, Delta(alpha) = a (x) alpha + alpha (x) b.
Coalgebra path_coalgebra(const Quiver& q, std::size_t max_len, Field f = Field::Q(),
                         std::size_t basis_cap = 4096);

// Cosemisimple pointed coalgebra spanned by grouplikes with the given labels.
Coalgebra grouplike_coalgebra(Field f, std::vector<std::string> labels);

// Comatrix coalgebra (dual of the n x n matrix algebra).
Coalgebra comatrix_coalgebra(Field f, std::size_t n);

}  // namespace coalglab
