#pragma once

#include <vector>

#include "coalglab/poly.hpp"
#include "coalglab/subspace.hpp"

namespace coalglab {

class StructureAlgebra;

// Result of quotienting by a two-sided ideal: the quotient algebra and the
// projection matrix (quotient-coordinates x dim).
struct AlgebraQuotient;

// Finite-dimensional unital associative algebra given by structure constants.
// Used for dual (convolution) algebras and endomorphism rings.
class StructureAlgebra {
 public:
  StructureAlgebra(Field f, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  void set_product(std::size_t i, std::size_t j, std::vector<Scalar> coords);
  void set_unit(std::vector<Scalar> coords);
  const std::vector<Scalar>& unit() const { return unit_; }
  const std::vector<Scalar>& basis_product(std::size_t i, std::size_t j) const;

  std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b) const;
  Matrix left_mult_matrix(const std::vector<Scalar>& a) const;

  bool check_associative_unital() const;
  bool is_commutative() const;

  // Jacobson radical as a subspace of the coordinate space. Trace-form kernel
  // in characteristic 0; the Ivanyos-Ronyai chain of characteristic-polynomial
  // coefficient conditions over GF(p). The result is verified nilpotent.
  Subspace radical() const;

  AlgebraQuotient quotient_by_ideal(const Subspace& ideal) const;

  // All K-algebra homomorphisms A -> K, as coordinate vectors of values on the
  // basis. May throw undecided_error in Q mode when a factorization cannot be
  // certified.
  std::vector<std::vector<Scalar>> characters() const;

  // Smallest two-sided ideal containing the given subspace.
  Subspace ideal_closure(Subspace s) const;

  // span{xy : x in a, y in b}
  Subspace subspace_product(const Subspace& a, const Subspace& b) const;

  bool subspace_is_nilpotent(const Subspace& s, std::size_t max_steps = 0) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> table_;  // table_[i*dim+j] = coords of b_i b_j
  std::vector<Scalar> unit_;

  Subspace radical_char0() const;
  Subspace radical_charp() const;
};

struct AlgebraQuotient {
  StructureAlgebra algebra;
  Matrix projection;
};

}  // namespace coalglab
