#pragma once

#include <vector>

#include "coalglab/budget.hpp"
#include "coalglab/matrix.hpp"

namespace coalglab {

// Subspace of K^n held in canonical reduced row echelon form, so equality of
// subspaces is entry equality of the basis matrices.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient)  // zero subspace
      : basis_(f, 0, ambient) {}

  static Subspace full(Field f, std::size_t ambient);
  static Subspace from_rows(const Matrix& rows);
  static Subspace from_vectors(Field f, std::size_t ambient,
                               const std::vector<std::vector<Scalar>>& vecs);
  static Subspace span_of(Field f, std::size_t ambient, const std::vector<Scalar>& v);

  const Matrix& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient(); }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);

  // Orthogonal complement with respect to the standard dot pairing; this is
  // the coordinate form of X^perp for dual-space computations.
  Subspace perp() const;

  // v minus its projection onto the row space (residual after elimination).
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  // Coordinates of a member vector in this basis; throws if not a member.
  std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const;

 private:
  Matrix basis_;  // RREF, full row rank
};

// All subspaces of GF(p)^ambient of dimension <= max_dim, by RREF shape
// (pivot-column choice plus free entries). Throws budget_error when the scan
// would exceed the work cap. Deterministic order.
std::vector<Subspace> enumerate_subspaces(Field f, std::size_t ambient,
                                          std::size_t max_dim, const Budget& budget);

}  // namespace coalglab
