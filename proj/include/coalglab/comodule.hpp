#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coalglab/budget.hpp"
#include "coalglab/coalgebra.hpp"

namespace coalglab {

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

// rho(x_s) = sum over terms of coeff * b_{c_index} (x) x_{target}
struct RhoTerm {
  std::size_t c_index, target;
  Scalar coeff;
};

// Finitely supported multiplicity vector over grouplike labels.
struct DimensionVector {
  std::map<std::string, std::size_t> entries;

  std::size_t total() const;
  std::string to_string() const;
  friend bool operator==(const DimensionVector& a, const DimensionVector& b) {
    return a.entries == b.entries;
  }
  friend bool operator!=(const DimensionVector& a, const DimensionVector& b) {
    return !(a == b);
  }
  bool leq(const DimensionVector& other) const;  // componentwise
  static DimensionVector sum(const DimensionVector& a, const DimensionVector& b);
};

// Finite-dimensional left comodule over a shared coalgebra.
class Comodule {
 public:
  Comodule(CoalgebraPtr over, std::size_t dim, std::vector<std::vector<RhoTerm>> rho);

  static Comodule zero(CoalgebraPtr c);
  // 1-dimensional comodule on a grouplike: rho(x) = g (x) x
  static Comodule simple(CoalgebraPtr c, const std::vector<Scalar>& grouplike);
  // C as a left comodule over itself via Delta
  static Comodule regular(CoalgebraPtr c);

  const CoalgebraPtr& coalgebra() const { return over_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<RhoTerm>>& rho() const { return rho_; }
  const Field& field() const { return over_->field(); }

  CheckReport check() const;

  // rho of an arbitrary vector, in C(x)M coordinates (index i*dim + t)
  std::vector<Scalar> rho_of(const std::vector<Scalar>& v) const;

  // right C^*-action matrix of the dual basis functional b_i^*, and of an
  // arbitrary functional; columns act on comodule coordinates
  const std::vector<Matrix>& action_matrices() const;
  Matrix action_of(const std::vector<Scalar>& functional) const;

  // coefficient coalgebra cf(M): span of the first-leg coefficients
  Subspace cf() const;
  // {a in C^* : x . a = 0 for all x}, computed through the action route
  Subspace annihilator() const;

  friend Comodule direct_sum(const Comodule& a, const Comodule& b);
  Comodule base_change(const Matrix& p) const;  // conjugate by invertible p

 private:
  CoalgebraPtr over_;
  std::size_t dim_;
  std::vector<std::vector<RhoTerm>> rho_;
  mutable std::optional<std::vector<Matrix>> action_;
};

bool same_coalgebra(const Comodule& a, const Comodule& b);

// X given by rows in M coordinates; stability under every dual-basis action
bool is_subcomodule(const Comodule& m, const Subspace& x);
// comodule structure on a coaction-stable subspace; embedding = x.basis()^T
Comodule restrict_to_subcomodule(const Comodule& m, const Subspace& x);

struct QuotientComodule {
  Comodule comodule;
  Matrix projection;  // (m.dim - x.dim) x m.dim
};
QuotientComodule quotient_comodule(const Comodule& m, const Subspace& x);

// basis of intertwiners f with rho_N f = (id (x) f) rho_M, i.e. matrices
// commuting with every dual-basis action pair
std::vector<Matrix> hom_space(const Comodule& m, const Comodule& n);

struct EndRing {
  std::vector<Matrix> basis;
  StructureAlgebra algebra;  // composition structure constants
  Subspace radical;          // in algebra coordinates; verified nilpotent
};
EndRing end_ring(const Comodule& m);

// socle = largest subcomodule realized over the coradical
Subspace socle(const Comodule& m);
// multiplicity of the simple attached to a grouplike inside the socle
std::size_t socle_multiplicity(const Comodule& m, const std::vector<Scalar>& grouplike);

// Jordan-Hoelder multiplicities over a pointed coalgebra (iterated socles)
DimensionVector dimension_vector(const Comodule& m);

struct DecompPiece {
  Comodule piece;
  Matrix embedding;  // m.dim x piece.dim, columns are the embedded basis
};
// Fitting-style direct-sum decomposition into indecomposables. GF(p) mode is
// complete; Q mode throws undecided_error when a division-algebra check is
// inconclusive.
std::vector<DecompPiece> decompose(const Comodule& m, const Budget& budget = Budget{});
bool is_indecomposable(const Comodule& m, const Budget& budget = Budget{});

// explicit isomorphism search; std::nullopt is a certified negative at desk
// scale (exhaustive over GF(p) within budget, polynomial-identity grid over Q)
std::optional<Matrix> find_isomorphism(const Comodule& a, const Comodule& b,
                                       const Budget& budget = Budget{});

// right comodule: rho(x_s) = sum x_{target} (x) d_{c_index}
struct RightRhoTerm {
  std::size_t target, c_index;
  Scalar coeff;
};

class RightComodule {
 public:
  RightComodule(CoalgebraPtr over, std::size_t dim, std::vector<std::vector<RightRhoTerm>> rho);
  static RightComodule regular(CoalgebraPtr c);  // C with rho = Delta

  const CoalgebraPtr& coalgebra() const { return over_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<RightRhoTerm>>& rho() const { return rho_; }

  CheckReport check() const;
  std::vector<Scalar> rho_of(const std::vector<Scalar>& v) const;  // M(x)D coords

 private:
  CoalgebraPtr over_;
  std::size_t dim_;
  std::vector<std::vector<RightRhoTerm>> rho_;
};

// left-C right-D bicomodule on one underlying space
struct Bicomodule {
  Comodule left;        // over C
  RightComodule right;  // over D
  bool compatible() const;
};

// cotensor M box_D N inside M (x) N (index s*dimN + u)
Subspace cotensor(const RightComodule& m, const Comodule& n);
// with a commuting left structure, the cotensor carries an induced coaction
Comodule cotensor_left(const Bicomodule& m, const Comodule& n);

struct ShortExactTriple {
  Subspace sub_space;
  Comodule sub, quotient;
  Matrix inclusion;   // m.dim x k
  Matrix projection;  // (m.dim - k) x m.dim
};
// All coaction-stable subspaces over GF(p) (exhaustive, budgeted); over Q the
// finite lattice generated by socle-series refinements.
std::vector<ShortExactTriple> short_exact_triples(const Comodule& m,
                                                  const Budget& budget = Budget{});

// All subcomodules of m over a pointed GF(p) coalgebra, enumerated by climbing
// the socle lattice one simple layer at a time (complete: every subcomodule
// meets the socle of the stage it sits over).
std::vector<Subspace> all_subcomodules(const Comodule& m, const Budget& budget = Budget{});

}  // namespace coalglab
