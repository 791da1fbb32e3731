#pragma once

#include "coalglab/comodule.hpp"
#include "coalglab/matrep.hpp"
#include "coalglab/parallel.hpp"

namespace coalglab {

// Module over a free algebra in k generators, by action matrices. The
// nilpotent-action check certifies membership in the full subcategory where
// the generated semigroup acts nilpotently.
class FreeAlgebraModule {
 public:
  FreeAlgebraModule(Field f, std::size_t dim, std::vector<Matrix> generators);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t generator_count() const { return gens_.size(); }
  const std::vector<Matrix>& generators() const { return gens_; }

  bool nilpotent_action() const;
  MatRep as_matrep() const { return MatRep{field_, dim_, gens_}; }

  friend FreeAlgebraModule direct_sum(const FreeAlgebraModule& a, const FreeAlgebraModule& b);

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Matrix> gens_;
};

// Finite quiver representation: per-vertex spaces and per-arrow maps.
struct QuiverRep {
  Quiver quiver;
  std::map<std::string, std::size_t> dims;  // vertex label -> dimension
  std::map<std::string, Matrix> maps;       // arrow label -> dims[tgt] x dims[src]
  Field fld = Field::Q();                   // used when no map pins the field

  Field field() const;
  std::size_t total_dim() const;
  std::size_t vertex_offset(const std::string& v) const;  // block offset
  // vertex projections plus arrow block matrices on the total space
  MatRep as_matrep() const;
  void validate() const;
};

// Embedding (1): M goes to the 2-vertex representation with arrow 0 the
// identity and arrow i+1 the action of x_i; full and faithful.
QuiverRep functor_F(const FreeAlgebraModule& m);
// transport of a module morphism under F (diagonal pair)
Matrix functor_F_map(const Matrix& f);

// Embedding (2): M (+) M over the one-vertex coalgebra spanned by the vertex
// and k+1 loops, the loops acting by strictly upper block matrices.
Comodule functor_G(const FreeAlgebraModule& m, const CoalgebraPtr& loops_coalgebra);
CoalgebraPtr functor_G_coalgebra(Field f, std::size_t k);  // (K I_{k+1})_1
Matrix functor_G_map(const Matrix& f);

// Finite truncation of the shift embedding into three generators y, z, t:
// y acts blockwise by x_n, z shifts block n to n-1, t acts by distinct
// scalars lambda_n.
FreeAlgebraModule shift_embedding(const FreeAlgebraModule& m, std::size_t trunc,
                                  const std::vector<Scalar>& lambdas);

// Bounded-quiver embedding into n+1 generators: x_0 acts blockwise by the
// vertex scalars, x_i assembles the i-th arrow map of every ordered pair.
FreeAlgebraModule bounded_quiver_embedding(const QuiverRep& r, std::size_t bound,
                                           const std::map<std::string, Scalar>& lambdas);
Matrix bounded_quiver_embedding_map(const QuiverRep& src,
                                    const std::map<std::string, Matrix>& vertex_maps);

// comodule realization of a nilpotent representation over the truncated path
// coalgebra (rho(v) = sum over paths p from the vertex of p (x) A_p v)
Comodule nilpotent_rep_to_comodule(const QuiverRep& r, const CoalgebraPtr& kq,
                                   std::size_t max_len);

enum class EmbeddingFunctor { F, G, identity, collapse };

struct HarnessReport {
  bool ok = true;
  std::size_t objects = 0, pairs = 0, triples = 0;
  std::vector<std::string> lines;
  std::string to_string() const;
};

// Representation-embedding verification: indecomposability preservation,
// isomorphism reflection, exactness on enumerated short exact triples, and
// Hom-dimension tables (fullness evidence where the functor claims it).
// The collapse functor is the shipped negative control.
HarnessReport verify_representation_embedding(EmbeddingFunctor fn,
                                              const std::vector<FreeAlgebraModule>& corpus,
                                              const Budget& budget = Budget{},
                                              ParallelMode mode = ParallelMode::openmp);

// Shift-embedding verification: Hom-dimension equality at truncation and the
// block-diagonal equal-blocks shape of image endomorphisms.
HarnessReport verify_shift_embedding(const std::vector<FreeAlgebraModule>& corpus,
                                     std::size_t trunc, const std::vector<Scalar>& lambdas,
                                     const Budget& budget = Budget{},
                                     ParallelMode mode = ParallelMode::openmp);

// Bounded-quiver-embedding verification: Hom-dimension equality in both
// directions and indecomposability preservation on a representation corpus.
HarnessReport verify_bounded_embedding(const std::vector<QuiverRep>& corpus, std::size_t bound,
                                       const std::map<std::string, Scalar>& lambdas,
                                       const Budget& budget = Budget{},
                                       ParallelMode mode = ParallelMode::openmp);

// All nilpotent modules with the given generator count and dimension from 1
// to max_dim over GF(p), up to simultaneous conjugation (canonical orbit
// representatives).
std::vector<FreeAlgebraModule> nilpotent_module_corpus(Field f, std::size_t k,
                                                       std::size_t max_dim,
                                                       const Budget& budget = Budget{});

}  // namespace coalglab
