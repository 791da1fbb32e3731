#pragma once

#include "coalglab/comodule.hpp"

namespace coalglab {

// Vertex-subset idempotent of C^*: e is epsilon on kept simples, 0 on dropped
// ones, with e * e = e exactly in the convolution algebra.
struct IdempotentPresentation {
  CoalgebraPtr coalgebra;
  std::vector<std::string> keep;  // kept grouplike labels
  std::vector<Scalar> e;          // coordinates in C^*
};

// Build the coradical projection and lift it to an exact idempotent by the
// iteration e <- 3e^2 - 2e^3 (the defect lives in the nilpotent dual radical).
IdempotentPresentation lift_idempotent(const CoalgebraPtr& c,
                                       const std::vector<std::string>& keep);

// eCe = { sum e(c1) c2 e(c3) } with the pushed-through comultiplication.
struct LocalizedCoalgebra {
  CoalgebraPtr ece;
  Subspace image;  // eCe as a subspace of C
  Matrix pi;       // the projection c -> e -> c <- e on C coordinates
};
LocalizedCoalgebra localize_coalgebra(const IdempotentPresentation& p);

// T = (-)e on comodules; to_local maps M coordinates onto Me coordinates.
struct LocalizedComodule {
  Comodule comodule;  // over eCe
  Subspace image;     // Me inside M
  Matrix to_local;    // Me-dim x M-dim
};
LocalizedComodule localize_comodule(const IdempotentPresentation& p,
                                    const LocalizedCoalgebra& loc, const Comodule& m);

// eC = e -> C as a (C, eCe)-bicomodule; the section functor S = eC box_{eCe} -.
Bicomodule ec_bicomodule(const IdempotentPresentation& p, const LocalizedCoalgebra& loc);

Comodule section_S(const IdempotentPresentation& p, const LocalizedCoalgebra& loc,
                   const Comodule& n);

struct TSReport {
  bool ok = true;
  std::vector<std::string> lines;
};
// For each sample comodule over eCe: build the natural map TS(n) -> n from the
// counit evaluation and certify it is an isomorphism of eCe-comodules; also
// certify Hom-dimension preservation of S on sample pairs.
TSReport verify_TS_identity(const IdempotentPresentation& p, const LocalizedCoalgebra& loc,
                            const std::vector<Comodule>& samples);

// Experimental: the finite-dimensional realization H(N) = N (x)_{eC*e} eC* of
// the left adjoint; returns the induced left C-comodule.
Comodule left_adjoint_H(const IdempotentPresentation& p, const LocalizedCoalgebra& loc,
                        const Comodule& n);

}  // namespace coalglab
