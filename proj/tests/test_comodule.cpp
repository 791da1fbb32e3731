#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalglab/comodule.hpp"

using namespace coalglab;

namespace {

CoalgebraPtr make_ab(Field f = Field::Q()) {
  return std::make_shared<Coalgebra>(path_coalgebra(Quiver::single_arrow(), 1, f));
}

CoalgebraPtr make_loop2(Field f = Field::Q()) {
  return std::make_shared<Coalgebra>(path_coalgebra(Quiver::loops(1), 2, f));
}

// the 2-dim comodule with socle S_b and top S_a over the a->b coalgebra:
// rho(u) = b (x) u, rho(v) = a (x) v + alpha (x) u
Comodule make_uv(const CoalgebraPtr& c) {
  std::size_t a = c->label_index("a"), b = c->label_index("b"),
              al = c->label_index("alpha");
  Scalar one = Scalar::one(c->field());
  return Comodule(c, 2, {{{b, 0, one}}, {{a, 1, one}, {al, 0, one}}});
}

// Jordan 2-block over a loop coalgebra: rho(v1) = g(x)v1, rho(v2) = l(x)v1 + g(x)v2
Comodule make_jordan(const CoalgebraPtr& c) {
  std::size_t g = c->label_index("g"), l = c->label_index("z1");
  Scalar one = Scalar::one(c->field());
  return Comodule(c, 2, {{{g, 0, one}}, {{l, 0, one}, {g, 1, one}}});
}

Comodule simple_at(const CoalgebraPtr& c, const std::string& label) {
  return Comodule::simple(c, c->basis_vector(c->label_index(label)));
}

Subspace span_labels(const CoalgebraPtr& c, const std::vector<std::string>& ls) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& l : ls) rows.push_back(c->basis_vector(c->label_index(l)));
  return Subspace::from_vectors(c->field(), c->dim(), rows);
}

}  // namespace

TEST_CASE("check_comodule on the named examples") {
  auto gl = std::make_shared<Coalgebra>(grouplike_coalgebra(Field::Q(), {"g"}));
  Comodule triv = Comodule::simple(gl, gl->basis_vector(0));
  CHECK(triv.check().ok);
  Scalar two = Scalar::of_int(Field::Q(), 2);
  Comodule bad(gl, 1, {{{0, 0, two}}});
  auto rep = bad.check();
  CHECK(!rep.ok);

  auto ab = make_ab();
  CHECK(make_uv(ab).check().ok);
  CHECK(Comodule::regular(ab).check().ok);
  CHECK(make_jordan(make_loop2()).check().ok);
}

TEST_CASE("cf examples") {
  auto gl = std::make_shared<Coalgebra>(grouplike_coalgebra(Field::Q(), {"g"}));
  CHECK(Comodule::simple(gl, gl->basis_vector(0)).cf().dim() == 1);

  auto ab = make_ab();
  CHECK(make_uv(ab).cf() == Subspace::full(ab->field(), 3));  // span{a, b, alpha}
  CHECK(Comodule::regular(ab).cf().is_full());                // cf(C) = C
  CHECK(simple_at(ab, "a").cf() == span_labels(ab, {"a"}));
}

TEST_CASE("annihilator examples and the duality identity") {
  auto ab = make_ab();
  CHECK(Comodule::zero(ab).annihilator().is_full());
  CHECK(Comodule::regular(ab).annihilator().is_zero());
  Subspace ann = simple_at(ab, "a").annihilator();
  CHECK(ann.dim() == 2);  // span{b^*, alpha^*}
  CHECK(ann.contains(ab->basis_vector(ab->label_index("b"))));
  CHECK(ann.contains(ab->basis_vector(ab->label_index("alpha"))));

  // orthogonal(cf(M)) = annihilator(M) across a small corpus
  for (const Comodule& m : {make_uv(ab), Comodule::regular(ab), simple_at(ab, "b"),
                            direct_sum(simple_at(ab, "a"), make_uv(ab))})
    CHECK(Coalgebra::orthogonal(m.cf()) == m.annihilator());
}

TEST_CASE("hom spaces") {
  auto ab = make_ab();
  CHECK(hom_space(simple_at(ab, "a"), simple_at(ab, "a")).size() == 1);
  CHECK(hom_space(simple_at(ab, "a"), simple_at(ab, "b")).empty());
  Comodule uv = make_uv(ab);
  CHECK(hom_space(uv, uv).size() == 1);
  // hom respects the coaction
  auto homs = hom_space(uv, Comodule::regular(ab));
  for (const auto& h : homs)
    for (std::size_t i = 0; i < ab->dim(); ++i)
      CHECK(Comodule::regular(ab).action_matrices()[i] * h ==
            h * uv.action_matrices()[i]);
}

TEST_CASE("end ring and radical") {
  auto ab = make_ab();
  auto loop2 = make_loop2();
  EndRing e1 = end_ring(simple_at(ab, "a"));
  CHECK(e1.basis.size() == 1);
  CHECK(e1.radical.is_zero());

  EndRing e2 = end_ring(direct_sum(simple_at(ab, "a"), simple_at(ab, "a")));
  CHECK(e2.basis.size() == 4);
  CHECK(e2.radical.is_zero());

  EndRing ej = end_ring(make_jordan(loop2));
  CHECK(ej.basis.size() == 2);
  CHECK(ej.radical.dim() == 1);
  CHECK(ej.algebra.check_associative_unital());
}

TEST_CASE("decompose and indecomposability") {
  auto ab = make_ab();
  auto loop2 = make_loop2();
  Comodule s = simple_at(ab, "a");
  auto pieces = decompose(direct_sum(s, s));
  CHECK(pieces.size() == 2);
  CHECK(is_indecomposable(make_jordan(loop2)));
  CHECK(is_indecomposable(make_uv(ab)));
  // over GF(5) as well, exercising the Frobenius certificate
  auto abp = make_ab(Field::GF(5));
  CHECK(is_indecomposable(make_uv(abp)));
  auto loopp = make_loop2(Field::GF(5));
  CHECK(is_indecomposable(make_jordan(loopp)));
  CHECK(decompose(direct_sum(make_uv(abp), simple_at(abp, "b"))).size() == 2);
}

TEST_CASE("decompose witness and Krull-Schmidt under base change") {
  auto loop2 = make_loop2(Field::GF(5));
  Comodule m = direct_sum(direct_sum(make_jordan(loop2), simple_at(loop2, "g")),
                          simple_at(loop2, "g"));
  auto pieces = decompose(m);
  REQUIRE(pieces.size() == 3);
  // witness: stacked embeddings intertwine the coactions
  std::size_t d = m.dim();
  Matrix stack(m.field(), d, d);
  std::size_t col = 0;
  Comodule sum = pieces[0].piece;
  for (std::size_t i = 1; i < pieces.size(); ++i) sum = direct_sum(sum, pieces[i].piece);
  for (const auto& p : pieces)
    for (std::size_t c = 0; c < p.piece.dim(); ++c, ++col)
      for (std::size_t r = 0; r < d; ++r) stack.at(r, col) = p.embedding.at(r, c);
  REQUIRE(stack.invertible());
  for (std::size_t i = 0; i < loop2->dim(); ++i)
    CHECK(m.action_matrices()[i] * stack == stack * sum.action_matrices()[i]);

  // multiset of pieces invariant under a deterministic base change
  Matrix p(m.field(), d, d);
  // unitriangular + permutation-ish mix
  for (std::size_t i = 0; i < d; ++i) p.at(i, i) = Scalar::one(m.field());
  p.at(0, 1) = Scalar::of_int(m.field(), 2);
  p.at(1, 3) = Scalar::of_int(m.field(), 3);
  p.at(2, 0) = Scalar::of_int(m.field(), 1);
  REQUIRE(p.invertible());
  auto pieces2 = decompose(m.base_change(p));
  REQUIRE(pieces2.size() == 3);
  std::vector<bool> used(pieces.size(), false);
  for (const auto& q : pieces2) {
    bool matched = false;
    for (std::size_t i = 0; i < pieces.size() && !matched; ++i) {
      if (used[i]) continue;
      if (find_isomorphism(q.piece, pieces[i].piece)) {
        used[i] = true;
        matched = true;
      }
    }
    CHECK(matched);
  }
}

TEST_CASE("Q-mode field certificate: dual of Q[x]/(x^2+1)") {
  // the regular comodule of this coalgebra has endomorphism ring Q(i); the
  // decision must be "indecomposable", certified through the irreducible
  // primitive-element minimal polynomial, not an undecided error
  Field f = Field::Q();
  Scalar one = Scalar::one(f);
  std::vector<std::vector<DeltaTerm>> delta(2);
  delta[0] = {{0, 0, one}, {1, 1, -one}};  // Delta(e0) = e0(x)e0 - e1(x)e1
  delta[1] = {{0, 1, one}, {1, 0, one}};   // Delta(e1) = e0(x)e1 + e1(x)e0
  auto c = std::make_shared<Coalgebra>(f, std::vector<std::string>{"u", "v"}, delta,
                                       std::vector<Scalar>{one, Scalar::zero(f)});
  REQUIRE(c->check().ok);
  auto g = c->grouplikes();
  CHECK(!g.pointed);
  CHECK(g.elements.empty());
  Comodule reg = Comodule::regular(c);
  REQUIRE(reg.check().ok);
  CHECK(hom_space(reg, reg).size() == 2);
  CHECK(is_indecomposable(reg));
}

TEST_CASE("Q-mode undecided: dual of the rational quaternions") {
  // End of the regular comodule is a noncommutative division algebra over Q;
  // the library must refuse with the explicit undecided error, never guess
  Field f = Field::Q();
  Scalar one = Scalar::one(f);
  // basis order 1, i, j, k; sign table of quaternion multiplication
  struct Prod {
    std::size_t a, b, c;
    int s;
  };
  std::vector<Prod> table = {
      {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
      {1, 0, 1, 1}, {1, 1, 0, -1}, {1, 2, 3, 1}, {1, 3, 2, -1},
      {2, 0, 2, 1}, {2, 1, 3, -1}, {2, 2, 0, -1}, {2, 3, 1, 1},
      {3, 0, 3, 1}, {3, 1, 2, 1}, {3, 2, 1, -1}, {3, 3, 0, -1},
  };
  std::vector<std::vector<DeltaTerm>> delta(4);
  for (const auto& p : table)
    delta[p.c].push_back({p.a, p.b, p.s > 0 ? one : -one});
  auto c = std::make_shared<Coalgebra>(
      f, std::vector<std::string>{"e", "i", "j", "k"}, delta,
      std::vector<Scalar>{one, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)});
  REQUIRE(c->check().ok);
  Comodule reg = Comodule::regular(c);
  REQUIRE(reg.check().ok);
  CHECK(hom_space(reg, reg).size() == 4);
  CHECK_THROWS_AS(decompose(reg), undecided_error);
}

TEST_CASE("dimension vectors") {
  auto ab = make_ab();
  auto dv = dimension_vector(simple_at(ab, "a"));
  CHECK(dv.to_string() == "(a:1)");
  CHECK(dimension_vector(make_uv(ab)).to_string() == "(a:1, b:1)");
  auto loop2 = make_loop2();
  CHECK(dimension_vector(Comodule::regular(loop2)).to_string() == "(g:3)");
  auto m2 = std::make_shared<Coalgebra>(comatrix_coalgebra(Field::Q(), 2));
  CHECK_THROWS_AS(dimension_vector(Comodule::regular(m2)), input_error);
}

TEST_CASE("socle computations") {
  auto ab = make_ab();
  Comodule uv = make_uv(ab);
  Subspace soc = socle(uv);
  REQUIRE(soc.dim() == 1);
  // the socle is the u-line, a copy of S_b
  CHECK(socle_multiplicity(uv, ab->basis_vector(ab->label_index("b"))) == 1);
  CHECK(socle_multiplicity(uv, ab->basis_vector(ab->label_index("a"))) == 0);
}

TEST_CASE("cotensor with the regular bicomodule is the identity") {
  for (Field f : {Field::Q(), Field::GF(3)}) {
    auto ab = make_ab(f);
    Bicomodule reg{Comodule::regular(ab), RightComodule::regular(ab)};
    REQUIRE(reg.left.check().ok);
    REQUIRE(reg.right.check().ok);
    REQUIRE(reg.compatible());
    for (const Comodule& n : {simple_at(ab, "a"), make_uv(ab), Comodule::regular(ab)}) {
      Comodule cn = cotensor_left(reg, n);
      CHECK(cn.check().ok);
      CHECK(cn.dim() == n.dim());
      CHECK(find_isomorphism(cn, n).has_value());
    }
    // M box_C C = M as dimensions (right-side unit)
    Subspace w = cotensor(RightComodule::regular(ab), Comodule::regular(ab));
    CHECK(w.dim() == ab->dim());
  }
}

TEST_CASE("cotensor rank-nullity sanity") {
  auto ab = make_ab(Field::GF(3));
  RightComodule rc = RightComodule::regular(ab);
  Comodule n = make_uv(ab);
  Subspace w = cotensor(rc, n);
  // dim(M box N) + rank(condition map) = dim M * dim N
  std::size_t full = rc.dim() * n.dim();
  CHECK(w.dim() <= full);
  CHECK(w.dim() == full - (full - w.dim()));  // tautology guard; real check below
  // recompute the rank directly
  std::size_t md = rc.dim(), nd = n.dim(), d = ab->dim();
  Matrix cond(ab->field(), md * d * nd, md * nd);
  for (std::size_t s = 0; s < md; ++s)
    for (const auto& t : rc.rho()[s])
      for (std::size_t u = 0; u < nd; ++u)
        cond.at((t.target * d + t.c_index) * nd + u, s * nd + u) += t.coeff;
  for (std::size_t u = 0; u < nd; ++u)
    for (const auto& t : n.rho()[u])
      for (std::size_t s = 0; s < md; ++s)
        cond.at((s * d + t.c_index) * nd + t.target, s * nd + u) -= t.coeff;
  CHECK(w.dim() + cond.rref().rank == full);
}

TEST_CASE("short exact triples") {
  auto ab = make_ab(Field::GF(3));
  // simple: only the two trivial triples
  auto ts = short_exact_triples(simple_at(ab, "a"));
  CHECK(ts.size() == 2);

  // uv: exactly one nontrivial triple, sub = S_b, quotient = S_a
  Comodule uv = make_uv(ab);
  auto tuv = short_exact_triples(uv);
  REQUIRE(tuv.size() == 3);
  std::size_t nontrivial = 0;
  for (const auto& t : tuv) {
    if (t.sub.dim() == 0 || t.sub.dim() == uv.dim()) continue;
    ++nontrivial;
    CHECK(find_isomorphism(t.sub, simple_at(ab, "b")).has_value());
    CHECK(find_isomorphism(t.quotient, simple_at(ab, "a")).has_value());
  }
  CHECK(nontrivial == 1);

  // S (+) S over GF(3): p + 1 = 4 one-dimensional subcomodules
  Comodule ss = direct_sum(simple_at(ab, "a"), simple_at(ab, "a"));
  auto tss = short_exact_triples(ss);
  std::size_t ones = 0;
  for (const auto& t : tss)
    if (t.sub.dim() == 1) ++ones;
  CHECK(ones == 4);

  // extension inclusion: cf(Y) inside wedge(cf(Z), cf(X)) on every triple
  for (const Comodule& y : {uv, ss, Comodule::regular(ab)}) {
    for (const auto& t : short_exact_triples(y)) {
      Subspace lhs = y.cf();
      Subspace rhs = ab->wedge(t.quotient.cf(), t.sub.cf());
      CHECK(rhs.contains(lhs));
    }
  }
}

TEST_CASE("Q-mode triples from the socle lattice") {
  auto ab = make_ab(Field::Q());
  Comodule uv = make_uv(ab);
  auto ts = short_exact_triples(uv);
  // 0, socle, full are all found
  CHECK(ts.size() == 3);
}

TEST_CASE("cf is monotone and additive") {
  auto ab = make_ab(Field::GF(3));
  Comodule uv = make_uv(ab);
  for (const auto& t : short_exact_triples(uv)) {
    CHECK(uv.cf().contains(t.sub.cf()));  // cf(X) within cf(Y)
  }
  Comodule sa = simple_at(ab, "a"), sb = simple_at(ab, "b");
  CHECK(direct_sum(sa, sb).cf() == Subspace::sum(sa.cf(), sb.cf()));
}

TEST_CASE("dimension vector additive on triples") {
  auto ab = make_ab(Field::GF(3));
  Comodule uv = make_uv(ab);
  for (const auto& t : short_exact_triples(uv)) {
    auto total = DimensionVector::sum(dimension_vector(t.sub), dimension_vector(t.quotient));
    CHECK(total == dimension_vector(uv));
  }
}

TEST_CASE("isomorphism witness and certified negatives") {
  auto ab = make_ab(Field::GF(5));
  Comodule uv = make_uv(ab);
  Matrix p(uv.field(), 2, 2);
  p.at(0, 0) = Scalar::of_int(uv.field(), 2);
  p.at(0, 1) = Scalar::of_int(uv.field(), 1);
  p.at(1, 1) = Scalar::of_int(uv.field(), 3);
  REQUIRE(p.invertible());
  Comodule uv2 = uv.base_change(p);
  auto iso = find_isomorphism(uv, uv2);
  REQUIRE(iso.has_value());
  for (std::size_t i = 0; i < ab->dim(); ++i)
    CHECK(uv2.action_matrices()[i] * *iso == *iso * uv.action_matrices()[i]);
  CHECK(!find_isomorphism(uv, direct_sum(simple_at(ab, "a"), simple_at(ab, "b"))));
  CHECK(!find_isomorphism(simple_at(ab, "a"), simple_at(ab, "b")));
}
