#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalglab/coalgebra.hpp"

using namespace coalglab;

namespace {

// Independent wedge oracle: exhaustively scan GF(p)^n for vectors x with
// Delta(x) in V(x)C + C(x)W, then span them. Only for small p^n.
Subspace wedge_oracle(const Coalgebra& c, const Subspace& v, const Subspace& w) {
  Field f = c.field();
  std::size_t n = c.dim();
  REQUIRE(f.is_prime());
  std::uint64_t p = f.p;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  REQUIRE(total <= 1000000);
  std::vector<std::vector<Scalar>> tensor_rows;
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> t(n * n, Scalar::zero(f));
      for (std::size_t j = 0; j < n; ++j) t[j * n + i] = v.basis().at(r, j);
      tensor_rows.push_back(t);
    }
  for (std::size_t r = 0; r < w.dim(); ++r)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> t(n * n, Scalar::zero(f));
      for (std::size_t k = 0; k < n; ++k) t[i * n + k] = w.basis().at(r, k);
      tensor_rows.push_back(t);
    }
  Subspace tensor_sub = Subspace::from_vectors(f, n * n, tensor_rows);
  std::vector<std::vector<Scalar>> members;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t cc = code;
    std::vector<Scalar> x(n, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Scalar::residue(f, cc % p);
      cc /= p;
    }
    if (tensor_sub.contains(c.delta_of(x))) members.push_back(x);
  }
  return Subspace::from_vectors(f, n, members);
}

Subspace span_labels(const Coalgebra& c, const std::vector<std::string>& ls) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& l : ls) rows.push_back(c.basis_vector(c.label_index(l)));
  return Subspace::from_vectors(c.field(), c.dim(), rows);
}

}  // namespace

TEST_CASE("grouplike line passes check; broken counit reported") {
  Coalgebra g = grouplike_coalgebra(Field::Q(), {"g"});
  CHECK(g.check().ok);
  Coalgebra bad(Field::Q(), {"g"}, {{{0, 0, Scalar::one(Field::Q())}}},
                {Scalar::zero(Field::Q())});
  auto rep = bad.check();
  CHECK(!rep.ok);
  bool counit_mentioned = false;
  for (const auto& v : rep.violations)
    if (v.find("counit") != std::string::npos && v.find("g") != std::string::npos)
      counit_mentioned = true;
  CHECK(counit_mentioned);
}

TEST_CASE("path coalgebra basics") {
  // single vertex, no arrows
  Coalgebra pt = path_coalgebra(Quiver({"v"}, {}), 5);
  CHECK(pt.dim() == 1);
  CHECK(pt.check().ok);

  // a -> b, max_len 1: dim 3, Delta(alpha) = a(x)alpha + alpha(x)b
  Coalgebra ab = path_coalgebra(Quiver::single_arrow(), 1);
  CHECK(ab.dim() == 3);
  CHECK(ab.check().ok);
  std::size_t n = ab.dim();
  std::size_t ai = ab.label_index("a"), bi = ab.label_index("b"), al = ab.label_index("alpha");
  auto d = ab.delta_of(ab.basis_vector(al));
  std::vector<Scalar> expect(n * n, Scalar::zero(ab.field()));
  expect[ai * n + al] = Scalar::one(ab.field());
  expect[al * n + bi] = Scalar::one(ab.field());
  CHECK(d == expect);

  // one loop truncated at length 2
  Coalgebra loop2 = path_coalgebra(Quiver::loops(1), 2);
  CHECK(loop2.dim() == 3);
  CHECK(loop2.check().ok);
  std::size_t g = loop2.label_index("g"), l = loop2.label_index("z1"),
              l2 = loop2.label_index("z1z1");
  auto d2 = loop2.delta_of(loop2.basis_vector(l2));
  std::vector<Scalar> e2(9, Scalar::zero(loop2.field()));
  e2[g * 3 + l2] = Scalar::one(loop2.field());
  e2[l * 3 + l] = Scalar::one(loop2.field());
  e2[l2 * 3 + g] = Scalar::one(loop2.field());
  CHECK(d2 == e2);

  CHECK_THROWS_AS(path_coalgebra(Quiver::loops(2), 30), budget_error);
}

TEST_CASE("path coalgebras pass check over several quivers and fields") {
  for (auto q : {Quiver::single_arrow(), Quiver::kronecker(2), Quiver::kronecker(3),
                 Quiver::loops(3), Quiver::line(3), Quiver::cycle(2)}) {
    for (Field f : {Field::Q(), Field::GF(101)}) {
      for (std::size_t len : {std::size_t{1}, std::size_t{2}}) {
        Coalgebra c = path_coalgebra(q, len, f);
        CHECK(c.check().ok);
      }
    }
  }
}

TEST_CASE("orthogonal annihilators") {
  Coalgebra ab = path_coalgebra(Quiver::single_arrow(), 1);
  Field f = ab.field();
  Subspace zero(f, 3);
  CHECK(Coalgebra::orthogonal(zero).is_full());
  CHECK(Coalgebra::orthogonal(Subspace::full(f, 3)).is_zero());
  Subspace vab = span_labels(ab, {"a", "b"});
  Subspace o = Coalgebra::orthogonal(vab);
  REQUIRE(o.dim() == 1);
  // the surviving functional is alpha^*
  CHECK(!o.basis().at(0, ab.label_index("alpha")).is_zero());
}

TEST_CASE("wedge on the arrow coalgebra") {
  Coalgebra ab = path_coalgebra(Quiver::single_arrow(), 1);
  Field f = ab.field();
  Subspace full = Subspace::full(f, 3);
  CHECK(ab.wedge(full, full) == full);
  Subspace ka = span_labels(ab, {"a"});
  Subspace kb = span_labels(ab, {"b"});
  CHECK(ab.wedge(ka, kb) == full);                      // span{a, b, alpha}
  CHECK(ab.wedge(kb, ka) == span_labels(ab, {"a", "b"}));
}

TEST_CASE("wedge agrees with exhaustive oracle over GF(3)") {
  for (auto q : {Quiver::single_arrow(), Quiver::loops(1)}) {
    Coalgebra c = path_coalgebra(q, 2, Field::GF(3));
    Budget small{100000, 0};
    auto subs = enumerate_subspaces(Field::GF(3), c.dim(), 2, small);
    for (const auto& v : subs)
      for (const auto& w : subs) {
        CHECK(c.wedge(v, w) == wedge_oracle(c, v, w));
      }
  }
}

TEST_CASE("wedge duality against the convolution product") {
  // wedge(V, W) = orth(orth(V) * orth(W)) with (f*g)(c) = sum f(c1) g(c2)
  for (auto q : {Quiver::single_arrow(), Quiver::loops(1), Quiver::kronecker(2)}) {
    Coalgebra c = path_coalgebra(q, 2, Field::GF(2));
    Budget small{200000, 0};
    auto subs = enumerate_subspaces(Field::GF(2), c.dim(), 2, small);
    for (const auto& v : subs)
      for (const auto& w : subs) {
        Subspace lhs = c.wedge(v, w);
        Subspace rhs = Coalgebra::orthogonal(
            c.ideal_product(Coalgebra::orthogonal(v), Coalgebra::orthogonal(w)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("wedge monotonicity and associativity on subcoalgebras") {
  Coalgebra c = path_coalgebra(Quiver::line(3), 2, Field::GF(2));
  Budget small{500000, 0};
  auto lines = enumerate_subspaces(Field::GF(2), c.dim(), 1, small);
  // V in V', W in W' forces wedge(V, W) in wedge(V', W'): enlarge each factor
  // by every basis line and compare
  for (const auto& v : lines)
    for (const auto& w : lines) {
      Subspace vw = c.wedge(v, w);
      for (std::size_t i = 0; i < c.dim(); i += 2) {
        Subspace v2 = Subspace::sum(v, Subspace::span_of(c.field(), c.dim(), c.basis_vector(i)));
        Subspace w2 = Subspace::sum(w, Subspace::span_of(c.field(), c.dim(), c.basis_vector(i)));
        CHECK(c.wedge(v2, w2).contains(vw));
        CHECK(c.wedge(v2, w).contains(vw));
        CHECK(c.wedge(v, w2).contains(vw));
      }
    }
  // associativity over subcoalgebras of the one-loop coalgebra
  Coalgebra loop = path_coalgebra(Quiver::loops(1), 2, Field::GF(3));
  std::vector<Subspace> subcos;
  Budget b2{100000, 0};
  for (const auto& s : enumerate_subspaces(Field::GF(3), loop.dim(), 3, b2))
    if (loop.is_subcoalgebra(s)) subcos.push_back(s);
  CHECK(subcos.size() >= 3);
  for (const auto& u : subcos)
    for (const auto& v : subcos)
      for (const auto& w : subcos)
        CHECK(loop.wedge(loop.wedge(u, v), w) == loop.wedge(u, loop.wedge(v, w)));
}

TEST_CASE("coradical examples") {
  Coalgebra semis = grouplike_coalgebra(Field::Q(), {"a", "b"});
  CHECK(semis.coradical().is_full());

  Coalgebra ab = path_coalgebra(Quiver::single_arrow(), 1);
  CHECK(ab.coradical() == span_labels(ab, {"a", "b"}));

  Coalgebra loop2 = path_coalgebra(Quiver::loops(1), 2);
  CHECK(loop2.coradical() == span_labels(loop2, {"g"}));

  // the same over GF(101), exercising the characteristic-p radical
  Coalgebra loop2p = path_coalgebra(Quiver::loops(1), 2, Field::GF(101));
  CHECK(loop2p.coradical() == span_labels(loop2p, {"g"}));
  Coalgebra abp = path_coalgebra(Quiver::single_arrow(), 1, Field::GF(2));
  CHECK(abp.coradical() == span_labels(abp, {"a", "b"}));
}

TEST_CASE("coradical of comatrix coalgebra is everything") {
  for (Field f : {Field::Q(), Field::GF(3)}) {
    Coalgebra m2 = comatrix_coalgebra(f, 2);
    REQUIRE(m2.check().ok);
    CHECK(m2.coradical().is_full());
  }
}

TEST_CASE("coradical filtration") {
  Coalgebra semis = grouplike_coalgebra(Field::Q(), {"a", "b"});
  auto chain = semis.coradical_filtration();
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].is_full());

  Coalgebra ab = path_coalgebra(Quiver::single_arrow(), 1);
  auto cab = ab.coradical_filtration();
  REQUIRE(cab.size() == 2);
  CHECK(cab[0] == span_labels(ab, {"a", "b"}));
  CHECK(cab[1].is_full());

  Coalgebra loop2 = path_coalgebra(Quiver::loops(1), 2);
  auto cl = loop2.coradical_filtration();
  REQUIRE(cl.size() == 3);
  CHECK(cl[0] == span_labels(loop2, {"g"}));
  CHECK(cl[1] == span_labels(loop2, {"g", "z1"}));
  CHECK(cl[2].is_full());
  // strictly increasing chain, and C1/C0 matches the arrow span
  for (std::size_t i = 1; i < cl.size(); ++i) {
    CHECK(cl[i].contains(cl[i - 1]));
    CHECK(cl[i].dim() > cl[i - 1].dim());
  }
}

TEST_CASE("grouplikes and pointedness") {
  Coalgebra pq = path_coalgebra(Quiver::line(3), 2);
  auto g = pq.grouplikes();
  CHECK(g.pointed);
  CHECK(g.elements.size() == 3);

  Coalgebra m2 = comatrix_coalgebra(Field::Q(), 2);
  auto gm = m2.grouplikes();
  CHECK(!gm.pointed);
  CHECK(gm.elements.empty());

  Coalgebra one = grouplike_coalgebra(Field::GF(5), {"g"});
  auto g1 = one.grouplikes();
  CHECK(g1.pointed);
  CHECK(g1.elements.size() == 1);

  // grouplikes found through the character route: a 2-dim coalgebra whose
  // grouplikes are not basis elements. Basis {x, y} with x = g1+g2, y = g2:
  // grouplikes g1 = x - y, g2 = y.
  Field f = Field::Q();
  // Delta(x) = Delta(g1) + Delta(g2) = (x-y)(x)(x-y) + y(x)y, expanded on basis
  std::vector<std::vector<DeltaTerm>> delta(2);
  auto one_s = Scalar::one(f);
  // (x-y)(x)(x-y) = x(x)x - x(x)y - y(x)x + y(x)y; plus y(x)y gives:
  delta[0] = {{0, 0, one_s}, {0, 1, -one_s}, {1, 0, -one_s}, {1, 1, one_s + one_s}};
  delta[1] = {{1, 1, one_s}};
  Coalgebra hidden(f, {"x", "y"}, delta, {one_s + one_s, one_s});
  REQUIRE(hidden.check().ok);
  auto gh = hidden.grouplikes();
  CHECK(gh.pointed);
  REQUIRE(gh.elements.size() == 2);
  for (const auto& gl : gh.elements) {
    auto d = hidden.delta_of(gl);
    std::vector<Scalar> sq(4, Scalar::zero(f));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) sq[i * 2 + j] = gl[i] * gl[j];
    CHECK(d == sq);
  }
}

TEST_CASE("restrict_to produces valid subcoalgebras") {
  Coalgebra loop2 = path_coalgebra(Quiver::loops(1), 2, Field::GF(5));
  Subspace c1 = span_labels(loop2, {"g", "z1"});
  REQUIRE(loop2.is_subcoalgebra(c1));
  Coalgebra r = loop2.restrict_to(c1);
  CHECK(r.dim() == 2);
  CHECK(r.check().ok);
  CHECK(!loop2.is_subcoalgebra(span_labels(loop2, {"z1z1"})));
}
