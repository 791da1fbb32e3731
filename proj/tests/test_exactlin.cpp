#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalglab/algebra.hpp"
#include "coalglab/matrix.hpp"
#include "coalglab/poly.hpp"

using namespace coalglab;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar::fraction(BigInt(n), BigInt(d)); }

Matrix mat_q(const std::vector<std::vector<long long>>& rows) {
  Field f = Field::Q();
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.at(r, c) = Scalar::of_int(f, rows[r][c]);
  return m;
}

// deterministic xorshift for property tests
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b9ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long long small(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("bigint arithmetic and strings") {
  BigInt a = BigInt::from_string("123456789012345678901234567890");
  BigInt b = BigInt::from_string("-987654321098765432109876543210");
  CHECK(a.to_string() == "123456789012345678901234567890");
  CHECK((a + b).to_string() == "-864197532086419753208641975320");
  CHECK((a * b).to_string() ==
        "-121932631137021795226185032733622923332237463801111263526900");
  CHECK((b / a).to_string() == "-8");
  CHECK((b % a).to_string() == "-9000000000900000000090");
  CHECK(BigInt::gcd(BigInt(48), BigInt(-36)) == BigInt(12));
  CHECK(BigInt(-7) / BigInt(2) == BigInt(-3));  // truncation toward zero
  CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
}

TEST_CASE("scalar rational canonicalization") {
  Scalar s = Scalar::fraction(BigInt(2), BigInt(4));
  CHECK(s.to_string() == "1/2");
  Scalar t = Scalar::fraction(BigInt(3), BigInt(-6));
  CHECK(t.to_string() == "-1/2");
  CHECK((s + t).is_zero());
  CHECK(Scalar::parse(Field::Q(), "2/4").to_string() == "1/2");
}

TEST_CASE("scalar GF(p)") {
  Field f = Field::GF(101);
  Scalar a = Scalar::of_int(f, -1);
  CHECK(a.residue_value() == 100);
  CHECK((a * a).is_one());
  CHECK((Scalar::residue(f, 2).inverse() * Scalar::residue(f, 2)).is_one());
  CHECK_THROWS_AS(Field::GF(4), input_error);
}

TEST_CASE("rref identity and zero cases") {
  Field f = Field::Q();
  auto id = Matrix::identity(f, 2);
  auto rr = id.rref();
  CHECK(rr.mat == id);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
  CHECK(rr.rank == 2);

  Matrix z(f, 3, 3);
  auto rz = z.rref();
  CHECK(rz.mat == z);
  CHECK(rz.pivots.empty());
  CHECK(rz.rank == 0);
}

TEST_CASE("rref rank-1 example") {
  // [[1,2],[2,4]] -> [[1,2],[0,0]], pivots [0], rank 1
  auto m = mat_q({{1, 2}, {2, 4}});
  auto rr = m.rref();
  CHECK(rr.rank == 1);
  CHECK(rr.pivots == std::vector<std::size_t>{0});
  CHECK(rr.mat == mat_q({{1, 2}, {0, 0}}));
}

TEST_CASE("kernel basis cases") {
  Field f = Field::Q();
  CHECK(Matrix::identity(f, 3).kernel_basis().rows() == 0);
  CHECK(Matrix(f, 4, 4).kernel_basis() == Matrix::identity(f, 4));
  // [[1,1]] -> span (1,-1)
  auto k = mat_q({{1, 1}}).kernel_basis();
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) == q(1));
  CHECK(k.at(0, 1) == q(-1));
}

TEST_CASE("kernel basis properties (random)") {
  Rng rng(42);
  for (int iter = 0; iter < 30; ++iter) {
    Field f = iter % 2 ? Field::Q() : Field::GF(5);
    std::size_t r = 1 + rng.next() % 4, c = 1 + rng.next() % 4;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of_int(f, rng.small(-3, 3));
    auto rr = m.rref();
    // idempotence
    CHECK(rr.mat.rref().mat == rr.mat);
    auto k = m.kernel_basis();
    CHECK(k.rows() + rr.rank == c);
    for (std::size_t i = 0; i < k.rows(); ++i) {
      auto prod = m.apply(k.row(i));
      for (const auto& s : prod) CHECK(s.is_zero());
    }
  }
}

TEST_CASE("kronecker product convention") {
  Field f = Field::Q();
  CHECK(Matrix::identity(f, 2).kronecker(Matrix::identity(f, 3)) == Matrix::identity(f, 6));
  auto a = mat_q({{1, 2}, {3, 4}});
  auto one = mat_q({{1}});
  CHECK(a.kronecker(one) == a);
  CHECK(one.kronecker(a) == a);
  auto two = mat_q({{2}});
  auto swap = mat_q({{0, 1}, {1, 0}});
  CHECK(two.kronecker(swap) == mat_q({{0, 2}, {2, 0}}));
}

TEST_CASE("kronecker associativity under flattened triple index") {
  Rng rng(7);
  Field f = Field::GF(3);
  auto rnd = [&](std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of_int(f, rng.small(0, 2));
    return m;
  };
  for (int iter = 0; iter < 10; ++iter) {
    auto a = rnd(2, 2), b = rnd(1 + rng.next() % 2, 2), c = rnd(2, 1 + rng.next() % 2);
    CHECK(a.kronecker(b).kronecker(c) == a.kronecker(b.kronecker(c)));
  }
}

TEST_CASE("minpoly factors: trivial cases") {
  Field f = Field::Q();
  auto id = Matrix::identity(f, 3);
  auto fac = minpoly_factors(id);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == Poly::x_minus(q(1)));
  CHECK(fac[0].second == 1);

  Matrix jordan(f, 2, 2);  // nilpotent 2-block
  jordan.at(0, 1) = q(1);
  auto fj = minpoly_factors(jordan);
  REQUIRE(fj.size() == 1);
  CHECK(fj[0].first == Poly::x(f));
  CHECK(fj[0].second == 2);

  Matrix d(f, 2, 2);
  d.at(0, 0) = q(1);
  d.at(1, 1) = q(2);
  auto fd = minpoly_factors(d);
  REQUIRE(fd.size() == 2);
  CHECK(fd[0].second == 1);
  CHECK(fd[1].second == 1);
}

TEST_CASE("minpoly annihilates and no proper divisor does") {
  Rng rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    Field f = iter % 2 ? Field::Q() : Field::GF(7);
    std::size_t n = 2 + rng.next() % 3;
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar::of_int(f, rng.small(-2, 2));
    Poly mp = minimal_polynomial(m);
    CHECK(mp.eval(m).is_zero());
    // dropping one power of any irreducible factor must fail to annihilate
    std::vector<std::pair<Poly, std::size_t>> fac;
    bool factored = true;
    try {
      fac = factor_poly(mp);
    } catch (const undecided_error&) {
      factored = false;  // Q-mode high-degree factor: skip divisor check
    }
    if (factored) {
      Poly prod(f, {Scalar::one(f)});
      for (const auto& [g, mult] : fac)
        for (std::size_t i = 0; i < mult; ++i) prod = prod * g;
      CHECK(prod == mp);
      for (std::size_t drop = 0; drop < fac.size(); ++drop) {
        Poly partial(f, {Scalar::one(f)});
        for (std::size_t i = 0; i < fac.size(); ++i) {
          std::size_t mult = fac[i].second - (i == drop ? 1 : 0);
          for (std::size_t k = 0; k < mult; ++k) partial = partial * fac[i].first;
        }
        CHECK(!partial.eval(m).is_zero());
      }
    }
  }
}

TEST_CASE("berlekamp over GF(p) splits") {
  Field f = Field::GF(5);
  // x^2 + 1 = (x+2)(x+3) over GF(5)
  Poly p(f, {Scalar::of_int(f, 1), Scalar::of_int(f, 0), Scalar::of_int(f, 1)});
  auto fac = factor_poly(p);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first.degree() == 1);
  CHECK(fac[1].first.degree() == 1);
  // x^2 + 2 irreducible over GF(5)
  Poly irr(f, {Scalar::of_int(f, 2), Scalar::of_int(f, 0), Scalar::of_int(f, 1)});
  auto fi = factor_poly(irr);
  REQUIRE(fi.size() == 1);
  CHECK(fi[0].first.degree() == 2);
}

TEST_CASE("characteristic polynomial matches minpoly degrees") {
  Field f = Field::GF(3);
  Matrix m(f, 3, 3);
  m.at(0, 1) = Scalar::one(f);
  m.at(1, 2) = Scalar::one(f);
  Poly cp = characteristic_polynomial(m);
  CHECK(cp.degree() == 3);
  CHECK(cp.eval(m).is_zero());
  Poly mp = minimal_polynomial(m);
  CHECK(mp.degree() == 3);
  // companion of x^3 - 1 over Q
  Matrix comp(Field::Q(), 3, 3);
  comp.at(0, 2) = q(1);
  comp.at(1, 0) = q(1);
  comp.at(2, 1) = q(1);
  Poly ccp = characteristic_polynomial(comp);
  Poly expect(Field::Q(), {q(-1), q(0), q(0), q(1)});
  CHECK(ccp == expect);
}

TEST_CASE("radical of structure algebras") {
  // K[x]/(x^2): basis {1, x}; radical = span{x}
  for (Field f : {Field::Q(), Field::GF(5)}) {
    StructureAlgebra a(f, 2);
    auto e = [&](int i) {
      std::vector<Scalar> v(2, Scalar::zero(f));
      v[static_cast<std::size_t>(i)] = Scalar::one(f);
      return v;
    };
    a.set_product(0, 0, e(0));
    a.set_product(0, 1, e(1));
    a.set_product(1, 0, e(1));
    a.set_product(1, 1, std::vector<Scalar>(2, Scalar::zero(f)));
    a.set_unit(e(0));
    REQUIRE(a.check_associative_unital());
    Subspace j = a.radical();
    CHECK(j.dim() == 1);
    CHECK(j.contains(e(1)));
  }
  // 2x2 matrix algebra is semisimple: radical 0
  for (Field f : {Field::Q(), Field::GF(2)}) {
    StructureAlgebra m2(f, 4);  // basis e11, e12, e21, e22
    auto unit_idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t r2 = 0; r2 < 2; ++r2)
          for (std::size_t c2 = 0; c2 < 2; ++c2) {
            std::vector<Scalar> prod(4, Scalar::zero(f));
            if (c == r2) prod[unit_idx(r, c2)] = Scalar::one(f);
            m2.set_product(unit_idx(r, c), unit_idx(r2, c2), prod);
          }
    std::vector<Scalar> one(4, Scalar::zero(f));
    one[0] = one[3] = Scalar::one(f);
    m2.set_unit(one);
    REQUIRE(m2.check_associative_unital());
    CHECK(m2.radical().is_zero());
    CHECK(m2.characters().empty());
  }
}

TEST_CASE("quotient by the radical is semisimple") {
  // dual algebras of truncated path coalgebras exercise both radical
  // algorithms; the quotient must have zero radical again
  auto run = [](const StructureAlgebra& a) {
    REQUIRE(a.check_associative_unital());
    Subspace j = a.radical();
    AlgebraQuotient q = a.quotient_by_ideal(a.ideal_closure(j));
    REQUIRE(q.algebra.check_associative_unital());
    CHECK(q.algebra.radical().is_zero());
  };
  // K[x]/(x^3) in both characteristics
  for (Field f : {Field::Q(), Field::GF(2), Field::GF(3), Field::GF(101)}) {
    StructureAlgebra a(f, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t jj = 0; jj < 3; ++jj) {
        std::vector<Scalar> prod(3, Scalar::zero(f));
        if (i + jj < 3) prod[i + jj] = Scalar::one(f);
        a.set_product(i, jj, prod);
      }
    std::vector<Scalar> unit(3, Scalar::zero(f));
    unit[0] = Scalar::one(f);
    a.set_unit(unit);
    CHECK(a.radical().dim() == 2);
    run(a);
  }
}

TEST_CASE("characters of split commutative algebra") {
  // K x K: two characters
  Field f = Field::Q();
  StructureAlgebra a(f, 2);
  auto e = [&](int i) {
    std::vector<Scalar> v(2, Scalar::zero(f));
    v[static_cast<std::size_t>(i)] = Scalar::one(f);
    return v;
  };
  a.set_product(0, 0, e(0));
  a.set_product(1, 1, e(1));
  a.set_product(0, 1, std::vector<Scalar>(2, Scalar::zero(f)));
  a.set_product(1, 0, std::vector<Scalar>(2, Scalar::zero(f)));
  std::vector<Scalar> one(2, Scalar::one(f));
  a.set_unit(one);
  REQUIRE(a.check_associative_unital());
  auto chars = a.characters();
  CHECK(chars.size() == 2);
}

TEST_CASE("subspace algebra") {
  Field f = Field::GF(3);
  Subspace u = Subspace::from_vectors(f, 3,
                                      {{Scalar::of_int(f, 1), Scalar::of_int(f, 1), Scalar::of_int(f, 0)}});
  Subspace v = Subspace::from_vectors(f, 3,
                                      {{Scalar::of_int(f, 0), Scalar::of_int(f, 1), Scalar::of_int(f, 1)}});
  Subspace s = Subspace::sum(u, v);
  CHECK(s.dim() == 2);
  CHECK(Subspace::intersect(u, v).is_zero());
  CHECK(s.contains(u));
  CHECK(u.perp().dim() == 2);
  CHECK(Subspace::intersect(s, u) == u);
  CHECK(Subspace::full(f, 3).contains(s));
}
