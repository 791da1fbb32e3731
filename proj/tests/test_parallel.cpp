#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coalglab/embeddings.hpp"
#include "coalglab/oracle.hpp"

using namespace coalglab;

// The OpenMP kernels must reproduce the serial reference bit for bit: every
// index fills its own slot and merges in order.

namespace {

CoalgebraPtr pc(const Quiver& q, std::size_t len, Field f) {
  return std::make_shared<Coalgebra>(path_coalgebra(q, len, f));
}

DimensionVector dv(std::initializer_list<std::pair<std::string, std::size_t>> items) {
  DimensionVector d;
  for (const auto& [k, v] : items) d.entries[k] = v;
  return d;
}

}  // namespace

TEST_CASE("parallel_map_indexed agrees with the serial reference") {
  auto serial = parallel_map_indexed<std::size_t>(1000, ParallelMode::serial,
                                                  [](std::size_t i) { return i * i % 97; });
  auto parallel = parallel_map_indexed<std::size_t>(1000, ParallelMode::openmp,
                                                    [](std::size_t i) { return i * i % 97; });
  CHECK(serial == parallel);
}

TEST_CASE("oracle kernels: serial and openmp outputs are identical") {
  auto tri = pc(Quiver::loops(3), 1, Field::GF(101));
  for (const auto& d : {dv({{"g", 2}}), dv({{"g", 3}})}) {
    Subspace s = cf_dimvec_oracle(tri, d, Budget{}, ParallelMode::serial);
    Subspace p = cf_dimvec_oracle(tri, d, Budget{}, ParallelMode::openmp);
    CHECK(s == p);
  }
  auto kr = pc(Quiver::kronecker(2), 1, Field::GF(5));
  auto cs = enumerate_comodules(kr, dv({{"a", 1}, {"b", 1}}), Budget{}, ParallelMode::serial);
  auto cp = enumerate_comodules(kr, dv({{"a", 1}, {"b", 1}}), Budget{}, ParallelMode::openmp);
  REQUIRE(cs.size() == cp.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    CHECK(cs[i].dim() == cp[i].dim());
    // identical coaction data, not merely isomorphic
    CHECK(cs[i].rho_of(std::vector<Scalar>(cs[i].dim(), Scalar::one(cs[i].field()))) ==
          cp[i].rho_of(std::vector<Scalar>(cp[i].dim(), Scalar::one(cp[i].field()))));
  }
}

TEST_CASE("harness reports are identical across modes") {
  Field f = Field::GF(5);
  auto corpus = nilpotent_module_corpus(f, 2, 2);
  auto rs = verify_representation_embedding(EmbeddingFunctor::G, corpus, Budget{},
                                            ParallelMode::serial);
  auto rp = verify_representation_embedding(EmbeddingFunctor::G, corpus, Budget{},
                                            ParallelMode::openmp);
  CHECK(rs.to_string() == rp.to_string());
}
