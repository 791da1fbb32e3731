// Benchmark comparing the serial reference kernels against the OpenMP ones on
// the enumeration-heavy workloads: the cf oracle over GF(101), class listing,
// and the bounded-embedding pair scan.
#include <chrono>
#include <cstdio>
#include <functional>

#include "coalglab/embeddings.hpp"
#include "coalglab/oracle.hpp"

using namespace coalglab;

namespace {

double time_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

DimensionVector dv(std::initializer_list<std::pair<std::string, std::size_t>> items) {
  DimensionVector d;
  for (const auto& [k, v] : items) d.entries[k] = v;
  return d;
}

void row(const char* name, double serial, double openmp) {
  std::printf("%-42s %10.3fs %10.3fs %8.2fx\n", name, serial, openmp,
              openmp > 0 ? serial / openmp : 0.0);
}

}  // namespace

int main() {
  std::printf("%-42s %11s %11s %9s\n", "workload", "serial", "openmp", "speedup");
  Budget budget = Budget::from_env();

  {
    auto tri = std::make_shared<Coalgebra>(path_coalgebra(Quiver::loops(3), 1, Field::GF(101)));
    auto d = dv({{"g", 3}});
    double ts = time_of([&] { cf_dimvec_oracle(tri, d, budget, ParallelMode::serial); });
    double tp = time_of([&] { cf_dimvec_oracle(tri, d, budget, ParallelMode::openmp); });
    row("cf oracle, 3-loop GF(101), |d| = 3", ts, tp);
  }
  {
    auto tri = std::make_shared<Coalgebra>(path_coalgebra(Quiver::loops(3), 1, Field::GF(101)));
    auto d = dv({{"g", 2}});
    double ts = time_of([&] { enumerate_comodules(tri, d, budget, ParallelMode::serial); });
    double tp = time_of([&] { enumerate_comodules(tri, d, budget, ParallelMode::openmp); });
    row("class listing, 3-loop GF(101), |d| = 2", ts, tp);
  }
  {
    Field f = Field::GF(5);
    auto corpus = nilpotent_module_corpus(f, 2, 2, budget);
    double ts = time_of([&] {
      verify_representation_embedding(EmbeddingFunctor::G, corpus, budget,
                                      ParallelMode::serial);
    });
    double tp = time_of([&] {
      verify_representation_embedding(EmbeddingFunctor::G, corpus, budget,
                                      ParallelMode::openmp);
    });
    row("embedding harness G, GF(5) corpus", ts, tp);
  }
  {
    Field f = Field::GF(7);
    std::vector<FreeAlgebraModule> corpus;
    for (std::uint64_t a = 0; a < 7; ++a)
      for (std::uint64_t b = 0; b < 7; ++b) {
        Matrix x(f, 2, 2), y(f, 2, 2);
        x.at(0, 1) = Scalar::residue(f, a);
        y.at(0, 1) = Scalar::residue(f, b);
        corpus.emplace_back(f, 2, std::vector<Matrix>{x, y});
      }
    std::vector<Scalar> lambdas;
    for (int i = 0; i < 3; ++i) lambdas.push_back(Scalar::of_int(f, i));
    double ts = time_of(
        [&] { verify_shift_embedding(corpus, 3, lambdas, budget, ParallelMode::serial); });
    double tp = time_of(
        [&] { verify_shift_embedding(corpus, 3, lambdas, budget, ParallelMode::openmp); });
    row("shift pair scan, 49 modules GF(7)", ts, tp);
  }
  return 0;
}
