// Microbenchmarks for the kernel machinery: the built-in instance with both
// strategies, plus scrambled cyclic instances of growing dimension where the
// nullspace work dominates.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "sbd/d8.hpp"
#include "sbd/solver.hpp"

namespace {

using namespace sbd;

Matrix random_unitary(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(n, n);
}

// Scrambled regular-like instance of the cyclic group of order n: n
// one-dimensional families, one generator.
struct CyclicInstance {
  GeneratorSet gens;
  BlockSpec blocks;
};

CyclicInstance cyclic_instance(int n, std::uint64_t seed) {
  CyclicInstance instance;
  for (int k = 0; k < n; ++k) {
    BlockFamily family;
    family.dimension = 1;
    family.multiplicity = 1;
    Matrix block(1, 1);
    const double angle = 2.0 * M_PI * k / n;
    block(0, 0) = Complex(std::cos(angle), std::sin(angle));
    family.generators = {block};
    instance.blocks.families.push_back(std::move(family));
  }
  std::mt19937_64 rng(seed);
  const Matrix u0 = random_unitary(n, rng);
  instance.gens.dimension = n;
  instance.gens.labels = {"a"};
  instance.gens.matrices = {u0 * assemble_block_diagonal(instance.blocks, 0) *
                            u0.adjoint()};
  return instance;
}

void BM_solve_d8_stacked(benchmark::State& state) {
  const D8Example ex = d8_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_transfer_matrix(ex.generators, ex.blocks));
  }
}
BENCHMARK(BM_solve_d8_stacked);

void BM_solve_d8_incremental(benchmark::State& state) {
  const D8Example ex = d8_example();
  SolveOptions options;
  options.strategy = KernelStrategy::Incremental;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        assemble_transfer_matrix(ex.generators, ex.blocks, options));
  }
}
BENCHMARK(BM_solve_d8_incremental);

void BM_solve_cyclic(benchmark::State& state) {
  const CyclicInstance instance =
      cyclic_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        assemble_transfer_matrix(instance.gens, instance.blocks));
  }
}
BENCHMARK(BM_solve_cyclic)->Arg(8)->Arg(16)->Arg(32);

void BM_stacked_kernel_2d_family(benchmark::State& state) {
  const D8Example ex = d8_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        block_kernel(ex.generators, ex.blocks.families[4], 1e-10));
  }
}
BENCHMARK(BM_stacked_kernel_2d_family);

void BM_kron(benchmark::State& state) {
  const Index n = state.range(0);
  std::mt19937_64 rng(5);
  const Matrix a = random_unitary(n, rng);
  const Matrix b = random_unitary(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_kron)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
