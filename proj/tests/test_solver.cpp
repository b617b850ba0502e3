#include <doctest.h>

#include <random>
#include <vector>

#include "sbd/d8.hpp"
#include "sbd/solver.hpp"
#include "test_helpers.hpp"

using namespace sbd;

namespace {

BlockSpec with_multiplicity(BlockSpec spec, std::size_t family, Index q) {
  spec.families[family].multiplicity = q;
  return spec;
}

}  // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("block operator of a trivial one-dimensional block") {
  const D8Example ex = d8_example();
  const Matrix op = block_operator(ex.generators, ex.blocks.families[0], 0);
  CHECK(max_abs(op - (ex.generators.matrices[0] - Matrix::Identity(8, 8))) ==
        0.0);
}

TEST_CASE("block operator vanishes on identity generators and blocks") {
  GeneratorSet gens;
  gens.dimension = 4;
  gens.labels = {"e"};
  gens.matrices = {Matrix::Identity(4, 4)};
  BlockFamily family;
  family.dimension = 2;
  family.multiplicity = 2;
  family.generators = {Matrix::Identity(2, 2)};
  const Matrix op = block_operator(gens, family, 0);
  REQUIRE(op.rows() == 8);
  CHECK(max_abs(op) == 0.0);
}

TEST_CASE("block operators annihilate the known kernel vectors") {
  const D8Example ex = d8_example();
  for (int family = 0; family < 4; ++family) {
    const Vector w = testutil::d8_kernel_vector(family);
    for (std::size_t g = 0; g < 2; ++g) {
      const Matrix op =
          block_operator(ex.generators, ex.blocks.families[family], g);
      CHECK((op * w).norm() <= 1e-14);
    }
  }
  for (const Vector& w : testutil::d8_family5_kernel()) {
    for (std::size_t g = 0; g < 2; ++g) {
      const Matrix op = block_operator(ex.generators, ex.blocks.families[4], g);
      REQUIRE(op.rows() == 16);
      CHECK((op * w).norm() <= 1e-14);
    }
  }
}

TEST_CASE("stacked operator stacks the per-generator operators") {
  const D8Example ex = d8_example();
  const Matrix stack = stacked_operator(ex.generators, ex.blocks.families[0]);
  REQUIRE(stack.rows() == 16);
  REQUIRE(stack.cols() == 8);
  CHECK(max_abs(Matrix(stack.topRows(8)) -
                block_operator(ex.generators, ex.blocks.families[0], 0)) ==
        0.0);
  CHECK(max_abs(Matrix(stack.bottomRows(8)) -
                block_operator(ex.generators, ex.blocks.families[0], 1)) ==
        0.0);

  const Matrix stack5 = stacked_operator(ex.generators, ex.blocks.families[4]);
  CHECK(stack5.rows() == 32);
  CHECK(stack5.cols() == 16);

  GeneratorSet single;
  single.dimension = 8;
  single.labels = {"a"};
  single.matrices = {ex.generators.matrices[0]};
  BlockFamily single_family = ex.blocks.families[0];
  single_family.generators.resize(1);
  CHECK(max_abs(stacked_operator(single, single_family) -
                block_operator(single, single_family, 0)) == 0.0);
}

TEST_CASE("block kernels of the dihedral instance match the known vectors") {
  const D8Example ex = d8_example();
  for (const KernelStrategy strategy :
       {KernelStrategy::Stacked, KernelStrategy::Incremental}) {
    for (int family = 0; family < 4; ++family) {
      const auto kernel = block_kernel(
          ex.generators, ex.blocks.families[family], 1e-10, strategy);
      REQUIRE(kernel.size() == 1);
      const Vector expected = testutil::d8_kernel_vector(family);
      CHECK(std::abs(std::abs(expected.dot(kernel[0])) - 1.0) <= 1e-12);
    }

    const auto kernel5 =
        block_kernel(ex.generators, ex.blocks.families[4], 1e-10, strategy);
    REQUIRE(kernel5.size() == 2);
    const Matrix computed = testutil::span_projector(kernel5);
    const Matrix reference =
        testutil::span_projector(testutil::d8_family5_kernel());
    CHECK(max_abs(computed - reference) <= 1e-10);
  }
}

TEST_CASE("block kernel vectors come out phase-canonical") {
  const D8Example ex = d8_example();
  for (std::size_t b = 0; b < ex.blocks.families.size(); ++b) {
    for (const Vector& w :
         block_kernel(ex.generators, ex.blocks.families[b], 1e-10)) {
      const double cut = 1e-10 * w.cwiseAbs().maxCoeff();
      for (Index k = 0; k < w.size(); ++k) {
        if (std::abs(w(k)) > cut) {
          CHECK(w(k).imag() == doctest::Approx(0.0).epsilon(1e-12));
          CHECK(w(k).real() > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("kernel dimension mismatches are reported with the observed value") {
  const D8Example ex = d8_example();

  SUBCASE("multiplicity too large") {
    const BlockSpec corrupted = with_multiplicity(ex.blocks, 4, 3);
    try {
      block_kernel(ex.generators, corrupted.families[4], 1e-10,
                   KernelStrategy::Stacked, 4);
      FAIL("expected KernelDimensionMismatch");
    } catch (const KernelDimensionMismatch& e) {
      CHECK(e.family() == 4);
      CHECK(e.expected() == 3);
      CHECK(e.observed() == 2);
    }
  }
  SUBCASE("multiplicity too small") {
    const BlockSpec corrupted = with_multiplicity(ex.blocks, 4, 1);
    try {
      block_kernel(ex.generators, corrupted.families[4], 1e-10);
      FAIL("expected KernelDimensionMismatch");
    } catch (const KernelDimensionMismatch& e) {
      CHECK(e.observed() == 2);
    }
  }
  SUBCASE("blocks equivalent to no invariant subspace") {
    // G_b has real eigenvalues only, so demanding eigenvalue i leaves a
    // trivial kernel.
    BlockFamily bogus;
    bogus.dimension = 1;
    bogus.multiplicity = 1;
    Matrix minus_one(1, 1), phase(1, 1);
    minus_one(0, 0) = -1.0;
    phase(0, 0) = Complex(0.0, 1.0);
    bogus.generators = {minus_one, phase};
    try {
      block_kernel(ex.generators, bogus, 1e-10);
      FAIL("expected KernelDimensionMismatch");
    } catch (const KernelDimensionMismatch& e) {
      CHECK(e.observed() == 0);
    }
  }
}

TEST_CASE("assemble_block_diagonal") {
  SUBCASE("single family of full dimension") {
    std::mt19937_64 rng(41);
    BlockSpec spec;
    BlockFamily family;
    family.dimension = 3;
    family.multiplicity = 1;
    family.generators = {testutil::random_unitary(3, rng)};
    spec.families = {family};
    CHECK(max_abs(assemble_block_diagonal(spec, 0) - family.generators[0]) ==
          0.0);
  }
  SUBCASE("multiplicity repeats blocks in direct succession") {
    Matrix x(1, 1), y(1, 1);
    x(0, 0) = Complex(0.0, 1.0);
    y(0, 0) = -1.0;
    BlockSpec spec;
    spec.families = {{1, 2, {x}}, {1, 1, {y}}};
    Matrix expected = Matrix::Zero(3, 3);
    expected(0, 0) = x(0, 0);
    expected(1, 1) = x(0, 0);
    expected(2, 2) = y(0, 0);
    CHECK(max_abs(assemble_block_diagonal(spec, 0) - expected) == 0.0);
  }
}

TEST_CASE("solving the dihedral instance reproduces the reference solution") {
  const D8Example ex = d8_example();
  const TransferResult result =
      assemble_transfer_matrix(ex.generators, ex.blocks);

  CHECK(result.kernel_dims == std::vector<Index>{1, 1, 1, 1, 2});
  CHECK(result.orthogonality_residual <= 1e-10);
  CHECK(result.max_residual <= 1e-10);
  REQUIRE(result.family_columns.size() == 5);
  for (std::size_t b = 0; b < 4; ++b) {
    CHECK(result.family_columns[b].offset == static_cast<Index>(b));
    CHECK(result.family_columns[b].length == 1);
  }
  CHECK(result.family_columns[4].offset == 4);
  CHECK(result.family_columns[4].length == 4);

  // Non-degenerate columns agree with the reference up to a unit phase;
  // the degenerate family only as a subspace.
  for (Index c = 0; c < 4; ++c) {
    const Complex overlap = ex.reference_s.col(c).dot(result.s.col(c));
    CHECK(std::abs(overlap) > 1.0 - 1e-10);
  }
  const Matrix computed =
      testutil::column_projector(result.s.rightCols(4));
  const Matrix reference =
      testutil::column_projector(ex.reference_s.rightCols(4));
  CHECK(max_abs(computed - reference) <= 1e-10);
}

TEST_CASE("already block-diagonal generators solve with tiny residuals") {
  const D8Example ex = d8_example();
  GeneratorSet diagonal;
  diagonal.dimension = 8;
  diagonal.labels = ex.generators.labels;
  diagonal.matrices = {assemble_block_diagonal(ex.blocks, 0),
                       assemble_block_diagonal(ex.blocks, 1)};
  const TransferResult result = assemble_transfer_matrix(diagonal, ex.blocks);
  CHECK(result.kernel_dims == std::vector<Index>{1, 1, 1, 1, 2});
  CHECK(result.max_residual <= 1e-10);
  CHECK(result.orthogonality_residual <= 1e-10);
}

TEST_CASE("scrambled instances with a known answer solve below threshold") {
  const D8Example ex = d8_example();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GeneratorSet gens = testutil::scrambled_generators(
        ex.blocks, ex.generators.labels, seed);
    const TransferResult result = assemble_transfer_matrix(gens, ex.blocks);
    CHECK(result.kernel_dims == std::vector<Index>{1, 1, 1, 1, 2});
    CHECK(result.max_residual <= 1e-9);
    CHECK(result.orthogonality_residual <= 1e-9);
  }
  const BlockSpec z4 = testutil::z4_blocks();
  for (std::uint64_t seed = 11; seed <= 15; ++seed) {
    const GeneratorSet gens =
        testutil::scrambled_generators(z4, testutil::z4_labels(), seed);
    const TransferResult result = assemble_transfer_matrix(gens, z4);
    CHECK(result.kernel_dims == std::vector<Index>{1, 1, 1, 1});
    CHECK(result.max_residual <= 1e-9);
  }
}

TEST_CASE("verify_transfer reports and never judges") {
  const D8Example ex = d8_example();

  SUBCASE("identity on an already block-diagonal set is exact") {
    GeneratorSet diagonal;
    diagonal.dimension = 8;
    diagonal.labels = ex.generators.labels;
    diagonal.matrices = {assemble_block_diagonal(ex.blocks, 0),
                         assemble_block_diagonal(ex.blocks, 1)};
    const VerificationReport report =
        verify_transfer(Matrix::Identity(8, 8), diagonal, ex.blocks);
    CHECK(report.max_residual == 0.0);
  }
  SUBCASE("identity on a scrambled set reports order-one residuals") {
    const GeneratorSet gens = testutil::scrambled_generators(
        ex.blocks, ex.generators.labels, 99);
    const VerificationReport report =
        verify_transfer(Matrix::Identity(8, 8), gens, ex.blocks);
    CHECK(report.max_residual > 0.1);
  }
  SUBCASE("shape mismatches are rejected") {
    CHECK_THROWS_AS(verify_transfer(Matrix::Identity(7, 7), ex.generators,
                                    ex.blocks),
                    DimensionError);
  }
}

TEST_CASE("kernel vectors reshape into intertwiners with Schur structure") {
  const D8Example ex = d8_example();
  const auto kernel = block_kernel(ex.generators, ex.blocks.families[4], 1e-10);
  REQUIRE(kernel.size() == 2);
  std::vector<Matrix> intertwiners;
  for (const Vector& w : kernel) {
    intertwiners.push_back(unvec(w, 8));
  }
  for (const Matrix& w : intertwiners) {
    const Matrix gram = w.adjoint() * w;
    CHECK(std::abs(gram(0, 1)) <= 1e-10);
    CHECK(std::abs(gram(1, 0)) <= 1e-10);
    CHECK(std::abs(gram(0, 0) - gram(1, 1)) <= 1e-10);
    CHECK(gram(0, 0).real() > 0.0);
  }
  const Matrix cross = intertwiners[0].adjoint() * intertwiners[1];
  CHECK(max_abs(cross) <= 1e-10);
}

TEST_CASE("kernel dimension is invariant under a fixed block basis change") {
  const D8Example ex = d8_example();
  std::mt19937_64 rng(55);
  const Matrix t = testutil::random_unitary(2, rng);
  BlockSpec twisted = ex.blocks;
  for (Matrix& block : twisted.families[4].generators) {
    block = t.adjoint() * block * t;
  }
  const auto kernel =
      block_kernel(ex.generators, twisted.families[4], 1e-10);
  CHECK(kernel.size() == 2);
  const TransferResult result = assemble_transfer_matrix(ex.generators, twisted);
  CHECK(result.max_residual <= 1e-9);
  CHECK(result.orthogonality_residual <= 1e-9);
}

TEST_CASE("stacked and incremental strategies span the same subspaces") {
  const D8Example ex = d8_example();
  std::vector<GeneratorSet> instances = {ex.generators};
  for (std::uint64_t seed = 3; seed <= 6; ++seed) {
    instances.push_back(testutil::scrambled_generators(
        ex.blocks, ex.generators.labels, seed));
  }
  for (const GeneratorSet& gens : instances) {
    for (std::size_t b = 0; b < ex.blocks.families.size(); ++b) {
      const auto stacked = block_kernel(gens, ex.blocks.families[b], 1e-10,
                                        KernelStrategy::Stacked, b);
      const auto incremental = block_kernel(gens, ex.blocks.families[b], 1e-10,
                                            KernelStrategy::Incremental, b);
      CHECK(max_abs(testutil::span_projector(stacked) -
                    testutil::span_projector(incremental)) <= 1e-10);
    }
  }
}

TEST_CASE("invalid inputs are rejected up front") {
  const D8Example ex = d8_example();

  SUBCASE("non-unitary generator") {
    GeneratorSet gens = ex.generators;
    gens.matrices[0](0, 0) = 2.0;
    CHECK(testutil::throws_containing<NonUnitaryInput>(
        [&] { assemble_transfer_matrix(gens, ex.blocks); }, "'a'"));
  }
  SUBCASE("non-unitary block") {
    BlockSpec blocks = ex.blocks;
    blocks.families[2].generators[0](0, 0) = 0.5;
    CHECK_THROWS_AS(assemble_transfer_matrix(ex.generators, blocks),
                    NonUnitaryInput);
  }
  SUBCASE("dimensions that do not sum to the ambient dimension") {
    BlockSpec blocks = ex.blocks;
    blocks.families.pop_back();
    CHECK_THROWS_AS(assemble_transfer_matrix(ex.generators, blocks),
                    SpecDimensionError);
  }
  SUBCASE("wrong per-family generator count") {
    BlockSpec blocks = ex.blocks;
    blocks.families[1].generators.pop_back();
    CHECK_THROWS_AS(assemble_transfer_matrix(ex.generators, blocks),
                    SpecDimensionError);
  }
}

TEST_CASE("solves are deterministic") {
  const D8Example ex = d8_example();
  const TransferResult first = assemble_transfer_matrix(ex.generators, ex.blocks);
  const TransferResult second = assemble_transfer_matrix(ex.generators, ex.blocks);
  for (Index j = 0; j < 8; ++j) {
    for (Index i = 0; i < 8; ++i) {
      CHECK(first.s(i, j) == second.s(i, j));
    }
  }
}

TEST_SUITE_END();
