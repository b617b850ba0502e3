#pragma once

#include <cstddef>
#include <vector>

#include "sbd/types.hpp"

namespace sbd {

/// How the common kernel over all generators is computed.
enum class KernelStrategy {
  /// Nullspace of all per-generator operators stacked into one tall matrix.
  Stacked,
  /// Intersect kernels generator by generator, restricting each operator to
  /// the running kernel basis. Trades the tall stack for a sequence of small
  /// factorizations; spans the same space as Stacked.
  Incremental,
};

struct SolveOptions {
  /// Relative tolerance driving unitarity checks and singular-value cuts.
  double tolerance = 1e-10;
  KernelStrategy strategy = KernelStrategy::Stacked;

  /// Residual level above which a solution is considered failed; one order
  /// looser than the construction tolerance.
  double verification_threshold() const { return 10.0 * tolerance; }
};

/// The linear operator kron(I_d, G_g) - kron(transpose(B_g), I_D) whose
/// kernel vectors reshape into intertwiners W with G_g W = W B_g.
Matrix block_operator(const GeneratorSet& gens, const BlockFamily& family,
                      std::size_t g);

/// Vertical stack of block_operator over all generators:
/// (N*D*d) x (D*d).
Matrix stacked_operator(const GeneratorSet& gens, const BlockFamily& family);

/// Orthonormal basis of the common kernel of a family's operators. Each
/// basis vector is phase-normalized so that its first entry above
/// tol * max|entry| is real positive, making the output deterministic.
/// Throws KernelDimensionMismatch unless exactly family.multiplicity vectors
/// are found; family_index only labels the error message.
std::vector<Vector> block_kernel(const GeneratorSet& gens,
                                 const BlockFamily& family, double tol,
                                 KernelStrategy strategy = KernelStrategy::Stacked,
                                 std::size_t family_index = 0);

/// The D x D direct sum with each family's block for generator g repeated
/// `multiplicity` times, families in spec order.
Matrix assemble_block_diagonal(const BlockSpec& spec, std::size_t g);

struct VerificationReport {
  /// max |dagger(s) G s - B| per generator, in generator order.
  std::vector<double> generator_residuals;
  double max_residual = 0.0;
  /// max |dagger(s) s - I|; large values mean the residuals above are not
  /// meaningful as similarity residuals.
  double unitarity_residual = 0.0;
};

/// Residuals of dagger(s) * G_g * s - B_g for every generator. Reports, never
/// judges: a wrong s comes back with large residuals, not an exception.
VerificationReport verify_transfer(const Matrix& s, const GeneratorSet& gens,
                                   const BlockSpec& spec);

/// Full pipeline: validate inputs, solve the kernel equations family by
/// family, reshape each kernel vector into D x d column groups, normalize
/// every column, and report residuals.
///
/// Throws NonUnitaryInput / SpecDimensionError on invalid inputs and
/// KernelDimensionMismatch when a family's kernel dimension differs from its
/// multiplicity.
TransferResult assemble_transfer_matrix(const GeneratorSet& gens,
                                        const BlockSpec& spec,
                                        const SolveOptions& options = {});

}  // namespace sbd
