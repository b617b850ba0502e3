#pragma once

#include <string>
#include <vector>

#include "sbd/linalg.hpp"

namespace sbd {

/// An ordered set of labeled unitary matrices, all of the same dimension.
/// Label order is significant: it pairs each generator with the matching
/// entry of every block family.
struct GeneratorSet {
  Index dimension = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> matrices;

  std::size_t count() const { return matrices.size(); }

  /// Shape, label-uniqueness and unitarity checks. Throws DimensionError,
  /// SpecMismatchError or NonUnitaryInput (naming the offending label).
  void validate(double tol) const;
};

/// One family of the target block structure: a d x d unitary block per
/// generator, repeated `multiplicity` times in direct succession. Degenerate
/// copies are stored once and taken literally identical; a copy that is only
/// equivalent up to a fixed similarity transformation must have the twist
/// absorbed by the caller first.
struct BlockFamily {
  Index dimension = 0;
  Index multiplicity = 0;
  std::vector<Matrix> generators;
};

/// The declared block decomposition: families in the order in which their
/// blocks appear along the diagonal of the target matrices.
struct BlockSpec {
  std::vector<BlockFamily> families;

  /// Sum of multiplicity * dimension over all families.
  Index total_dimension() const;

  /// Per-family consistency against a generator set: generator counts,
  /// block shapes and unitarity. Throws SpecDimensionError or
  /// NonUnitaryInput.
  void validate_families(const GeneratorSet& gens, double tol) const;

  /// validate_families plus the total-dimension constraint
  /// (sum of multiplicity * dimension equals the ambient dimension).
  void validate(const GeneratorSet& gens, double tol) const;
};

/// Half-open column range [offset, offset+length) of the transfer matrix.
struct ColumnRange {
  Index offset = 0;
  Index length = 0;
};

/// Solver output: the transfer matrix plus the diagnostics needed to judge
/// it without re-deriving anything.
struct TransferResult {
  /// Unitary matrix whose columns are the reshaped, normalized kernel
  /// vectors, family by family.
  Matrix s;
  /// Kernel dimension found for each family (equals the multiplicity on
  /// every accepted instance).
  std::vector<Index> kernel_dims;
  /// Which columns of s belong to which family.
  std::vector<ColumnRange> family_columns;
  /// max |dagger(s) G s - B| per generator, in generator order.
  std::vector<double> generator_residuals;
  double max_residual = 0.0;
  /// max |dagger(s) s - I|.
  double orthogonality_residual = 0.0;
};

}  // namespace sbd
