#include "sbd/solver.hpp"

#include <string>
#include <unordered_set>
#include <utility>

namespace sbd {

namespace {

// Rotate w by a global phase so that its first entry above
// tol * max|entry| is real positive. Keeps the reshaped intertwiner
// relation intact (a global phase commutes through) while making the
// returned basis deterministic.
void canonicalize_phase(Vector& w, double tol) {
  const double scale = w.size() > 0 ? w.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) return;
  const double cut = tol * scale;
  for (Index i = 0; i < w.size(); ++i) {
    const double mag = std::abs(w(i));
    if (mag > cut) {
      w *= std::conj(w(i)) / mag;
      return;
    }
  }
}

struct ScaledKernel {
  Matrix basis;            // orthonormal columns spanning the kernel
  double sigma_max = 0.0;  // largest singular value of the input
};

// Kernel with the rank cut anchored to an external scale: singular values
// <= tol * max(scale, sigma_max) count as zero. Restrictions of a
// well-scaled operator to a running basis can be negligible as a whole, in
// which case their own sigma_max says nothing about the problem scale.
ScaledKernel kernel_with_scale(const Matrix& m, double tol, double scale) {
  ScaledKernel out;
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  out.sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = tol * std::max(scale, out.sigma_max);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  out.basis = svd.matrixV().rightCols(m.cols() - rank);
  return out;
}

void check_family_shapes(const GeneratorSet& gens, const BlockFamily& family) {
  if (family.dimension <= 0) {
    throw SpecDimensionError("block family dimension must be positive");
  }
  if (family.generators.size() != gens.count()) {
    throw SpecDimensionError(
        "block family has " + std::to_string(family.generators.size()) +
        " generators, generator set has " + std::to_string(gens.count()));
  }
  for (const Matrix& b : family.generators) {
    if (b.rows() != family.dimension || b.cols() != family.dimension) {
      throw SpecDimensionError("block generator is not " +
                               std::to_string(family.dimension) + "x" +
                               std::to_string(family.dimension));
    }
  }
}

// Residuals without any precondition checks; callers validate.
VerificationReport residual_report(const Matrix& s, const GeneratorSet& gens,
                                   const BlockSpec& spec) {
  VerificationReport report;
  const Matrix s_dag = s.adjoint();
  report.unitarity_residual =
      max_abs(s_dag * s - Matrix::Identity(s.cols(), s.cols()));
  report.generator_residuals.reserve(gens.count());
  for (std::size_t g = 0; g < gens.count(); ++g) {
    const Matrix target = assemble_block_diagonal(spec, g);
    const double r = max_abs(s_dag * gens.matrices[g] * s - target);
    report.generator_residuals.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }
  return report;
}

}  // namespace

void GeneratorSet::validate(double tol) const {
  if (dimension <= 0) {
    throw DimensionError("generator set dimension must be positive");
  }
  if (labels.size() != matrices.size()) {
    throw SpecMismatchError("generator set has " +
                            std::to_string(labels.size()) + " labels but " +
                            std::to_string(matrices.size()) + " matrices");
  }
  if (matrices.empty()) {
    throw DimensionError("generator set is empty");
  }
  std::unordered_set<std::string> seen;
  for (const std::string& label : labels) {
    if (!seen.insert(label).second) {
      throw SpecMismatchError("duplicate generator label '" + label + "'");
    }
  }
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    const Matrix& m = matrices[g];
    if (m.rows() != dimension || m.cols() != dimension) {
      throw DimensionError("generator '" + labels[g] + "' is not " +
                           std::to_string(dimension) + "x" +
                           std::to_string(dimension));
    }
    if (!is_unitary(m, tol)) {
      throw NonUnitaryInput("generator '" + labels[g] +
                            "' is not unitary within tolerance");
    }
  }
}

Index BlockSpec::total_dimension() const {
  Index total = 0;
  for (const BlockFamily& family : families) {
    total += family.dimension * family.multiplicity;
  }
  return total;
}

void BlockSpec::validate_families(const GeneratorSet& gens, double tol) const {
  for (std::size_t b = 0; b < families.size(); ++b) {
    const BlockFamily& family = families[b];
    if (family.multiplicity <= 0) {
      throw SpecDimensionError("family " + std::to_string(b) +
                               ": multiplicity must be positive");
    }
    check_family_shapes(gens, family);
    for (std::size_t g = 0; g < family.generators.size(); ++g) {
      if (!is_unitary(family.generators[g], tol)) {
        throw NonUnitaryInput("family " + std::to_string(b) + ", generator '" +
                              gens.labels[g] +
                              "': block is not unitary within tolerance");
      }
    }
  }
}

void BlockSpec::validate(const GeneratorSet& gens, double tol) const {
  validate_families(gens, tol);
  if (total_dimension() != gens.dimension) {
    throw SpecDimensionError(
        "block dimensions sum to " + std::to_string(total_dimension()) +
        ", generator dimension is " + std::to_string(gens.dimension));
  }
}

Matrix block_operator(const GeneratorSet& gens, const BlockFamily& family,
                      std::size_t g) {
  if (g >= gens.count()) {
    throw DimensionError("generator index " + std::to_string(g) +
                         " out of range");
  }
  check_family_shapes(gens, family);
  const Index d = family.dimension;
  const Index dim = gens.dimension;
  const Matrix& gen = gens.matrices[g];
  if (gen.rows() != dim || gen.cols() != dim) {
    throw DimensionError("generator matrix does not match the set dimension");
  }
  return kron(Matrix::Identity(d, d), gen) -
         kron(family.generators[g].transpose(), Matrix::Identity(dim, dim));
}

Matrix stacked_operator(const GeneratorSet& gens, const BlockFamily& family) {
  check_family_shapes(gens, family);
  const Index width = gens.dimension * family.dimension;
  const Index n = static_cast<Index>(gens.count());
  Matrix stack(n * width, width);
  for (std::size_t g = 0; g < gens.count(); ++g) {
    stack.middleRows(static_cast<Index>(g) * width, width) =
        block_operator(gens, family, g);
  }
  return stack;
}

std::vector<Vector> block_kernel(const GeneratorSet& gens,
                                 const BlockFamily& family, double tol,
                                 KernelStrategy strategy,
                                 std::size_t family_index) {
  std::vector<Vector> basis;
  if (strategy == KernelStrategy::Stacked) {
    basis = orthonormal_nullspace(stacked_operator(gens, family), tol);
  } else {
    // Running orthonormal basis of the kernels intersected so far. Each
    // step solves a small system restricted to that basis; the product of
    // orthonormal factors stays orthonormal. The rank cut stays anchored to
    // the largest operator scale seen so far.
    ScaledKernel step =
        kernel_with_scale(block_operator(gens, family, 0), tol, 0.0);
    Matrix running = std::move(step.basis);
    double scale = step.sigma_max;
    for (std::size_t g = 1; g < gens.count() && running.cols() > 0; ++g) {
      step = kernel_with_scale(block_operator(gens, family, g) * running, tol,
                               scale);
      scale = std::max(scale, step.sigma_max);
      running = running * step.basis;
    }
    basis.reserve(static_cast<std::size_t>(running.cols()));
    for (Index j = 0; j < running.cols(); ++j) {
      basis.push_back(running.col(j));
    }
  }

  for (Vector& w : basis) {
    canonicalize_phase(w, tol);
  }
  if (static_cast<Index>(basis.size()) != family.multiplicity) {
    throw KernelDimensionMismatch(family_index, family.multiplicity,
                                  static_cast<Index>(basis.size()));
  }
  return basis;
}

Matrix assemble_block_diagonal(const BlockSpec& spec, std::size_t g) {
  const Index dim = spec.total_dimension();
  Matrix out = Matrix::Zero(dim, dim);
  Index offset = 0;
  for (const BlockFamily& family : spec.families) {
    if (g >= family.generators.size()) {
      throw DimensionError("generator index " + std::to_string(g) +
                           " out of range for a block family");
    }
    for (Index copy = 0; copy < family.multiplicity; ++copy) {
      out.block(offset, offset, family.dimension, family.dimension) =
          family.generators[g];
      offset += family.dimension;
    }
  }
  return out;
}

VerificationReport verify_transfer(const Matrix& s, const GeneratorSet& gens,
                                   const BlockSpec& spec) {
  if (s.rows() != gens.dimension || s.cols() != gens.dimension) {
    throw DimensionError("transfer matrix is not " +
                         std::to_string(gens.dimension) + "x" +
                         std::to_string(gens.dimension));
  }
  if (spec.total_dimension() != gens.dimension) {
    throw SpecDimensionError(
        "block dimensions sum to " + std::to_string(spec.total_dimension()) +
        ", generator dimension is " + std::to_string(gens.dimension));
  }
  for (const Matrix& m : gens.matrices) {
    if (m.rows() != gens.dimension || m.cols() != gens.dimension) {
      throw DimensionError("generator matrix does not match the set dimension");
    }
  }
  return residual_report(s, gens, spec);
}

TransferResult assemble_transfer_matrix(const GeneratorSet& gens,
                                        const BlockSpec& spec,
                                        const SolveOptions& options) {
  gens.validate(options.tolerance);
  spec.validate_families(gens, options.tolerance);

  // Kernels first: a wrong multiplicity is diagnosed from the observed
  // kernel dimension even when it also breaks the dimension sum.
  std::vector<std::vector<Vector>> kernels;
  kernels.reserve(spec.families.size());
  for (std::size_t b = 0; b < spec.families.size(); ++b) {
    kernels.push_back(block_kernel(gens, spec.families[b], options.tolerance,
                                   options.strategy, b));
  }
  spec.validate(gens, options.tolerance);

  const Index dim = gens.dimension;
  TransferResult result;
  result.s = Matrix(dim, dim);
  result.kernel_dims.reserve(spec.families.size());
  result.family_columns.reserve(spec.families.size());

  Index col = 0;
  for (std::size_t b = 0; b < spec.families.size(); ++b) {
    const BlockFamily& family = spec.families[b];
    result.kernel_dims.push_back(static_cast<Index>(kernels[b].size()));
    result.family_columns.push_back(
        {col, family.multiplicity * family.dimension});
    for (const Vector& w : kernels[b]) {
      const Matrix intertwiner = unvec(w, dim);
      for (Index j = 0; j < intertwiner.cols(); ++j) {
        result.s.col(col++) = intertwiner.col(j).normalized();
      }
    }
  }

  VerificationReport report = residual_report(result.s, gens, spec);
  result.generator_residuals = std::move(report.generator_residuals);
  result.max_residual = report.max_residual;
  result.orthogonality_residual = report.unitarity_residual;
  return result;
}

}  // namespace sbd
