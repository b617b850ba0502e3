#include "sbd/linalg.hpp"

#include <string>

#include <Eigen/SVD>

namespace sbd {

double max_abs(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector vec(const Matrix& a) {
  // Storage is column-major, so the flat view is already column stacking.
  return Eigen::Map<const Vector>(a.data(), a.size());
}

Matrix unvec(const Vector& w, Index leading_dim) {
  if (leading_dim <= 0) {
    throw DimensionError("unvec: leading dimension must be positive, got " +
                         std::to_string(leading_dim));
  }
  if (w.size() % leading_dim != 0) {
    throw DimensionError("unvec: vector length " + std::to_string(w.size()) +
                         " is not divisible by leading dimension " +
                         std::to_string(leading_dim));
  }
  return Eigen::Map<const Matrix>(w.data(), leading_dim,
                                  w.size() / leading_dim);
}

Matrix dagger(const Matrix& a) { return a.adjoint(); }

bool is_unitary(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const Matrix gram = a.adjoint() * a;
  return max_abs(gram - Matrix::Identity(a.cols(), a.cols())) <= tol;
}

std::vector<Vector> orthonormal_nullspace(const Matrix& m, double tol) {
  if (tol < 0.0) {
    throw Error("orthonormal_nullspace: tolerance must be nonnegative");
  }
  if (m.cols() == 0) return {};
  if (m.rows() == 0) {
    // No constraints: the whole space is the kernel.
    std::vector<Vector> basis;
    basis.reserve(static_cast<std::size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) {
      Vector e = Vector::Zero(m.cols());
      e(j) = 1.0;
      basis.push_back(std::move(e));
    }
    return basis;
  }

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = tol * (sv.size() > 0 ? sv(0) : 0.0);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }

  const Index dim = m.cols() - rank;
  std::vector<Vector> basis;
  basis.reserve(static_cast<std::size_t>(dim));
  // Right-singular vectors of the zero singular values, already orthonormal.
  for (Index j = 0; j < dim; ++j) {
    basis.push_back(svd.matrixV().col(rank + j));
  }
  return basis;
}

}  // namespace sbd
