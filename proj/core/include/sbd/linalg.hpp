#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sbd/errors.hpp"

namespace sbd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Largest absolute value of any entry; 0 for empty matrices.
double max_abs(const Matrix& a);

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Column stacking: entries 0..rows-1 are column 0 of a, the next rows
/// entries column 1, and so on.
Vector vec(const Matrix& a);

/// Inverse of vec with a declared leading dimension: consecutive chunks of
/// leading_dim entries become the columns of a leading_dim x (n/leading_dim)
/// matrix. Throws DimensionError when the length is not divisible.
Matrix unvec(const Vector& w, Index leading_dim);

/// Conjugate transpose.
Matrix dagger(const Matrix& a);

/// True iff a is square and max|dagger(a)*a - I| <= tol.
bool is_unitary(const Matrix& a, double tol);

/// Orthonormal basis of { x : m x = 0 }. The numerical rank cut treats
/// singular values <= tol * sigma_max as zero. Returns an empty list when
/// the kernel is trivial.
std::vector<Vector> orthonormal_nullspace(const Matrix& m, double tol);

}  // namespace sbd
