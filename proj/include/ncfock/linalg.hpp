#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace ncfock {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Spectral norm (largest singular value); 0 for empty matrices.
double operator_norm(const Matrix& m);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Hermitian square root with an eigenvalue floor: eigenvalues below
/// clip_below are set to 0. Throws if an eigenvalue is below -neg_tol.
Matrix psd_sqrt(const Matrix& hermitian, double neg_tol, double clip_below);

/// Orthonormal basis of the column space of m, keeping singular directions
/// with sigma > rel_threshold * sigma_max.
Matrix range_basis(const Matrix& m, double rel_threshold);

/// Orthonormal basis of the kernel of m (right singular vectors with
/// sigma <= rel_threshold * sigma_max). For a zero matrix this is the identity.
Matrix kernel_basis(const Matrix& m, double rel_threshold);

/// Singular values of m in decreasing order.
Eigen::VectorXd singular_values(const Matrix& m);

/// ||P_a - P_b|| for the orthogonal projections onto the column spans of the
/// orthonormal bases a and b. 0 when the subspaces coincide.
double subspace_gap(const Matrix& a, const Matrix& b);

/// Matrix with iid entries uniform in the complex unit square, seeded.
Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

/// Random unitary via QR of a random matrix.
Matrix random_unitary(Eigen::Index dim, std::mt19937_64& rng);

}  // namespace ncfock
