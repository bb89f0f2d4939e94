#include "ncfock/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ncfock {

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  // sqrt of the top eigenvalue of the smaller Gram matrix; much faster than a
  // full SVD and accurate to ~eps * ||m|| at the scales handled here.
  const Matrix gram =
      m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix psd_sqrt(const Matrix& hermitian, double neg_tol, double clip_below) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -neg_tol) throw std::domain_error("psd_sqrt: matrix has a negative eigenvalue");
    if (ev(i) < clip_below) ev(i) = 0.0;
  }
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

Matrix range_basis(const Matrix& m, double rel_threshold) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? sv(0) * rel_threshold : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff && sv(rank) > 0.0) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix kernel_basis(const Matrix& m, double rel_threshold) {
  if (m.rows() == 0) return Matrix::Identity(m.cols(), m.cols());
  if (m.cols() == 0) return Matrix(0, 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? sv(0) * rel_threshold : 0.0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff && sv(rank) > 0.0) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Eigen::VectorXd singular_values(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd(0);
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

double subspace_gap(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("subspace_gap: ambient mismatch");
  const Matrix pa = a * a.adjoint();
  const Matrix pb = b * b.adjoint();
  return operator_norm(pa - pb);
}

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = dist(rng);
      const double im = dist(rng);
      out(i, j) = std::complex<double>(re, im);
    }
  return out;
}

Matrix random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  const Matrix m = random_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  return q;
}

}  // namespace ncfock
