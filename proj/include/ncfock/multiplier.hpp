#pragma once

#include "ncfock/fock.hpp"

namespace ncfock {

/// A truncated formal series sum_alpha Z_alpha (x) A_(alpha) with matrix
/// coefficients A_(alpha): C^{e1} -> C^{e2}, stored densely in graded-lex
/// word order.
struct MultiplierSymbol {
  MultiplierSymbol(int n, int degree, Eigen::Index e1, Eigen::Index e2);

  int n;
  int degree;
  Eigen::Index e1;
  Eigen::Index e2;
  std::vector<Matrix> terms;  // graded-lex indexed, each e2 x e1

  const Matrix& term(const Word& alpha) const;
  Matrix& term(const Word& alpha);
};

/// Matrix of U_g: F^2(H_n) -> F^2(g), e_alpha -> sqrt(b_alpha) Z_alpha, read
/// in Fock coordinates on the left and Z-coefficient coordinates on the
/// right: diag(sqrt(b_alpha)). Unitary for the weighted norm
/// ||zeta||_g^2 = sum |c_alpha|^2 / b_alpha.
Matrix u_g(const WeightFamily& wf, int N);

/// Left multiplications L_{Z_i} on F^2(g), in the orthonormal basis
/// {sqrt(b_alpha) Z_alpha}. Numerically these coincide with the weighted left
/// creation operators (U_g conjugation is the identity in these coordinates).
OperatorTuple build_L(const WeightFamily& wf, int N);

/// Right multiplications R_{Z_i} on F^2(g), orthonormal coordinates.
OperatorTuple build_R(const WeightFamily& wf, int N);

/// zeta -> zeta * phi, the right-multiplier convolution
/// (zeta phi)_gamma = sum_{beta alpha = gamma} A_(alpha) h_(beta), acting on
/// orthonormal-coordinate vectors of F^2(g) (x) C^{e1} into F^2(f) (x) C^{e2}.
Vector apply_right_multiplier(const MultiplierSymbol& phi, const Vector& zeta,
                              const WeightFamily& g, const WeightFamily& f, int N);

/// The full matrix of R_phi: F^2(g) (x) C^{e1} -> F^2(f) (x) C^{e2} in
/// orthonormal coordinates; block at (gamma = beta alpha, beta) equals
/// sqrt(b^g_beta / b^f_gamma) A_(alpha).
Matrix right_multiplier_matrix(const MultiplierSymbol& phi, const WeightFamily& g,
                               const WeightFamily& f, int N);

struct SymbolRecovery {
  MultiplierSymbol symbol;
  double intertwining_residual = 0.0;
  double reconstruction_residual = 0.0;
};

/// Extracts the symbol of a commutant element: X must intertwine the left
/// multiplications on interior degrees within tol, and then
/// X(1 (x) h) = sum Z_alpha (x) A_(alpha) h determines the coefficients.
/// Throws std::domain_error when X is not multi-analytic.
SymbolRecovery symbol_from_commutant(const Matrix& x, const WeightFamily& g,
                                     const WeightFamily& f, Eigen::Index e1, Eigen::Index e2,
                                     double tol = 1e-8);

struct HatXResult {
  Matrix hat_x;
  double w_intertwining_residual = 0.0;
};

/// The Fock-side multi-analytic operator (U_f^* (x) I) X (U_g (x) I). In the
/// orthonormal storage convention this is the same matrix; the operation
/// verifies the W-intertwining residual on interior degrees and re-labels.
HatXResult hatX_conjugate(const Matrix& x, const WeightFamily& g, const WeightFamily& f,
                          Eigen::Index e1, Eigen::Index e2, double tol = 1e-8);

}  // namespace ncfock
