#pragma once

#include "ncfock/domain.hpp"

namespace ncfock {

/// Infers the truncation degree N from an ambient dimension dim * aux_dim.
int infer_fock_degree(int n, Eigen::Index total_dim, Eigen::Index aux_dim = 1);

/// The s-homogeneous part of A on F^2_N (x) C^k, by exact grading-block
/// extraction: A_s = sum_p Q_{s+p} A Q_p. Sum over s of all parts is A.
Matrix homogeneous_part(const TruncatedFock& fock, const Matrix& a, int s,
                        Eigen::Index aux_dim = 1);

/// Fejer mean of the homogeneous parts, realized on the finite grading as the
/// discrete-torus Fejer kernel sampled at M = max(2N+1, N'+1) roots of unity:
/// weights sum_{j in Z} max(0, 1 - |s + jM|/(N'+1)) per part. This keeps
/// ||sigma_{N'}(A)|| <= ||A||, agrees with the plain Fejer sum for N' <= N,
/// and reproduces A exactly once N' >= 2N.
Matrix cesaro_sum(const TruncatedFock& fock, const Matrix& a, int nprime,
                  Eigen::Index aux_dim = 1);

/// The effective Cesaro weight applied to the degree-s part.
double cesaro_weight(int fock_degree, int nprime, int s);

/// Fourier coefficients of an operator on F^2_N read off the vacuum column:
/// c_beta = sqrt(b_beta) <A e_{g_0}, e_beta>. Recovers the coefficients of any
/// polynomial in W exactly.
FreeSeries fourier_coefficients(const WeightFamily& wf, const Matrix& a);

/// max_i || A Lambda_i - Lambda_i A || restricted to rows and columns of
/// degree < N (the truncation boundary is excluded).
double commutant_residual(const WeightFamily& wf, const Matrix& a);

/// sum_alpha c_alpha T_alpha for a scalar coefficient series.
Matrix poly_of_tuple(const OperatorTuple& t, const FreeSeries& coeffs);

/// Radial evaluation sum_alpha r^{|alpha|} c_alpha T_alpha.
Matrix radial_evaluate(const OperatorTuple& t, const FreeSeries& coeffs, double r);

/// Berezin functional calculus for a pure tuple:
/// Psi_T(phi(W)) = K^* (phi(W) (x) I) K. Equals poly_of_tuple(T, phi) for
/// polynomials; multiplicative on products that stay inside the truncation.
Matrix functional_calculus(const WeightFamily& wf, const OperatorTuple& t,
                           const FreeSeries& phi, int degree_cap, double tol,
                           double pure_tol = 1e-6);

/// The Cesaro sequence sigma_{N'} = sum_{s <= N'} (1 - s/(N'+1)) H_s(T) with
/// H_s(T) = sum_{|alpha|=s} c_alpha T_alpha, together with its limit
/// sum_s H_s(T).
struct CesaroCalculus {
  std::vector<Matrix> sequence;
  Matrix limit;
};
CesaroCalculus cesaro_calculus(const OperatorTuple& t, const FreeSeries& phi, int max_nprime);

/// Kernel injectivity data for the completely-non-coisometric criterion:
/// smallest singular value of K and the dimension of its kernel.
struct CncResult {
  double sigma_min = 0.0;
  Eigen::Index kernel_dim = 0;
  bool cnc = false;
  double threshold = 0.0;
};
CncResult cnc_check(const WeightFamily& wf, const OperatorTuple& t, int fock_degree,
                    int degree_cap, double tol);

}  // namespace ncfock
