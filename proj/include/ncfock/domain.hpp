#pragma once

#include <stdexcept>
#include <vector>

#include "ncfock/fock.hpp"

namespace ncfock {

/// Raised when a degree-truncated operator series shows no numerical
/// convergence (three-consecutive-small-increments heuristic).
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Partial sums of Delta_{g^{-1}}(T, T^*) = sum_alpha a_alpha T_alpha T_alpha^*
/// by degree. The reported matrix is symmetrized; convergence means the last
/// three degree increments all have norm <= tol * (1 + ||Delta||).
struct DefectResult {
  Matrix delta;
  int degree_cap = 0;
  std::vector<double> increment_norms;  // one per degree 0..cap
  bool converged = false;
  double tol = 0.0;
};
DefectResult defect(const WeightFamily& wf, const OperatorTuple& t, int degree_cap, double tol);

struct RadialPoint {
  double r = 0.0;
  bool in_domain = false;
  double min_delta_eig = 0.0;
};

/// Domain membership, purity and Cuntz diagnostics for a tuple. Residuals are
/// always reported; the boolean views apply the stated tolerances.
struct Classification {
  bool converged = false;
  bool in_domain = false;
  double min_delta_eig = 0.0;
  double pure_residual = 0.0;   // ||sum b_alpha T_alpha Delta T_alpha^* - I||
  double cuntz_residual = 0.0;  // ||Delta||
  std::vector<RadialPoint> radial;
  double tol_membership = 0.0;
  double tol_pure = 0.0;
  double tol_cuntz = 0.0;

  bool pure() const { return converged && in_domain && pure_residual <= tol_pure; }
  bool cuntz() const { return converged && in_domain && cuntz_residual <= tol_cuntz; }
};
Classification classify(const WeightFamily& wf, const OperatorTuple& t, int degree_cap,
                        double tol, const std::vector<double>& radial_grid = {0.5, 0.7, 0.9, 0.99},
                        double pure_tol = 1e-8, double cuntz_tol = 1e-10);

/// Prop-(lemm2) certificate: sum |a_alpha| T_alpha T_alpha^* <= c I with
/// c in (0,1) forces T to be a pure element of the domain; on pass this is
/// cross-checked against classify.
struct Lemm2Result {
  bool pass = false;
  double sup_eig = 0.0;  // largest eigenvalue of the absolute-coefficient sum
  bool converged = false;
};
Lemm2Result lemm2_certificate(const WeightFamily& wf, const OperatorTuple& t, double c,
                              int degree_cap, double tol);

/// Estimate of a ball radius epsilon with [B(H)^n]_epsilon inside the domain,
/// following the constructive recipe: t = 1/(2 max_k A_k^{1/k}) with
/// A_k = sum_{|alpha|=k} |a_alpha|, M = sum A_k t^k, omega with omega M < 1,
/// epsilon = sqrt(omega t). All quantities are probes from truncated data.
struct PureBallEstimate {
  double epsilon = 0.0;
  double t = 0.0;
  double omega = 0.0;
  double m = 0.0;
};
PureBallEstimate pure_ball_radius(const WeightFamily& wf);

/// The noncommutative Berezin kernel K: C^d -> F^2_N (x) C^r with
/// K h = sum sqrt(b_alpha) e_alpha (x) Delta^{1/2} T_alpha^* h, where the
/// defect space is spanned by the eigenvectors of Delta above
/// 1e-10 * ||Delta||. Row blocks follow the graded-lex word order.
struct BerezinKernel {
  Matrix k;             // (dim_F * rank) x d
  Matrix defect_basis;  // d x rank
  Matrix sqrt_delta;    // d x d
  int fock_degree = 0;
  Eigen::Index rank = 0;
};
BerezinKernel berezin_kernel(const WeightFamily& wf, const OperatorTuple& t, int fock_degree,
                             int degree_cap, double tol);

/// max_i || K T_i^* - (W_i^* (x) I) K || over rows of word degree < N; the
/// top degree is excluded because the truncation drop breaks the identity
/// only there.
double intertwining_residual(const WeightFamily& wf, const OperatorTuple& t,
                             const BerezinKernel& kernel);

/// max over the requested (alpha, beta) pairs of
/// || T_alpha T_beta^* - K^* (W_alpha W_beta^* (x) I) K ||.
/// Requires an isometric kernel (pure tuple) within pure_tol.
double model_transfer_check(const WeightFamily& wf, const OperatorTuple& t,
                            const BerezinKernel& kernel,
                            const std::vector<std::pair<Word, Word>>& pairs,
                            double pure_tol = 1e-6);

struct WordPairCoeff {
  Word alpha;
  Word beta;
  cplx d;
};

struct VonNeumannPair {
  double norm_t = 0.0;
  double norm_w = 0.0;
};

/// For each coefficient set, the pair (||p(T,T^*)||, ||p(W,W^*)||) with
/// p = sum d_{alpha,beta} X_alpha X_beta^*. Requires T pure within pure_tol.
std::vector<VonNeumannPair> von_neumann_check(const WeightFamily& wf, const OperatorTuple& t,
                                              const std::vector<std::vector<WordPairCoeff>>& sets,
                                              int degree_cap, double tol,
                                              double pure_tol = 1e-6);

}  // namespace ncfock
