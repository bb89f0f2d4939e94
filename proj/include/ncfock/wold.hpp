#pragma once

#include "ncfock/domain.hpp"

namespace ncfock {

/// Geometric Wold decomposition of a representation-type tuple:
/// K^(0) = range K_{g,V}^*, K^(1) = ker K_{g,V}.
struct WoldDecomposition {
  Matrix basis_k0;  // d x d0, orthonormal columns
  Matrix basis_k1;  // d x d1
  OperatorTuple v_on_k0{1, 0};
  OperatorTuple v_on_k1{1, 0};
  Matrix wandering_basis;       // basis of D = K minus sum_i V_i K
  double gate_residual = 0.0;   // ||(K*K)^2 - K*K||
  std::vector<double> reducing_residuals;  // ||P0 V_i - V_i P0|| per generator
  double pure_residual_k0 = 0.0;
  double cuntz_residual_k1 = 0.0;
  double k1_cross_residual = 0.0;  // gap between ker K and the joint-kernel route
  double wandering_vs_defect_gap = 0.0;  // gap between D and range Delta
  Eigen::VectorXd kk_singular_values;
  double threshold = 0.0;
};

/// Performs the decomposition. The partial-isometry gate ||(K*K)^2 - K*K|| <= gate_tol
/// stands in for "V comes from a *-representation"; failure raises
/// std::domain_error ("not representation-type"). Subspace extraction uses
/// singular-value thresholding at threshold_rel * sigma_max.
WoldDecomposition wold_decompose(const WeightFamily& wf, const OperatorTuple& v, int degree_cap,
                                 double tol, double gate_tol = 1e-8,
                                 double threshold_rel = 1e-8);

/// Basis of the wandering space D = K minus (+)_i closure(V_i K), by
/// rank-revealing factorization of [V_1 ... V_n].
Matrix wandering_space(const OperatorTuple& v, double threshold_rel = 1e-8);

/// K^(1) as the joint kernel of {Delta V_alpha^* : |alpha| <= cap}; the
/// independent cross-check for ker K.
Matrix k1_characterization(const WeightFamily& wf, const OperatorTuple& v, int cap,
                           int degree_cap, double tol, double threshold_rel = 1e-8);

/// Orthogonality and spanning data for K^(0) = (+)_alpha V_alpha(D).
struct K0Expansion {
  std::vector<Matrix> subspaces;  // orthonormal basis of V_alpha D per word, graded-lex
  double max_cross_inner = 0.0;   // largest |<x,y>| across distinct words
  double span_gap = 0.0;          // gap between span of all V_alpha D and K^(0)
};
K0Expansion k0_orthogonal_expansion(const WeightFamily& wf, const OperatorTuple& v, int cap,
                                    int degree_cap, double tol, double threshold_rel = 1e-8);

}  // namespace ncfock
