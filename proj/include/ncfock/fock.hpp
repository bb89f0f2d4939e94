#pragma once

#include <vector>

#include "ncfock/linalg.hpp"
#include "ncfock/weights.hpp"
#include "ncfock/words.hpp"

namespace ncfock {

/// The truncated full Fock space F^2_N(H_n): basis {e_alpha : |alpha| <= N}
/// in graded-lex order, so each degree occupies a contiguous block.
struct TruncatedFock {
  TruncatedFock(int n_, int degree_);

  int n;
  int degree;
  Eigen::Index dim;

  Eigen::Index offset(int k) const;           // first index of the degree-k block
  Eigen::Index block_size(int k) const;       // n^k
  int degree_of_index(Eigen::Index i) const;  // |alpha| for basis index i
};

/// An n-tuple of square matrices on a common finite-dimensional space.
class OperatorTuple {
 public:
  OperatorTuple(int n, Eigen::Index dim);
  OperatorTuple(std::vector<Matrix> matrices);

  int n() const { return static_cast<int>(matrices_.size()); }
  Eigen::Index dim() const { return dim_; }
  const Matrix& operator[](int i) const { return matrices_[static_cast<std::size_t>(i)]; }
  Matrix& operator[](int i) { return matrices_[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  /// T_alpha = T_{i_1} ... T_{i_k} for alpha = g_{i_1}...g_{i_k}; identity for g_0.
  Matrix word_operator(const Word& alpha) const;

  /// B^* T_i B for an isometric column basis B (compression to span B).
  OperatorTuple compress(const Matrix& basis) const;

  /// Direct sum with another tuple on the same generator count.
  OperatorTuple direct_sum(const OperatorTuple& other) const;

  /// (T_i (x) I_k) for every i.
  OperatorTuple tensor_identity(Eigen::Index k) const;

  /// (r T_1, ..., r T_n).
  OperatorTuple scaled(double r) const;

 private:
  Eigen::Index dim_;
  std::vector<Matrix> matrices_;
};

/// Weighted left creation operators on F^2_N: W_i e_alpha =
/// sqrt(b_alpha/b_{g_i alpha}) e_{g_i alpha} for |alpha| < N, and 0 on the top
/// degree (compression to the co-invariant subspace of degrees <= N).
OperatorTuple build_W(const WeightFamily& wf, int N);

/// Weighted right creation operators: Lambda_i e_alpha =
/// sqrt(b_alpha/b_{alpha g_i}) e_{alpha g_i}, with the same top-degree drop.
OperatorTuple build_Lambda(const WeightFamily& wf, int N);

/// Orthogonal projection onto the degree-p block.
Matrix grading_projection(const TruncatedFock& fock, int p);

/// sum_{|beta| <= N} a_beta W_beta W_beta^* on the truncation; equals the
/// projection onto C e_{g_0} exactly, every diagonal entry being a full
/// eq-(sum1) sum. Dense route (explicit word operators).
Matrix model_defect(const WeightFamily& wf, int N);

/// Same value computed through the one-nonzero-per-column structure of the
/// W_i (no dense products).
Matrix model_defect_structured(const WeightFamily& wf, int N);

/// sum_{|alpha| <= N} b_alpha W_alpha P_{C1} W_alpha^* = I on the truncation.
Matrix model_completeness(const WeightFamily& wf, int N);

Matrix model_completeness_structured(const WeightFamily& wf, int N);

/// W_i^* W_i - sum_p W_p W_p^*, a diagonal matrix whose entries match
/// diagonal_decay_probe on interior degrees.
Matrix diag_compactness_matrix(const WeightFamily& wf, int N, int i);

/// Applies fn to (alpha, T_alpha) for every word with |alpha| <= cap, degree
/// by degree, reusing the previous degree's products.
void for_each_word_operator(const OperatorTuple& t, int cap,
                            const std::function<void(const Word&, const Matrix&)>& fn);

}  // namespace ncfock
