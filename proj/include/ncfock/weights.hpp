#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncfock/series.hpp"

namespace ncfock {

enum class WeightKind { bergman, dirichlet, psi, table };

std::string to_string(WeightKind kind);

/// A family of strictly positive weights {b_alpha} with b_{g_0} = 1, together
/// with the lazily derived inverse coefficients {a_alpha} of g^{-1}.
/// Immutable after construction; the inverse is computed once on first use.
class WeightFamily {
 public:
  static WeightFamily bergman(int n, double s, int degree);
  static WeightFamily dirichlet(int n, double s, int degree);
  static WeightFamily psi(const FreeSeries& phi, double s, int degree);
  static WeightFamily from_table(const FreeSeries& b);

  int n() const { return b_.n(); }
  int degree() const { return b_.degree(); }
  WeightKind kind() const { return kind_; }
  std::optional<double> s_param() const { return s_; }
  const std::optional<FreeSeries>& phi() const { return phi_; }

  double b(const Word& w) const { return b_.coeff(w).real(); }
  double b_at(std::int64_t index) const { return b_.coeff_at(index).real(); }
  const FreeSeries& b_series() const { return b_; }

  /// Coefficients of g^{-1}. Validated against eq-(sum1)/(sum2) residuals on
  /// first computation; residual > 1e-12 * max|b| is a hard error.
  const FreeSeries& inverse() const;
  double a(const Word& w) const { return inverse().coeff(w).real(); }
  double a_at(std::int64_t index) const { return inverse().coeff_at(index).real(); }

 private:
  WeightFamily(FreeSeries b, WeightKind kind, std::optional<double> s,
               std::optional<FreeSeries> phi);

  struct LazyInverse {
    std::once_flag flag;
    std::optional<FreeSeries> value;
  };

  FreeSeries b_;
  WeightKind kind_;
  std::optional<double> s_;
  std::optional<FreeSeries> phi_;
  std::shared_ptr<LazyInverse> inverse_box_;
};

/// Probed suprema of b_alpha/b_{g_i alpha} (left) and b_alpha/b_{alpha g_i}
/// (right) over |alpha| <= N-1, one entry per generator.
struct RatioSups {
  std::vector<double> left;
  std::vector<double> right;
};
RatioSups ratio_sups(const WeightFamily& wf);

/// The finite sequence (sum_{|alpha|=k} b_alpha^2)^{1/2k}, k = 1..N.
struct RadiusProbe {
  std::vector<double> values;
  bool monotone_nonincreasing;  // from the second term on, within 1e-12
};
RadiusProbe radius_probe(const WeightFamily& wf);

/// sup over |alpha| <= cap_alpha of |sum_{beta gamma = alpha, |beta| <= N'} a_beta b_gamma / b_alpha|
/// for each N' = 0..cap_beta. The full-range sums telescope by eq (sum1), so
/// the probe is informative only for |alpha| > N'.
struct AbbTable {
  int cap_beta = 0;
  int cap_alpha = 0;
  std::vector<double> sup_by_nprime;  // indexed by N'
};
AbbTable abb_sup(const WeightFamily& wf, int cap_beta, int cap_alpha);

/// sup over |alpha| in [q, N] of |sum_{beta gamma = alpha, q <= |beta| <= N'} a_beta b_gamma / b_alpha|.
double tail_sup(const WeightFamily& wf, int q, int nprime);

/// Partial sums of sum_j max{|a_alpha| : |alpha| = j}, plus the probed
/// sup_{gamma,beta} b_gamma / b_{beta gamma}.
struct ExSummability {
  std::vector<double> increments;    // j = 1..N
  std::vector<double> partial_sums;  // running sums
  double ratio_sup = 0.0;
};
ExSummability ex_summability(const WeightFamily& wf);

/// Regular-domain test: a_{g_i} < 0 for all i and a_alpha <= tol for
/// 1 <= |alpha| <= N. On pass additionally checks submultiplicativity
/// b_alpha b_beta <= b_{alpha beta} (1 + rel_tol) on the truncation.
struct RegularityVerdict {
  bool pass = false;
  std::optional<Word> witness;  // word violating the sign condition
  bool submultiplicative = false;
  std::optional<std::pair<Word, Word>> submult_witness;
  double sign_tol = 0.0;
  double rel_tol = 0.0;
};
RegularityVerdict regularity_check(const WeightFamily& wf, double sign_tol = 1e-12,
                                   double rel_tol = 1e-10);

/// Ratio-monotonicity test: b_{beta g_i}/b_{g_j beta g_i} <= b_beta/b_{g_j beta} + tol
/// for all |beta| <= N-2 and all i, j.
struct SubcnVerdict {
  bool pass = false;
  std::optional<Word> witness_beta;
  int witness_i = 0;
  int witness_j = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
};
SubcnVerdict subcn_check(const WeightFamily& wf, double tol = 1e-12);

/// Smallest degree d <= N such that every a_alpha with d <= |alpha| <= N has
/// one sign (entries within tol of zero are compatible with either sign).
struct SignPattern {
  bool found = false;
  int degree_from = 0;
  int sign = 0;  // +1 nonnegative, -1 nonpositive, 0 all-zero tail
  double tol = 0.0;
};
SignPattern sign_pattern_check(const WeightFamily& wf, double tol = 1e-12);

/// Per-degree max |b_{g_p gamma}/b_{g_i g_p gamma} - b_gamma/b_{g_p gamma}|
/// over gamma and p, for |gamma| = 0..N-2.
struct DecayProbe {
  std::vector<double> max_by_degree;
  bool decaying;  // last value <= first value + 1e-12
};
DecayProbe diagonal_decay_probe(const WeightFamily& wf, int i);

/// Aggregate of all admissibility probes, with the explicit caveat that every
/// sup/limsup condition is probed on the truncation, not proven.
struct AdmissibilityReport {
  RatioSups ratios;
  RadiusProbe radius;
  AbbTable abb;
  std::vector<std::pair<int, double>> tail_sups;  // (q, sup with N' = N)
  ExSummability ex;
  RegularityVerdict regularity;
  SubcnVerdict subcn;
  SignPattern sign_pattern;
  std::vector<DecayProbe> decay;  // per generator
  bool probe_only = true;
};
AdmissibilityReport admissibility_report(const WeightFamily& wf);

}  // namespace ncfock
