#pragma once

#include <complex>
#include <vector>

#include "ncfock/words.hpp"

namespace ncfock {

using cplx = std::complex<double>;

/// Truncated free formal power series over complex scalars. Coefficients are
/// stored densely in graded-lex order for all words of length <= degree;
/// absent terms are zero.
class FreeSeries {
 public:
  FreeSeries(int n, int degree);

  /// The unit series 1.
  static FreeSeries unit(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }
  std::int64_t size() const { return static_cast<std::int64_t>(coeffs_.size()); }

  cplx coeff(const Word& w) const;
  void set_coeff(const Word& w, cplx value);

  cplx coeff_at(std::int64_t index) const { return coeffs_[static_cast<std::size_t>(index)]; }
  void set_coeff_at(std::int64_t index, cplx value) {
    coeffs_[static_cast<std::size_t>(index)] = value;
  }

  FreeSeries truncated(int new_degree) const;

  /// Largest |coefficient|.
  double max_abs() const;

  /// Largest |imaginary part| over all coefficients.
  double max_imag() const;

 private:
  int n_;
  int degree_;
  std::vector<cplx> coeffs_;
};

/// Cauchy product: (fg)_gamma = sum_{beta alpha = gamma} f_beta g_alpha,
/// reported at the minimum truncation degree of the operands.
FreeSeries multiply(const FreeSeries& f, const FreeSeries& g);

/// Inverse of a series with constant term 1, degree by degree:
/// f_gamma = -g_gamma - sum_{beta alpha = gamma, 1 <= |beta| < |gamma|} f_beta g_alpha.
/// Then multiply(g, invert(g)) = multiply(invert(g), g) = 1 up to truncation.
FreeSeries invert(const FreeSeries& g);

/// Literal alternating sum over all ordered factorizations of alpha:
///   a_alpha = sum_{j=1..|alpha|} sum_{gamma_1...gamma_j = alpha} (-1)^j b_{gamma_1}...b_{gamma_j}.
/// Exponential cost 2^{|alpha|-1}; kept as an independent oracle for invert.
cplx direct_inverse_oracle(const FreeSeries& g, const Word& alpha);

/// Generalized binomial coefficient binom(s, k) = s(s-1)...(s-k+1)/k!,
/// computed by the iterated product; binom(s, 0) = 1.
double real_binomial(double s, int k);

/// Coefficients of (1 - phi)^{-s} = sum_k binom(s+k-1, k) phi^k, truncated.
/// Requires phi to have zero constant term.
FreeSeries neg_power_one_minus(const FreeSeries& phi, double s);

/// Coefficients of (1 - phi)^{s} = sum_k (-1)^k binom(s, k) phi^k, truncated.
FreeSeries pos_power_one_minus(const FreeSeries& phi, double s);

}  // namespace ncfock
