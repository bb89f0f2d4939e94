#include "ncfock/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ncfock {

FreeSeries::FreeSeries(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1 || degree < 0) throw std::invalid_argument("FreeSeries: bad n or degree");
  coeffs_.assign(static_cast<std::size_t>(truncation_dim(n, degree)), cplx(0.0, 0.0));
}

FreeSeries FreeSeries::unit(int n, int degree) {
  FreeSeries s(n, degree);
  s.coeffs_[0] = 1.0;
  return s;
}

cplx FreeSeries::coeff(const Word& w) const {
  if (static_cast<int>(w.size()) > degree_) return 0.0;
  return coeffs_[static_cast<std::size_t>(word_index(w, n_))];
}

void FreeSeries::set_coeff(const Word& w, cplx value) {
  if (static_cast<int>(w.size()) > degree_)
    throw std::out_of_range("FreeSeries::set_coeff: word beyond truncation degree");
  coeffs_[static_cast<std::size_t>(word_index(w, n_))] = value;
}

FreeSeries FreeSeries::truncated(int new_degree) const {
  FreeSeries out(n_, new_degree);
  const std::int64_t keep = std::min(out.size(), size());
  for (std::int64_t i = 0; i < keep; ++i) out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
  return out;
}

double FreeSeries::max_abs() const {
  double m = 0.0;
  for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double FreeSeries::max_imag() const {
  double m = 0.0;
  for (const cplx& c : coeffs_) m = std::max(m, std::abs(c.imag()));
  return m;
}

FreeSeries multiply(const FreeSeries& f, const FreeSeries& g) {
  if (f.n() != g.n()) throw std::invalid_argument("multiply: mismatched generator counts");
  const int n = f.n();
  const int degree = std::min(f.degree(), g.degree());
  FreeSeries out(n, degree);
  for (int k = 0; k <= degree; ++k) {
    for_each_word(n, k, [&](const Word& gamma) {
      cplx acc(0.0, 0.0);
      for (std::size_t cut = 0; cut <= gamma.size(); ++cut) {
        const Word beta(gamma.begin(), gamma.begin() + static_cast<std::ptrdiff_t>(cut));
        const Word alpha(gamma.begin() + static_cast<std::ptrdiff_t>(cut), gamma.end());
        acc += f.coeff(beta) * g.coeff(alpha);
      }
      out.set_coeff(gamma, acc);
    });
  }
  return out;
}

FreeSeries invert(const FreeSeries& g) {
  const cplx c0 = g.coeff_at(0);
  if (std::abs(c0 - cplx(1.0, 0.0)) > 1e-14)
    throw std::invalid_argument("invert: constant term must be 1");
  const int n = g.n();
  const int degree = g.degree();
  FreeSeries f(n, degree);
  f.set_coeff(Word{}, 1.0);
  for (int k = 1; k <= degree; ++k) {
    for_each_word(n, k, [&](const Word& gamma) {
      cplx acc = -g.coeff(gamma);
      // Proper prefixes beta with 1 <= |beta| < |gamma|; f is already known there.
      for (std::size_t cut = 1; cut < gamma.size(); ++cut) {
        const Word beta(gamma.begin(), gamma.begin() + static_cast<std::ptrdiff_t>(cut));
        const Word alpha(gamma.begin() + static_cast<std::ptrdiff_t>(cut), gamma.end());
        acc -= f.coeff(beta) * g.coeff(alpha);
      }
      f.set_coeff(gamma, acc);
    });
  }
  return f;
}

cplx direct_inverse_oracle(const FreeSeries& g, const Word& alpha) {
  if (alpha.empty()) throw std::invalid_argument("direct_inverse_oracle: |alpha| must be >= 1");
  if (std::abs(g.coeff(Word{}) - cplx(1.0, 0.0)) > 1e-14)
    throw std::invalid_argument("direct_inverse_oracle: constant term must be 1");
  cplx acc(0.0, 0.0);
  const int len = static_cast<int>(alpha.size());
  for (int j = 1; j <= len; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    for_each_ordered_factorization(alpha, j, [&](const std::vector<Word>& parts) {
      cplx term(sign, 0.0);
      for (const Word& part : parts) term *= g.coeff(part);
      acc += term;
    });
  }
  return acc;
}

double real_binomial(double s, int k) {
  if (k < 0) throw std::invalid_argument("real_binomial: k must be >= 0");
  double value = 1.0;
  for (int i = 0; i < k; ++i) value *= (s - i) / (i + 1);
  return value;
}

namespace {

FreeSeries sum_of_powers(const FreeSeries& phi, const std::vector<double>& weights) {
  const int n = phi.n();
  const int degree = phi.degree();
  FreeSeries out(n, degree);
  out.set_coeff(Word{}, weights[0]);
  // phi has zero constant term, so phi^k only touches degrees >= k.
  FreeSeries pw = FreeSeries::unit(n, degree);
  for (int k = 1; k <= degree; ++k) {
    pw = multiply(pw, phi);
    const double w = weights[static_cast<std::size_t>(k)];
    if (w == 0.0) continue;
    for (std::int64_t i = 0; i < out.size(); ++i)
      out.set_coeff_at(i, out.coeff_at(i) + w * pw.coeff_at(i));
  }
  return out;
}

void require_zero_constant(const FreeSeries& phi, const char* who) {
  if (std::abs(phi.coeff_at(0)) > 1e-14)
    throw std::invalid_argument(std::string(who) + ": phi must have zero constant term");
}

}  // namespace

FreeSeries neg_power_one_minus(const FreeSeries& phi, double s) {
  require_zero_constant(phi, "neg_power_one_minus");
  std::vector<double> weights(static_cast<std::size_t>(phi.degree()) + 1);
  for (int k = 0; k <= phi.degree(); ++k)
    weights[static_cast<std::size_t>(k)] = real_binomial(s + k - 1, k);
  return sum_of_powers(phi, weights);
}

FreeSeries pos_power_one_minus(const FreeSeries& phi, double s) {
  require_zero_constant(phi, "pos_power_one_minus");
  std::vector<double> weights(static_cast<std::size_t>(phi.degree()) + 1);
  for (int k = 0; k <= phi.degree(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    weights[static_cast<std::size_t>(k)] = sign * real_binomial(s, k);
  }
  return sum_of_powers(phi, weights);
}

}  // namespace ncfock
