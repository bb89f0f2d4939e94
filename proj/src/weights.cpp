#include "ncfock/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncfock {

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::bergman: return "bergman";
    case WeightKind::dirichlet: return "dirichlet";
    case WeightKind::psi: return "psi";
    case WeightKind::table: return "table";
  }
  return "unknown";
}

WeightFamily::WeightFamily(FreeSeries b, WeightKind kind, std::optional<double> s,
                           std::optional<FreeSeries> phi)
    : b_(std::move(b)),
      kind_(kind),
      s_(s),
      phi_(std::move(phi)),
      inverse_box_(std::make_shared<LazyInverse>()) {
  if (std::abs(b_.coeff_at(0) - cplx(1.0, 0.0)) > 1e-14)
    throw std::invalid_argument("WeightFamily: b_{g_0} must be 1");
  if (b_.max_imag() > 1e-14)
    throw std::invalid_argument("WeightFamily: weights must be real");
  for (std::int64_t i = 0; i < b_.size(); ++i) {
    const double v = b_.coeff_at(i).real();
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("WeightFamily: weights must be strictly positive and finite");
  }
}

WeightFamily WeightFamily::bergman(int n, double s, int degree) {
  if (!(s > 0.0)) throw std::invalid_argument("bergman weights require s > 0");
  FreeSeries b(n, degree);
  for (int k = 0; k <= degree; ++k) {
    const double bk = real_binomial(s + k - 1, k);
    if (!std::isfinite(bk)) throw std::overflow_error("bergman weights overflow");
    for_each_word(n, k, [&](const Word& w) { b.set_coeff(w, bk); });
  }
  return WeightFamily(std::move(b), WeightKind::bergman, s, std::nullopt);
}

WeightFamily WeightFamily::dirichlet(int n, double s, int degree) {
  FreeSeries b(n, degree);
  for (int k = 0; k <= degree; ++k) {
    const double bk = std::pow(static_cast<double>(k + 1), s);
    if (!std::isfinite(bk)) throw std::overflow_error("dirichlet weights overflow");
    for_each_word(n, k, [&](const Word& w) { b.set_coeff(w, bk); });
  }
  return WeightFamily(std::move(b), WeightKind::dirichlet, s, std::nullopt);
}

WeightFamily WeightFamily::psi(const FreeSeries& phi, double s, int degree) {
  if (!(s >= 1.0)) throw std::invalid_argument("psi weights require s >= 1");
  if (phi.max_imag() > 1e-14) throw std::invalid_argument("psi weights: phi must be real");
  if (std::abs(phi.coeff_at(0)) > 1e-14)
    throw std::invalid_argument("psi weights: phi must have zero constant term");
  const int n = phi.n();
  for (std::int64_t i = 1; i < phi.size(); ++i) {
    if (phi.coeff_at(i).real() < 0.0)
      throw std::invalid_argument("psi weights: all d_alpha must be >= 0");
  }
  for (int gi = 1; gi <= n; ++gi) {
    if (!(phi.coeff(Word{gi}).real() > 0.0))
      throw std::invalid_argument("psi weights: d_{g_i} must be > 0");
  }
  FreeSeries b = neg_power_one_minus(phi.truncated(degree), s);
  for (std::int64_t i = 0; i < b.size(); ++i) {
    if (!std::isfinite(b.coeff_at(i).real()))
      throw std::overflow_error("psi weights overflow");
  }
  WeightFamily wf(std::move(b), WeightKind::psi, s, phi.truncated(degree));
  // Construction guarantees b_alpha/b_{g_i alpha} <= 1/d_{g_i} and the
  // right-sided analogue; verified here on the truncation.
  for (int gi = 1; gi <= n; ++gi) {
    const double bound = 1.0 / phi.coeff(Word{gi}).real() + 1e-12;
    for (int k = 0; k + 1 <= degree; ++k) {
      for_each_word(n, k, [&](const Word& w) {
        const double bw = wf.b(w);
        if (bw / wf.b(concat(Word{gi}, w)) > bound || bw / wf.b(concat(w, Word{gi})) > bound)
          throw std::runtime_error("psi weights: ratio bound violated on truncation");
      });
    }
  }
  return wf;
}

WeightFamily WeightFamily::from_table(const FreeSeries& b) {
  return WeightFamily(b, WeightKind::table, std::nullopt, std::nullopt);
}

const FreeSeries& WeightFamily::inverse() const {
  std::call_once(inverse_box_->flag, [this] {
    FreeSeries a = invert(b_);
    const int n = b_.n();
    const double tol = 1e-12 * std::max(1.0, b_.max_abs());
    // Residual of eq (sum1) (nonempty prefixes) and eq (sum2) (nonempty
    // suffixes) at every stored degree.
    double max_res = 0.0;
    for (int k = 1; k <= b_.degree(); ++k) {
      for_each_word(n, k, [&](const Word& gamma) {
        cplx r1 = b_.coeff(gamma);
        cplx r2 = b_.coeff(gamma);
        for (std::size_t cut = 0; cut < gamma.size(); ++cut) {
          const Word prefix(gamma.begin(), gamma.end() - static_cast<std::ptrdiff_t>(cut));
          const Word suffix(gamma.end() - static_cast<std::ptrdiff_t>(cut), gamma.end());
          r1 += a.coeff(prefix) * b_.coeff(suffix);  // |prefix| = k - cut >= 1
          const Word head(gamma.begin(), gamma.begin() + static_cast<std::ptrdiff_t>(cut));
          const Word tail(gamma.begin() + static_cast<std::ptrdiff_t>(cut), gamma.end());
          r2 += a.coeff(tail) * b_.coeff(head);  // |tail| = k - cut >= 1
        }
        max_res = std::max({max_res, std::abs(r1), std::abs(r2)});
      });
    }
    if (max_res > tol)
      throw std::runtime_error("WeightFamily: inverse coefficients violate the convolution identities");
    inverse_box_->value = std::move(a);
  });
  return *inverse_box_->value;
}

RatioSups ratio_sups(const WeightFamily& wf) {
  const int n = wf.n();
  RatioSups out;
  out.left.assign(static_cast<std::size_t>(n), 0.0);
  out.right.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k + 1 <= wf.degree(); ++k) {
    for_each_word(n, k, [&](const Word& w) {
      const double bw = wf.b(w);
      for (int gi = 1; gi <= n; ++gi) {
        out.left[static_cast<std::size_t>(gi - 1)] =
            std::max(out.left[static_cast<std::size_t>(gi - 1)], bw / wf.b(concat(Word{gi}, w)));
        out.right[static_cast<std::size_t>(gi - 1)] =
            std::max(out.right[static_cast<std::size_t>(gi - 1)], bw / wf.b(concat(w, Word{gi})));
      }
    });
  }
  return out;
}

RadiusProbe radius_probe(const WeightFamily& wf) {
  RadiusProbe out;
  const int n = wf.n();
  for (int k = 1; k <= wf.degree(); ++k) {
    double sum_sq = 0.0;
    for_each_word(n, k, [&](const Word& w) {
      const double b = wf.b(w);
      sum_sq += b * b;
    });
    out.values.push_back(std::pow(sum_sq, 1.0 / (2.0 * k)));
  }
  out.monotone_nonincreasing = true;
  for (std::size_t i = 2; i < out.values.size(); ++i) {
    if (out.values[i] > out.values[i - 1] + 1e-12) out.monotone_nonincreasing = false;
  }
  return out;
}

namespace {

// |sum_{beta gamma = alpha, lo <= |beta| <= hi} a_beta b_gamma / b_alpha|
double prefix_sum_abs(const WeightFamily& wf, const Word& alpha, int lo, int hi) {
  double acc = 0.0;
  const int len = static_cast<int>(alpha.size());
  for (int l = std::max(0, lo); l <= std::min(len, hi); ++l) {
    const Word beta(alpha.begin(), alpha.begin() + l);
    const Word gamma(alpha.begin() + l, alpha.end());
    acc += wf.a(beta) * wf.b(gamma);
  }
  return std::abs(acc / wf.b(alpha));
}

}  // namespace

AbbTable abb_sup(const WeightFamily& wf, int cap_beta, int cap_alpha) {
  if (!(0 <= cap_beta && cap_beta <= cap_alpha && cap_alpha <= wf.degree()))
    throw std::invalid_argument("abb_sup: need 0 <= cap_beta <= cap_alpha <= N");
  AbbTable out;
  out.cap_beta = cap_beta;
  out.cap_alpha = cap_alpha;
  out.sup_by_nprime.assign(static_cast<std::size_t>(cap_beta) + 1, 0.0);
  for (int np = 0; np <= cap_beta; ++np) {
    double sup = 0.0;
    for (int k = 0; k <= cap_alpha; ++k) {
      for_each_word(wf.n(), k, [&](const Word& alpha) {
        sup = std::max(sup, prefix_sum_abs(wf, alpha, 0, np));
      });
    }
    out.sup_by_nprime[static_cast<std::size_t>(np)] = sup;
  }
  return out;
}

double tail_sup(const WeightFamily& wf, int q, int nprime) {
  if (!(0 <= q && q <= nprime && nprime <= wf.degree()))
    throw std::invalid_argument("tail_sup: need 0 <= q <= N' <= N");
  double sup = 0.0;
  for (int k = q; k <= wf.degree(); ++k) {
    for_each_word(wf.n(), k, [&](const Word& alpha) {
      sup = std::max(sup, prefix_sum_abs(wf, alpha, q, nprime));
    });
  }
  return sup;
}

ExSummability ex_summability(const WeightFamily& wf) {
  ExSummability out;
  const int n = wf.n();
  double running = 0.0;
  for (int j = 1; j <= wf.degree(); ++j) {
    double m = 0.0;
    for_each_word(n, j, [&](const Word& w) { m = std::max(m, std::abs(wf.a(w))); });
    running += m;
    out.increments.push_back(m);
    out.partial_sums.push_back(running);
  }
  double ratio = 0.0;
  for (int kg = 0; kg <= wf.degree(); ++kg) {
    for_each_word(n, kg, [&](const Word& gamma) {
      const double bg = wf.b(gamma);
      for (int kb = 0; kb + kg <= wf.degree(); ++kb) {
        for_each_word(n, kb, [&](const Word& beta) {
          ratio = std::max(ratio, bg / wf.b(concat(beta, gamma)));
        });
      }
    });
  }
  out.ratio_sup = ratio;
  return out;
}

RegularityVerdict regularity_check(const WeightFamily& wf, double sign_tol, double rel_tol) {
  RegularityVerdict out;
  out.sign_tol = sign_tol;
  out.rel_tol = rel_tol;
  out.pass = true;
  const int n = wf.n();
  for (int gi = 1; gi <= n && out.pass; ++gi) {
    if (!(wf.a(Word{gi}) < 0.0)) {
      out.pass = false;
      out.witness = Word{gi};
    }
  }
  for (int k = 1; k <= wf.degree() && out.pass; ++k) {
    for_each_word(n, k, [&](const Word& w) {
      if (out.pass && wf.a(w) > sign_tol) {
        out.pass = false;
        out.witness = w;
      }
    });
  }
  if (out.pass) {
    out.submultiplicative = true;
    for (int ka = 0; ka <= wf.degree() && out.submultiplicative; ++ka) {
      for_each_word(n, ka, [&](const Word& alpha) {
        if (!out.submultiplicative) return;
        for (int kb = 0; kb + ka <= wf.degree() && out.submultiplicative; ++kb) {
          for_each_word(n, kb, [&](const Word& beta) {
            if (out.submultiplicative &&
                wf.b(alpha) * wf.b(beta) > wf.b(concat(alpha, beta)) * (1.0 + rel_tol)) {
              out.submultiplicative = false;
              out.submult_witness = std::make_pair(alpha, beta);
            }
          });
        }
      });
    }
  }
  return out;
}

SubcnVerdict subcn_check(const WeightFamily& wf, double tol) {
  SubcnVerdict out;
  out.tol = tol;
  out.pass = true;
  const int n = wf.n();
  for (int k = 0; k <= wf.degree() - 2 && out.pass; ++k) {
    for_each_word(n, k, [&](const Word& beta) {
      if (!out.pass) return;
      for (int gi = 1; gi <= n && out.pass; ++gi) {
        const Word beta_gi = concat(beta, Word{gi});
        for (int gj = 1; gj <= n && out.pass; ++gj) {
          const double lhs = wf.b(beta_gi) / wf.b(concat(Word{gj}, beta_gi));
          const double rhs = wf.b(beta) / wf.b(concat(Word{gj}, beta));
          if (lhs > rhs + tol) {
            out.pass = false;
            out.witness_beta = beta;
            out.witness_i = gi;
            out.witness_j = gj;
            out.lhs = lhs;
            out.rhs = rhs;
          }
        }
      }
    });
  }
  return out;
}

SignPattern sign_pattern_check(const WeightFamily& wf, double tol) {
  SignPattern out;
  out.tol = tol;
  const int n = wf.n();
  // sign_by_degree[k]: +1 if some a > tol, -1 if some a < -tol, 2 if mixed, 0 if all ~ 0.
  std::vector<int> sign_by_degree;
  for (int k = 1; k <= wf.degree(); ++k) {
    bool has_pos = false, has_neg = false;
    for_each_word(n, k, [&](const Word& w) {
      const double a = wf.a(w);
      if (a > tol) has_pos = true;
      if (a < -tol) has_neg = true;
    });
    sign_by_degree.push_back(has_pos && has_neg ? 2 : has_pos ? 1 : has_neg ? -1 : 0);
  }
  for (int d = 1; d <= wf.degree(); ++d) {
    bool pos_ok = true, neg_ok = true;
    for (int k = d; k <= wf.degree(); ++k) {
      const int s = sign_by_degree[static_cast<std::size_t>(k - 1)];
      if (s == 2) { pos_ok = neg_ok = false; break; }
      if (s == 1) neg_ok = false;
      if (s == -1) pos_ok = false;
    }
    if (pos_ok || neg_ok) {
      out.found = true;
      out.degree_from = d;
      out.sign = pos_ok && neg_ok ? 0 : pos_ok ? 1 : -1;
      return out;
    }
  }
  return out;
}

DecayProbe diagonal_decay_probe(const WeightFamily& wf, int i) {
  if (i < 1 || i > wf.n()) throw std::invalid_argument("diagonal_decay_probe: bad generator");
  DecayProbe out;
  const int n = wf.n();
  for (int k = 0; k <= wf.degree() - 2; ++k) {
    double m = 0.0;
    for_each_word(n, k, [&](const Word& gamma) {
      for (int p = 1; p <= n; ++p) {
        const Word gp_gamma = concat(Word{p}, gamma);
        const double diff =
            wf.b(gp_gamma) / wf.b(concat(Word{i}, gp_gamma)) - wf.b(gamma) / wf.b(gp_gamma);
        m = std::max(m, std::abs(diff));
      }
    });
    out.max_by_degree.push_back(m);
  }
  out.decaying = out.max_by_degree.empty() ||
                 out.max_by_degree.back() <= out.max_by_degree.front() + 1e-12;
  return out;
}

AdmissibilityReport admissibility_report(const WeightFamily& wf) {
  AdmissibilityReport out;
  out.ratios = ratio_sups(wf);
  out.radius = radius_probe(wf);
  const int cap_beta = std::max(0, wf.degree() / 2);
  out.abb = abb_sup(wf, cap_beta, wf.degree());
  for (int q = 1; q <= wf.degree(); ++q) out.tail_sups.emplace_back(q, tail_sup(wf, q, wf.degree()));
  out.ex = ex_summability(wf);
  out.regularity = regularity_check(wf);
  out.subcn = subcn_check(wf);
  out.sign_pattern = sign_pattern_check(wf);
  for (int i = 1; i <= wf.n(); ++i) out.decay.push_back(diagonal_decay_probe(wf, i));
  return out;
}

}  // namespace ncfock
