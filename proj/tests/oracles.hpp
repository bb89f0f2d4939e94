#pragma once

// Independent test oracles. Everything here recomputes expected values by a
// route different from the library implementation it checks.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ncfock/series.hpp"
#include "ncfock/words.hpp"

namespace oracles {

using ncfock::Word;
using ncfock::cplx;

// C(n, k) by Pascal recursion over exact integers.
inline std::int64_t binomial_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

// Brute-force Cauchy product through a word-keyed map; no shared code with
// ncfock::multiply (which walks prefix splits of the target word).
inline std::map<Word, cplx> brute_convolution(const ncfock::FreeSeries& f,
                                              const ncfock::FreeSeries& g) {
  std::map<Word, cplx> out;
  const int degree = std::min(f.degree(), g.degree());
  for (int ka = 0; ka <= degree; ++ka) {
    ncfock::for_each_word(f.n(), ka, [&](const Word& a) {
      const cplx fa = f.coeff(a);
      if (fa == cplx(0.0, 0.0)) return;
      for (int kb = 0; ka + kb <= degree; ++kb) {
        ncfock::for_each_word(g.n(), kb, [&](const Word& b) {
          out[ncfock::concat(a, b)] += fa * g.coeff(b);
        });
      }
    });
  }
  return out;
}

// A strictly positive random weight series with unit constant term.
inline ncfock::FreeSeries random_positive_series(int n, int degree, std::mt19937_64& rng,
                                                 double lo = 0.2, double hi = 2.5) {
  std::uniform_real_distribution<double> dist(lo, hi);
  ncfock::FreeSeries s(n, degree);
  s.set_coeff(Word{}, 1.0);
  for (std::int64_t i = 1; i < s.size(); ++i) s.set_coeff_at(i, dist(rng));
  return s;
}

// A random complex series with unit constant term.
inline ncfock::FreeSeries random_unit_series(int n, int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ncfock::FreeSeries s(n, degree);
  s.set_coeff(Word{}, 1.0);
  for (std::int64_t i = 1; i < s.size(); ++i) s.set_coeff_at(i, cplx(dist(rng), dist(rng)));
  return s;
}

}  // namespace oracles
