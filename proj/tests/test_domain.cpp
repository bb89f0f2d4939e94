#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ncfock/domain.hpp"
#include "oracles.hpp"

using namespace ncfock;
using helpers::scalar_tuple;

TEST_CASE("defect of the truncated model is the vacuum projection") {
  // The degree-4 model is nilpotent of order 5; capping three degrees past
  // the nilpotency order makes convergence detection see exact zeros.
  for (double s : {0.5, 1.0, 2.5}) {
    const auto wf = WeightFamily::bergman(2, s, 7);
    const auto w = build_W(wf, 4);
    const auto dr = defect(wf, w, 7, 1e-10);
    CHECK(dr.converged);
    for (std::size_t p = 5; p < dr.increment_norms.size(); ++p)
      CHECK(dr.increment_norms[p] == 0.0);
    Matrix p = Matrix::Zero(w.dim(), w.dim());
    p(0, 0) = 1.0;
    CHECK(operator_norm(dr.delta - p) < 1e-12);
  }
}

TEST_CASE("scalar defect: ball weights give 1 - |lambda|^2") {
  const auto wf = WeightFamily::bergman(2, 1.0, 8);
  const auto t = scalar_tuple({cplx(0.3, 0.1), cplx(-0.2, 0.4)});
  const auto dr = defect(wf, t, 8, 1e-10);
  CHECK(dr.converged);
  const double expected = 1.0 - (0.09 + 0.01) - (0.04 + 0.16);
  CHECK(std::abs(dr.delta(0, 0).real() - expected) < 1e-12);
}

TEST_CASE("scalar defect matches the binomial series oracle") {
  // Bergman s = 2.5, lambda = (0.5, 0.5): partial sums of (1 - 0.5)^{2.5}.
  const int cap = 12;
  const auto wf = WeightFamily::bergman(2, 2.5, cap);
  const auto t = scalar_tuple({cplx(0.5, 0.0), cplx(0.5, 0.0)});
  const auto dr = defect(wf, t, cap, 1e-6);
  double series = 0.0;
  for (int k = 0; k <= cap; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    series += sign * real_binomial(2.5, k) * std::pow(0.5, k);
  }
  CHECK(std::abs(dr.delta(0, 0).real() - series) < 1e-12);
  // And the full limit within the binomial tail bound.
  double tail = 0.0;
  for (int k = cap + 1; k <= cap + 400; ++k) tail += std::abs(real_binomial(2.5, k)) * std::pow(0.5, k);
  CHECK(std::abs(dr.delta(0, 0).real() - std::pow(0.5, 2.5)) <= tail + 1e-12);
}

TEST_CASE("defect caps and errors") {
  const auto wf = WeightFamily::bergman(2, 1.0, 3);
  const auto w = build_W(wf, 3);
  CHECK_THROWS_AS(defect(wf, w, 5, 1e-10), std::invalid_argument);
  const auto t3 = scalar_tuple({cplx(0.1, 0.0), cplx(0.1, 0.0), cplx(0.1, 0.0)});
  CHECK_THROWS_AS(defect(wf, t3, 3, 1e-10), std::invalid_argument);
}

TEST_CASE("classify: the truncated model is pure for every constructor") {
  std::vector<WeightFamily> families;
  for (double s : {0.5, 1.0, 2.5}) families.push_back(WeightFamily::bergman(2, s, 7));
  for (double s : {-1.0, 0.0, 1.0}) families.push_back(WeightFamily::dirichlet(2, s, 7));
  for (const auto& wf : families) {
    const auto w = build_W(wf, 4);
    const auto c = classify(wf, w, 7, 1e-10);
    CHECK(c.converged);
    CHECK(c.in_domain);
    CHECK(c.pure());
    CHECK(c.pure_residual < 1e-10);
    CHECK_FALSE(c.cuntz());
  }
}

TEST_CASE("classify: scaled unitaries with |lambda|^2 summing to 1 are Cuntz") {
  std::mt19937_64 rng(23);
  const auto wf = WeightFamily::bergman(2, 1.0, 5);
  const auto v = helpers::cuntz_halves(4, rng);
  const auto c = classify(wf, v, 5, 1e-10);
  CHECK(c.converged);
  CHECK(c.in_domain);
  CHECK(c.cuntz());
  CHECK(c.cuntz_residual < 1e-12);
  CHECK_FALSE(c.pure());
  // Radial points are strictly inside the domain.
  for (const auto& pt : c.radial) CHECK(pt.in_domain);
}

TEST_CASE("classify: Cuntz residual for a non-polynomial inverse is the series tail") {
  std::mt19937_64 rng(29);
  const int cap = 12;
  const auto wf = WeightFamily::bergman(2, 2.5, cap);
  const Matrix u = random_unitary(3, rng);
  OperatorTuple v(2, 3);
  v[0] = u * std::sqrt(0.5);
  v[1] = u * std::sqrt(0.5);
  const auto c = classify(wf, v, cap, 1e-3, {});
  CHECK(c.in_domain);
  // The per-degree sums telescope to scalars, so the residual equals the
  // absolute value of the partial binomial sum exactly.
  double partial = 0.0;
  for (int k = 0; k <= cap; ++k)
    partial += (k % 2 == 0 ? 1.0 : -1.0) * real_binomial(2.5, k);
  CHECK(c.cuntz_residual == doctest::Approx(std::abs(partial)).epsilon(1e-10));
  double tail = 0.0;
  for (int k = cap + 1; k <= cap + 20000; ++k) tail += std::abs(real_binomial(2.5, k));
  CHECK(std::abs(partial) <= tail + 1e-8);
}

TEST_CASE("lemm2 certificate") {
  const auto wf = WeightFamily::bergman(2, 1.0, 6);
  // T = 0: absolute sum is 0, certificate passes, classify confirms pure.
  OperatorTuple zero(2, 3);
  const auto r = lemm2_certificate(wf, zero, 0.5, 6, 1e-10);
  CHECK(r.pass);
  CHECK(r.sup_eig == 0.0);

  // Small scaled tuple: degree-1 inverse gives sup = |a_1| * sum ||T_i||^2.
  std::mt19937_64 rng(31);
  OperatorTuple small(2, 3);
  small[0] = 0.3 * random_unitary(3, rng);
  small[1] = 0.3 * random_unitary(3, rng);
  const auto r2 = lemm2_certificate(wf, small, 0.5, 6, 1e-10);
  CHECK(r2.pass);
  CHECK(r2.sup_eig == doctest::Approx(0.18).epsilon(1e-9));

  CHECK_THROWS_AS(lemm2_certificate(wf, zero, 1.5, 6, 1e-10), std::invalid_argument);
}

TEST_CASE("pure_ball_radius recipe") {
  // Ball weights: only degree-1 coefficients, A_1 = 2, so t = 1/4.
  const auto ball = WeightFamily::bergman(2, 1.0, 5);
  const auto est = pure_ball_radius(ball);
  CHECK(est.t == doctest::Approx(0.25));
  CHECK(est.m == doctest::Approx(0.5));
  CHECK(est.epsilon > 0.0);
  CHECK(est.epsilon < 1.0);
  // The certificate the estimate promises: scalar tuples inside the ball pass lemm2.
  const auto t = scalar_tuple({cplx(est.epsilon * 0.7, 0.0), cplx(0.0, est.epsilon * 0.7)});
  CHECK(lemm2_certificate(ball, t, 0.99, 5, 1e-10).pass);

  const auto b2 = pure_ball_radius(WeightFamily::bergman(2, 2.0, 5));
  CHECK(b2.epsilon > 0.0);

  // Super-geometric weights: the probed growth rate accelerates through the
  // whole truncation, so no radius can be certified.
  FreeSeries b(1, 5);
  for (int k = 0; k <= 5; ++k)
    b.set_coeff(Word(static_cast<std::size_t>(k), 1), std::pow(2.0, k * k));
  const auto bad = WeightFamily::from_table(b);
  CHECK_THROWS_AS(pure_ball_radius(bad), std::domain_error);
}

TEST_CASE("berezin kernel: truncated model gives the identity kernel") {
  const auto wf = WeightFamily::bergman(2, 2.0, 7);
  const auto w = build_W(wf, 4);
  const auto k = berezin_kernel(wf, w, 4, 7, 1e-10);
  CHECK(k.rank == 1);
  CHECK(operator_norm(k.k - Matrix::Identity(w.dim(), w.dim())) < 1e-12);
  CHECK(operator_norm(k.k.adjoint() * k.k - Matrix::Identity(w.dim(), w.dim())) < 1e-12);
}

TEST_CASE("berezin kernel: scalar geometric oracle") {
  // K*K = (1 - |lambda|^2) sum_{k<=N} (|l1|^2+|l2|^2)^k = 1 - (|lambda|^2)^{N+1}.
  const int N = 7;
  const auto wf = WeightFamily::bergman(2, 1.0, N);
  const cplx l1(0.35, 0.1), l2(-0.3, 0.2);
  const double rho = std::norm(l1) + std::norm(l2);
  const auto t = scalar_tuple({l1, l2});
  const auto k = berezin_kernel(wf, t, N, N, 1e-10);
  CHECK(k.rank == 1);
  const double expected = 1.0 - std::pow(rho, N + 1);
  CHECK(std::abs((k.k.adjoint() * k.k)(0, 0).real() - expected) < 1e-13);
}

TEST_CASE("berezin kernel: Cuntz tuple gives the zero kernel") {
  std::mt19937_64 rng(37);
  const auto wf = WeightFamily::bergman(2, 1.0, 4);
  const auto v = helpers::cuntz_halves(3, rng);
  const auto k = berezin_kernel(wf, v, 4, 4, 1e-10);
  CHECK(k.rank == 0);
  CHECK(operator_norm(k.k) == 0.0);
}

TEST_CASE("berezin kernel rejects tuples outside the domain") {
  const auto wf = WeightFamily::bergman(2, 1.0, 4);
  const auto t = scalar_tuple({cplx(0.9, 0.0), cplx(0.9, 0.0)});  // |lambda|^2 = 1.62 > 1
  CHECK_THROWS_AS(berezin_kernel(wf, t, 4, 4, 1e-10), std::domain_error);
}

TEST_CASE("intertwining residual vanishes on interior rows") {
  const auto wf = WeightFamily::bergman(2, 2.5, 9);
  const auto w = build_W(wf, 4);
  CHECK(intertwining_residual(wf, w, berezin_kernel(wf, w, 4, 9, 1e-10)) < 1e-12);

  const auto t = scalar_tuple({cplx(0.2, 0.0), cplx(0.0, 0.1)});
  CHECK(intertwining_residual(wf, t, berezin_kernel(wf, t, 4, 9, 1e-10)) < 1e-10);

  // Random co-invariant compressions of the model.
  std::mt19937_64 rng(41);
  const auto basis = helpers::random_coinvariant_basis(w, 1, 1, rng);
  const auto comp = w.compress(basis);
  CHECK(intertwining_residual(wf, comp, berezin_kernel(wf, comp, 4, 9, 1e-10)) < 1e-9);
}

TEST_CASE("model transfer residual for the model and compressions") {
  const auto wf = WeightFamily::bergman(2, 1.5, 7);
  const auto w = build_W(wf, 4);
  std::vector<std::pair<Word, Word>> pairs;
  for (int ka = 0; ka <= 2; ++ka)
    for_each_word(2, ka, [&](const Word& a) {
      for (int kb = 0; kb <= 2; ++kb)
        for_each_word(2, kb, [&](const Word& b) { pairs.emplace_back(a, b); });
    });
  CHECK(model_transfer_check(wf, w, berezin_kernel(wf, w, 4, 7, 1e-10), pairs) < 1e-10);

  std::mt19937_64 rng(43);
  const auto basis = helpers::random_coinvariant_basis(w, 1, 1, rng);
  const auto comp = w.compress(basis);
  CHECK(model_transfer_check(wf, comp, berezin_kernel(wf, comp, 4, 7, 1e-10), pairs) < 1e-10);

  // Non-pure input is rejected (ball weights keep the defect series finite).
  const auto ball = WeightFamily::bergman(2, 1.0, 7);
  const auto v = helpers::cuntz_halves(3, rng);
  const auto kv = berezin_kernel(ball, v, 4, 7, 1e-10);
  CHECK_THROWS_AS(model_transfer_check(ball, v, kv, pairs), std::domain_error);
}

TEST_CASE("purity and kernel isometry are equivalent on constructed families") {
  std::mt19937_64 rng(47);
  const auto wf = WeightFamily::bergman(2, 1.0, 4);
  const auto w = build_W(wf, 4);

  // Pure side: compressions have isometric kernels and tiny pure residuals.
  const auto basis = helpers::random_coinvariant_basis(w, 1, 1, rng);
  const auto comp = w.compress(basis);
  const auto c = classify(wf, comp, 4, 1e-10);
  const auto k = berezin_kernel(wf, comp, 4, 4, 1e-10);
  const double iso = operator_norm(k.k.adjoint() * k.k - Matrix::Identity(comp.dim(), comp.dim()));
  CHECK(c.pure_residual < 1e-10);
  CHECK(iso < 1e-10);

  // Non-pure side: the Cuntz tuple has pure residual 1 and a non-isometric kernel.
  const auto v = helpers::cuntz_halves(3, rng);
  const auto cv = classify(wf, v, 4, 1e-10);
  const auto kv = berezin_kernel(wf, v, 4, 4, 1e-10);
  const double iso_v =
      operator_norm(kv.k.adjoint() * kv.k - Matrix::Identity(v.dim(), v.dim()));
  CHECK(cv.pure_residual > 0.9);
  CHECK(iso_v > 0.9);
}

TEST_CASE("von Neumann inequality over a randomized suite") {
  std::mt19937_64 rng(53);
  const auto wf = WeightFamily::bergman(2, 2.0, 6);
  const auto w = build_W(wf, 3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  for (int compression = 0; compression < 3; ++compression) {
    const auto basis = helpers::random_coinvariant_basis(w, 1, 1, rng);
    const auto t = w.compress(basis);
    std::vector<std::vector<WordPairCoeff>> sets;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<WordPairCoeff> set;
      for (int ka = 0; ka <= 2; ++ka)
        for_each_word(2, ka, [&](const Word& a) {
          for (int kb = 0; kb <= 2; ++kb)
            for_each_word(2, kb, [&](const Word& b) {
              set.push_back({a, b, cplx(dist(rng), dist(rng))});
            });
        });
      sets.push_back(std::move(set));
    }
    for (const auto& pr : von_neumann_check(wf, t, sets, 6, 1e-10))
      CHECK(pr.norm_t <= pr.norm_w + 1e-8);
  }

  // Identity coefficient only: both norms are exactly 1.
  std::vector<std::vector<WordPairCoeff>> id_set{{{Word{}, Word{}, cplx(1.0, 0.0)}}};
  const auto pairs = von_neumann_check(wf, w, id_set, 6, 1e-10);
  CHECK(pairs[0].norm_t == doctest::Approx(1.0));
  CHECK(pairs[0].norm_w == doctest::Approx(1.0));

  // The model itself: equality candidates.
  std::vector<std::vector<WordPairCoeff>> rand_set;
  {
    std::vector<WordPairCoeff> set;
    for (int ka = 0; ka <= 1; ++ka)
      for_each_word(2, ka, [&](const Word& a) {
        for (int kb = 0; kb <= 1; ++kb)
          for_each_word(2, kb, [&](const Word& b) {
            set.push_back({a, b, cplx(dist(rng), dist(rng))});
          });
      });
    rand_set.push_back(std::move(set));
  }
  const auto eq = von_neumann_check(wf, w, rand_set, 6, 1e-10);
  CHECK(eq[0].norm_t <= eq[0].norm_w + 1e-10);

  // Non-pure tuples are rejected.
  const auto v = helpers::cuntz_halves(3, rng);
  CHECK_THROWS_AS(von_neumann_check(wf, v, id_set, 6, 1e-10), std::domain_error);
}

TEST_CASE("nilpotent tuples yield truncation-exact finite sums") {
  // Strictly lower-triangular scalars: nilpotent of order 2.
  Matrix m1 = Matrix::Zero(2, 2), m2 = Matrix::Zero(2, 2);
  m1(1, 0) = 0.4;
  m2(1, 0) = cplx(0.0, 0.3);
  OperatorTuple t({m1, m2});
  const auto wf = WeightFamily::bergman(2, 2.5, 6);
  const auto dr = defect(wf, t, 6, 1e-10);
  CHECK(dr.converged);
  // Only degrees 0 and 1 contribute.
  for (std::size_t p = 2; p < dr.increment_norms.size(); ++p)
    CHECK(dr.increment_norms[p] == 0.0);
  const auto c = classify(wf, t, 6, 1e-10);
  CHECK(c.in_domain);
  CHECK(c.pure());
}
