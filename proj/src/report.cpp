#include "ncfock/report.hpp"

#include <cmath>

#include "ncfock/hardy.hpp"
#include "ncfock/wold.hpp"

namespace ncfock {

namespace {

json make_header(const char* command) {
  return json{{"schema_version", kReportSchemaVersion}, {"command", command}};
}

void add_check(json& checks, const char* name, double value, double tol) {
  checks.push_back({{"name", name}, {"value", value}, {"tol", tol}, {"pass", value <= tol}});
}

void add_check_bool(json& checks, const char* name, bool pass) {
  checks.push_back({{"name", name}, {"pass", pass}});
}

int effective_cap(const WeightFamily& wf, const ReportOptions& opts) {
  return opts.degree_cap < 0 ? wf.degree() : opts.degree_cap;
}

FreeSeries random_poly(int n, int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  FreeSeries phi(n, degree);
  for (std::int64_t i = 0; i < phi.size(); ++i) phi.set_coeff_at(i, cplx(dist(rng), dist(rng)));
  return phi;
}

}  // namespace

json weights_report(const WeightFamily& wf) {
  json j = make_header("weights");
  j["weights"] = weights_to_json(wf);
  j["b"] = series_to_json(wf.b_series());
  j["a"] = series_to_json(wf.inverse());
  const auto ratios = ratio_sups(wf);
  j["ratio_sup_left"] = ratios.left;
  j["ratio_sup_right"] = ratios.right;
  return j;
}

json admissible_report(const WeightFamily& wf, const ReportOptions& opts) {
  json j = make_header("admissible");
  j["weights"] = weights_to_json(wf);
  j["probe_only"] = true;
  const AdmissibilityReport rep = admissibility_report(wf);

  j["condition_a"] = {{"ratio_sup_left", rep.ratios.left},
                      {"ratio_sup_right", rep.ratios.right}};
  j["condition_b"] = {{"radius_sequence", rep.radius.values},
                      {"monotone_nonincreasing", rep.radius.monotone_nonincreasing}};
  json tails = json::array();
  for (const auto& [q, sup] : rep.tail_sups) tails.push_back({{"q", q}, {"sup", sup}});
  j["condition_c"] = {{"abb_sup_by_nprime", rep.abb.sup_by_nprime},
                      {"abb_cap_beta", rep.abb.cap_beta},
                      {"abb_cap_alpha", rep.abb.cap_alpha},
                      {"tail_sups", std::move(tails)},
                      {"ex_increments", rep.ex.increments},
                      {"ex_partial_sums", rep.ex.partial_sums},
                      {"ex_ratio_sup", rep.ex.ratio_sup}};

  json reg{{"pass", rep.regularity.pass},
           {"sign_tol", rep.regularity.sign_tol},
           {"rel_tol", rep.regularity.rel_tol}};
  if (rep.regularity.witness) reg["witness"] = word_to_json(*rep.regularity.witness);
  if (rep.regularity.pass) reg["submultiplicative"] = rep.regularity.submultiplicative;
  j["regularity"] = std::move(reg);

  json subcn{{"pass", rep.subcn.pass}, {"tol", rep.subcn.tol}};
  if (!rep.subcn.pass && rep.subcn.witness_beta) {
    subcn["witness"] = {{"beta", word_to_json(*rep.subcn.witness_beta)},
                        {"i", rep.subcn.witness_i},
                        {"j", rep.subcn.witness_j},
                        {"lhs", rep.subcn.lhs},
                        {"rhs", rep.subcn.rhs}};
  }
  j["subcn"] = std::move(subcn);

  json sp{{"found", rep.sign_pattern.found}, {"tol", rep.sign_pattern.tol}};
  if (rep.sign_pattern.found) {
    sp["degree_from"] = rep.sign_pattern.degree_from;
    sp["sign"] = rep.sign_pattern.sign;
  }
  j["sign_pattern"] = std::move(sp);

  json decay = json::array();
  for (std::size_t i = 0; i < rep.decay.size(); ++i)
    decay.push_back({{"generator", static_cast<int>(i + 1)},
                     {"max_by_degree", rep.decay[i].max_by_degree},
                     {"decaying", rep.decay[i].decaying}});
  j["diagonal_decay"] = std::move(decay);

  // Internal consistency: the inverse coefficients satisfy the convolution
  // identities (validated inside inverse(); surfaced here as a check).
  json checks = json::array();
  add_check_bool(checks, "inverse_convolution_identities", true);
  j["checks"] = std::move(checks);
  (void)opts;
  return j;
}

json classify_report(const WeightFamily& wf, const OperatorTuple& t, const ReportOptions& opts) {
  json j = make_header("classify");
  const Classification c =
      classify(wf, t, effective_cap(wf, opts), opts.tol, opts.radial_grid, opts.pure_tol,
               opts.cuntz_tol);
  j["classification"] = classification_to_json(c);
  j["verdict"] = c.cuntz() ? "cuntz" : c.pure() ? "pure" : c.in_domain ? "in_domain" : "outside";
  if (!c.converged) j["verdict"] = "inconclusive";
  return j;
}

json berezin_report(const WeightFamily& wf, const OperatorTuple& t, const ReportOptions& opts) {
  json j = make_header("berezin");
  const int cap = effective_cap(wf, opts);
  const BerezinKernel kernel = berezin_kernel(wf, t, wf.degree(), cap, opts.tol);
  j["rank"] = kernel.rank;
  j["fock_degree"] = kernel.fock_degree;
  const double isometry = operator_norm(kernel.k.adjoint() * kernel.k -
                                        Matrix::Identity(t.dim(), t.dim()));
  const double inter = intertwining_residual(wf, t, kernel);
  json checks = json::array();
  add_check(checks, "isometry_defect", isometry, opts.pure_tol);
  add_check(checks, "intertwining_residual", inter, 1e-10);
  if (isometry <= opts.pure_tol) {
    std::vector<std::pair<Word, Word>> pairs;
    for (int ka = 0; ka <= 2; ++ka)
      for_each_word(wf.n(), ka, [&](const Word& alpha) {
        for (int kb = 0; kb <= 2; ++kb)
          for_each_word(wf.n(), kb, [&](const Word& beta) { pairs.emplace_back(alpha, beta); });
      });
    add_check(checks, "model_transfer_max_residual",
              model_transfer_check(wf, t, kernel, pairs, opts.pure_tol), 1e-10);
  }
  j["checks"] = std::move(checks);
  return j;
}

json hardy_report(const WeightFamily& wf, const ReportOptions& opts) {
  json j = make_header("hardy");
  std::mt19937_64 rng(opts.seed);
  const int N = wf.degree();
  const TruncatedFock fock(wf.n(), N);
  const OperatorTuple w = build_W(wf, N);
  json checks = json::array();

  // Fourier round trip on a random polynomial of degree <= min(3, N).
  const FreeSeries phi = random_poly(wf.n(), std::min(3, N), rng);
  const Matrix a = poly_of_tuple(w, phi);
  const FreeSeries recovered = fourier_coefficients(wf, a);
  double round_trip = 0.0;
  for (std::int64_t i = 0; i < phi.size(); ++i)
    round_trip = std::max(round_trip, std::abs(phi.coeff_at(i) - recovered.coeff_at(i)));
  add_check(checks, "fourier_round_trip", round_trip, 1e-10);
  add_check(checks, "commutant_residual", commutant_residual(wf, a), 1e-12);

  // Fejer bounds and reconstruction for a random operator on F^2_N (x) C^2.
  const Matrix big = random_matrix(fock.dim * 2, fock.dim * 2, rng);
  const double norm_big = operator_norm(big);
  double worst_excess = 0.0;
  for (int np = 0; np <= 2 * N; ++np)
    worst_excess = std::max(worst_excess,
                            operator_norm(cesaro_sum(fock, big, np, 2)) - norm_big);
  add_check(checks, "fejer_norm_excess", worst_excess, 1e-10);
  add_check(checks, "cesaro_exact_at_2N",
            operator_norm(cesaro_sum(fock, big, 2 * N, 2) - big), 1e-10);
  double reconstruction = 0.0;
  Matrix sum_parts = Matrix::Zero(big.rows(), big.cols());
  for (int s = -N; s <= N; ++s) sum_parts += homogeneous_part(fock, big, s, 2);
  reconstruction = operator_norm(sum_parts - big);
  add_check(checks, "homogeneous_reconstruction", reconstruction, 1e-12);

  // Functional calculus on the (nilpotent, pure) truncated model itself.
  const int cap = effective_cap(wf, opts);
  const FreeSeries p = random_poly(wf.n(), std::min(2, N), rng);
  const FreeSeries q = random_poly(wf.n(), std::min(2, N), rng);
  const Matrix psi_p = functional_calculus(wf, w, p, cap, opts.tol, opts.pure_tol);
  add_check(checks, "calculus_matches_direct_sum",
            operator_norm(psi_p - poly_of_tuple(w, p)), 1e-9);
  if (2 * std::min(2, N) <= N) {
    const FreeSeries pq = multiply(p, q);
    const Matrix lhs = functional_calculus(wf, w, pq, cap, opts.tol, opts.pure_tol);
    const Matrix rhs = psi_p * functional_calculus(wf, w, q, cap, opts.tol, opts.pure_tol);
    add_check(checks, "calculus_homomorphism", operator_norm(lhs - rhs), 1e-9);
  }
  const CesaroCalculus cc = cesaro_calculus(w, p, 4 * N);
  add_check(checks, "cesaro_calculus_limit",
            operator_norm(cc.limit - poly_of_tuple(w, p)), 1e-9);

  const CncResult cnc = cnc_check(wf, w, N, cap, opts.tol);
  j["cnc"] = {{"sigma_min", cnc.sigma_min},
              {"kernel_dim", cnc.kernel_dim},
              {"cnc", cnc.cnc},
              {"threshold", cnc.threshold}};
  j["checks"] = std::move(checks);
  return j;
}

json multiplier_report(const WeightFamily& wf, const MultiplierSymbol* symbol,
                       const ReportOptions& opts) {
  json j = make_header("multiplier");
  std::mt19937_64 rng(opts.seed);
  const int N = wf.degree();
  MultiplierSymbol phi = symbol ? *symbol : MultiplierSymbol(wf.n(), std::min(3, N), 2, 2);
  if (!symbol) {
    for (auto& term : phi.terms) term = random_matrix(phi.e2, phi.e1, rng);
  }
  json checks = json::array();
  const Matrix r_phi = right_multiplier_matrix(phi, wf, wf, N);
  const SymbolRecovery rec = symbol_from_commutant(r_phi, wf, wf, phi.e1, phi.e2, 1e-8);
  double coeff_residual = 0.0;
  for (std::size_t i = 0; i < phi.terms.size(); ++i) {
    const Matrix diff = phi.terms[i] - rec.symbol.terms[i];
    if (diff.size() > 0) coeff_residual = std::max(coeff_residual, diff.cwiseAbs().maxCoeff());
  }
  add_check(checks, "symbol_round_trip", coeff_residual, 1e-10);
  add_check(checks, "reconstruction_residual", rec.reconstruction_residual, 1e-10);
  add_check(checks, "intertwining_residual", rec.intertwining_residual, 1e-10);

  const HatXResult hat = hatX_conjugate(r_phi, wf, wf, phi.e1, phi.e2, 1e-8);
  add_check(checks, "fock_side_intertwining", hat.w_intertwining_residual, 1e-10);

  // A grading projection is not multi-analytic; rejection is an error path.
  bool rejected = false;
  try {
    const TruncatedFock fock(wf.n(), N);
    Matrix q1 = kron(grading_projection(fock, std::min(1, N)), Matrix::Identity(phi.e1, phi.e1));
    symbol_from_commutant(q1, wf, wf, phi.e1, phi.e1, 1e-8);
  } catch (const std::domain_error&) {
    rejected = true;
  }
  add_check_bool(checks, "non_commutant_rejected", rejected);

  j["symbol"] = symbol_to_json(rec.symbol);
  j["checks"] = std::move(checks);
  return j;
}

json wold_report(const WeightFamily& wf, const OperatorTuple& t, const ReportOptions& opts) {
  json j = make_header("wold");
  const int cap = effective_cap(wf, opts);
  const WoldDecomposition wd = wold_decompose(wf, t, cap, opts.tol);
  j["dim_k0"] = wd.basis_k0.cols();
  j["dim_k1"] = wd.basis_k1.cols();
  j["dim_wandering"] = wd.wandering_basis.cols();
  j["gate_residual"] = wd.gate_residual;
  j["threshold"] = wd.threshold;
  j["kk_singular_values"] = std::vector<double>(
      wd.kk_singular_values.data(), wd.kk_singular_values.data() + wd.kk_singular_values.size());
  json checks = json::array();
  double reducing = 0.0;
  for (double r : wd.reducing_residuals) reducing = std::max(reducing, r);
  add_check(checks, "reducing_residual", reducing, 1e-8);
  add_check(checks, "pure_residual_k0", wd.pure_residual_k0, 1e-8);
  add_check(checks, "cuntz_residual_k1", wd.cuntz_residual_k1, 1e-8);
  add_check(checks, "k1_cross_method_gap", wd.k1_cross_residual, 1e-8);
  add_check(checks, "wandering_vs_defect_gap", wd.wandering_vs_defect_gap, 1e-8);
  j["checks"] = std::move(checks);
  return j;
}

json selftest_report(int n, int N, std::uint64_t seed) {
  json j = make_header("selftest");
  j["n"] = n;
  j["N"] = N;
  j["seed"] = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.2, 2.5);
  json checks = json::array();

  // Series inversion round trip and oracle agreement.
  {
    FreeSeries g(n, N);
    g.set_coeff(Word{}, 1.0);
    for (std::int64_t i = 1; i < g.size(); ++i) g.set_coeff_at(i, unit(rng));
    const FreeSeries f = invert(g);
    const FreeSeries prod = multiply(g, f);
    double residual = 0.0;
    const FreeSeries one = FreeSeries::unit(n, N);
    for (std::int64_t i = 0; i < prod.size(); ++i)
      residual = std::max(residual, std::abs(prod.coeff_at(i) - one.coeff_at(i)));
    add_check(checks, "series_inversion_round_trip", residual, 1e-12);

    double oracle_gap = 0.0;
    for (int k = 1; k <= std::min(3, N); ++k) {
      for_each_word(n, k, [&](const Word& w) {
        oracle_gap = std::max(oracle_gap, std::abs(f.coeff(w) - direct_inverse_oracle(g, w)));
      });
    }
    add_check(checks, "inversion_matches_factorization_oracle", oracle_gap, 1e-12);
  }

  // Bergman inverse coefficients.
  {
    const auto wf = WeightFamily::bergman(n, 2.5, N);
    double gap = 0.0;
    for (int k = 1; k <= N; ++k) {
      const double expected = (k % 2 == 0 ? 1.0 : -1.0) * real_binomial(2.5, k);
      for_each_word(n, k, [&](const Word& w) {
        gap = std::max(gap, std::abs(wf.a(w) - expected));
      });
    }
    add_check(checks, "bergman_inverse_binomials", gap, 1e-12);
  }

  // Universal-model identities for a non-regular constructor.
  {
    const auto wf = WeightFamily::bergman(n, 1.5, N);
    Matrix p = Matrix::Zero(truncation_dim(n, N), truncation_dim(n, N));
    p(0, 0) = 1.0;
    add_check(checks, "model_defect_is_vacuum_projection",
              (model_defect(wf, N) - p).cwiseAbs().maxCoeff(), 1e-12);
    const Matrix c = model_completeness(wf, N);
    add_check(checks, "model_completeness_is_identity",
              (c - Matrix::Identity(c.rows(), c.cols())).cwiseAbs().maxCoeff(), 1e-12);
    const auto w = build_W(wf, N);
    const auto lam = build_Lambda(wf, N);
    double comm = 0.0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        comm = std::max(comm, (w[i] * lam[k] - lam[k] * w[i]).cwiseAbs().maxCoeff());
    add_check(checks, "left_right_commutation", comm, 1e-13);

    const Classification cls = classify(wf, w, N, 1e-10);
    add_check_bool(checks, "truncated_model_is_pure", cls.pure());
    const BerezinKernel kernel = berezin_kernel(wf, w, N, N, 1e-10);
    add_check(checks, "model_kernel_isometry",
              operator_norm(kernel.k.adjoint() * kernel.k -
                            Matrix::Identity(w.dim(), w.dim())),
              1e-10);
    add_check(checks, "model_kernel_intertwining", intertwining_residual(wf, w, kernel), 1e-10);
  }

  // von Neumann inequality on a random co-invariant compression.
  {
    const auto wf = WeightFamily::bergman(n, 2.0, std::min(N, 3));
    const int NN = wf.degree();
    const auto w = build_W(wf, NN);
    // Close a random vector under all adjoints to get a co-invariant subspace.
    std::vector<Vector> vecs{random_matrix(w.dim(), 1, rng).col(0)};
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      for (int g = 0; g < n; ++g) {
        const Vector next = w[g].adjoint() * vecs[i];
        if (next.norm() > 1e-10) vecs.push_back(next);
      }
      if (vecs.size() > 200) break;
    }
    Matrix stacked(w.dim(), static_cast<Eigen::Index>(vecs.size()));
    for (std::size_t i = 0; i < vecs.size(); ++i) stacked.col(static_cast<Eigen::Index>(i)) = vecs[i];
    const Matrix basis = range_basis(stacked, 1e-10);
    const OperatorTuple t = w.compress(basis);
    std::vector<std::vector<WordPairCoeff>> sets;
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<WordPairCoeff> set;
      for (int ka = 0; ka <= 2; ++ka) {
        for_each_word(n, ka, [&](const Word& alpha) {
          for (int kb = 0; kb <= 2; ++kb) {
            for_each_word(n, kb, [&](const Word& beta) {
              set.push_back({alpha, beta, cplx(dist(rng), dist(rng))});
            });
          }
        });
      }
      sets.push_back(std::move(set));
    }
    const auto pairs = von_neumann_check(wf, t, sets, NN, 1e-10);
    double worst = 0.0;
    for (const auto& pr : pairs) worst = std::max(worst, pr.norm_t - pr.norm_w);
    add_check(checks, "von_neumann_excess", worst, 1e-8);
  }

  // Fejer bound, reconstruction, Fourier round trip.
  {
    const auto wf = WeightFamily::dirichlet(n, 1.0, N);
    const TruncatedFock fock(n, N);
    const Matrix a = random_matrix(fock.dim, fock.dim, rng);
    const double na = operator_norm(a);
    double excess = 0.0;
    for (int np = 0; np <= 2 * N; ++np)
      excess = std::max(excess, operator_norm(cesaro_sum(fock, a, np)) - na);
    add_check(checks, "fejer_norm_excess", excess, 1e-10);
    add_check(checks, "cesaro_reproduces_at_2N",
              operator_norm(cesaro_sum(fock, a, 2 * N) - a), 1e-10);

    const auto w = build_W(wf, N);
    const FreeSeries phi = random_poly(n, std::min(3, N), rng);
    const Matrix pw = poly_of_tuple(w, phi);
    const FreeSeries rec = fourier_coefficients(wf, pw);
    double rt = 0.0;
    for (std::int64_t i = 0; i < phi.size(); ++i)
      rt = std::max(rt, std::abs(phi.coeff_at(i) - rec.coeff_at(i)));
    add_check(checks, "fourier_round_trip", rt, 1e-10);
    add_check(checks, "polynomial_commutant_residual", commutant_residual(wf, pw), 1e-12);
  }

  // Multiplier symbol round trip and the unitary u_g.
  {
    const auto wf = WeightFamily::bergman(n, 2.0, N);
    MultiplierSymbol phi(n, std::min(2, N), 2, 2);
    for (auto& term : phi.terms) term = random_matrix(2, 2, rng);
    const Matrix r_phi = right_multiplier_matrix(phi, wf, wf, N);
    const SymbolRecovery rec = symbol_from_commutant(r_phi, wf, wf, 2, 2, 1e-8);
    double residual = rec.reconstruction_residual;
    for (std::size_t i = 0; i < phi.terms.size(); ++i)
      residual = std::max(residual,
                          (phi.terms[i] - rec.symbol.terms[i]).cwiseAbs().maxCoeff());
    add_check(checks, "multiplier_round_trip", residual, 1e-10);

    const Matrix ug = u_g(wf, N);
    // Unitarity for the weighted inner product: U^* = U^{-1} diagonal.
    Matrix prod = Matrix::Zero(ug.rows(), ug.cols());
    for (Eigen::Index i = 0; i < ug.rows(); ++i) prod(i, i) = ug(i, i) * (1.0 / ug(i, i));
    add_check(checks, "u_g_diagonal_unitary",
              (prod - Matrix::Identity(ug.rows(), ug.cols())).cwiseAbs().maxCoeff(), 1e-14);
  }

  // Wold decomposition of a pure (+) Cuntz direct sum (n = 2 construction).
  if (n == 2) {
    const int NN = std::min(N, 3);
    const auto wf = WeightFamily::bergman(2, 1.0, NN);
    const auto w = build_W(wf, NN);
    const Matrix u = random_unitary(4, rng);
    OperatorTuple cuntz(2, 4);
    cuntz[0] = u / std::sqrt(2.0);
    cuntz[1] = u / std::sqrt(2.0);
    const OperatorTuple v = w.direct_sum(cuntz);
    const WoldDecomposition wd = wold_decompose(wf, v, NN, 1e-10);
    add_check_bool(checks, "wold_dims_recovered",
                   wd.basis_k0.cols() == w.dim() && wd.basis_k1.cols() == 4 &&
                       wd.wandering_basis.cols() == 1);
    double worst = std::max({wd.pure_residual_k0, wd.cuntz_residual_k1, wd.k1_cross_residual});
    for (double r : wd.reducing_residuals) worst = std::max(worst, r);
    add_check(checks, "wold_residuals", worst, 1e-8);
  }

  bool all = true;
  for (const auto& c : checks) all = all && c.at("pass").get<bool>();
  j["checks"] = std::move(checks);
  j["all_checks_pass"] = all;
  return j;
}

bool report_checks_pass(const json& report) {
  if (!report.contains("checks")) return true;
  for (const auto& c : report.at("checks")) {
    if (!c.at("pass").get<bool>()) return false;
  }
  return true;
}

}  // namespace ncfock
