#include "ncfock/domain.hpp"

#include <cmath>

namespace ncfock {

namespace {

bool tail_small(const std::vector<double>& increments, double tol, double scale) {
  const std::size_t look = std::min<std::size_t>(3, increments.size());
  for (std::size_t i = increments.size() - look; i < increments.size(); ++i) {
    if (increments[i] > tol * (1.0 + scale)) return false;
  }
  return !increments.empty();
}

double min_eigenvalue(const Matrix& hermitian) {
  if (hermitian.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Matrix& hermitian) {
  if (hermitian.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// All T_alpha for |alpha| <= cap in graded-lex order, built degree by degree.
struct WordOpCache {
  const OperatorTuple* tuple = nullptr;
  int cap = 0;
  std::vector<Word> words;
  std::vector<Matrix> ops;
};

WordOpCache build_cache(const OperatorTuple& t, int cap) {
  WordOpCache cache;
  cache.tuple = &t;
  cache.cap = cap;
  for_each_word_operator(t, cap, [&](const Word& alpha, const Matrix& ta) {
    cache.words.push_back(alpha);
    cache.ops.push_back(ta);
  });
  return cache;
}

// Per-degree increments sum_{|alpha|=p} coeff(alpha) T_alpha T_alpha^*.
std::vector<Matrix> weighted_square_increments(const WordOpCache& cache,
                                               const std::function<double(const Word&)>& coeff) {
  const Eigen::Index d = cache.tuple->dim();
  std::vector<Matrix> out(static_cast<std::size_t>(cache.cap) + 1, Matrix::Zero(d, d));
  for (std::size_t i = 0; i < cache.ops.size(); ++i) {
    const double c = coeff(cache.words[i]);
    if (c == 0.0) continue;
    out[cache.words[i].size()].noalias() += c * (cache.ops[i] * cache.ops[i].adjoint());
  }
  return out;
}

// sum_p r^{2p} sum_{|alpha|=p} b_alpha T_alpha M T_alpha^* through the
// eigendecomposition of the Hermitian mid matrix M (cost ~ rank(M) d^2 per
// word instead of d^3).
Matrix middle_sum(const WordOpCache& cache, const WeightFamily& wf, const Matrix& mid, double r,
                  std::vector<double>* increment_norms) {
  const Eigen::Index d = cache.tuple->dim();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (mid + mid.adjoint()));
  const Eigen::VectorXd ev = es.eigenvalues();
  const double scale = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = 0; j < ev.size(); ++j)
    if (std::abs(ev(j)) > 1e-15 * scale) kept.push_back(j);

  Matrix acc = Matrix::Zero(d, d);
  Matrix level = Matrix::Zero(d, d);
  std::size_t word_at = 0;
  for (int p = 0; p <= cache.cap; ++p) {
    level.setZero();
    const double rp = std::pow(r, 2 * p);
    for (; word_at < cache.words.size() &&
           static_cast<int>(cache.words[word_at].size()) == p;
         ++word_at) {
      const double c = wf.b(cache.words[word_at]) * rp;
      const Matrix& ta = cache.ops[word_at];
      for (Eigen::Index j : kept) {
        const Vector col = ta * es.eigenvectors().col(j);
        level.noalias() += (c * ev(j)) * (col * col.adjoint());
      }
    }
    if (increment_norms) increment_norms->push_back(operator_norm(level));
    acc += level;
  }
  return acc;
}

struct DefectData {
  std::vector<Matrix> increments;  // per degree
  Matrix delta_at(double r) const {
    Matrix acc = Matrix::Zero(increments.front().rows(), increments.front().cols());
    for (std::size_t p = 0; p < increments.size(); ++p)
      acc += std::pow(r, 2.0 * static_cast<double>(p)) * increments[p];
    return 0.5 * (acc + acc.adjoint()).eval();
  }
};

DefectData defect_data(const WordOpCache& cache, const WeightFamily& wf) {
  DefectData out;
  out.increments = weighted_square_increments(cache, [&](const Word& w) { return wf.a(w); });
  return out;
}

void check_defect_args(const WeightFamily& wf, const OperatorTuple& t, int degree_cap) {
  if (degree_cap < 0 || degree_cap > wf.degree())
    throw std::invalid_argument("defect: degree_cap must lie in [0, weight degree]");
  if (t.n() != wf.n()) throw std::invalid_argument("defect: generator count mismatch");
}

DefectResult defect_from_data(const DefectData& data, int degree_cap, double tol) {
  DefectResult out;
  out.degree_cap = degree_cap;
  out.tol = tol;
  out.delta = data.delta_at(1.0);
  for (const Matrix& m : data.increments) out.increment_norms.push_back(operator_norm(m));
  out.converged = tail_small(out.increment_norms, tol, operator_norm(out.delta));
  return out;
}

}  // namespace

DefectResult defect(const WeightFamily& wf, const OperatorTuple& t, int degree_cap, double tol) {
  check_defect_args(wf, t, degree_cap);
  const WordOpCache cache = build_cache(t, degree_cap);
  return defect_from_data(defect_data(cache, wf), degree_cap, tol);
}

Classification classify(const WeightFamily& wf, const OperatorTuple& t, int degree_cap,
                        double tol, const std::vector<double>& radial_grid, double pure_tol,
                        double cuntz_tol) {
  check_defect_args(wf, t, degree_cap);
  Classification out;
  out.tol_membership = tol;
  out.tol_pure = pure_tol;
  out.tol_cuntz = cuntz_tol;

  const WordOpCache cache = build_cache(t, degree_cap);
  const DefectData data = defect_data(cache, wf);
  const DefectResult dr = defect_from_data(data, degree_cap, tol);
  out.min_delta_eig = min_eigenvalue(dr.delta);
  out.cuntz_residual = operator_norm(dr.delta);

  std::vector<double> pure_increments;
  const Matrix pure_sum = middle_sum(cache, wf, dr.delta, 1.0, &pure_increments);
  const Matrix gap = pure_sum - Matrix::Identity(t.dim(), t.dim());
  out.pure_residual = operator_norm(gap);
  out.converged = dr.converged && tail_small(pure_increments, tol, operator_norm(pure_sum));
  out.in_domain =
      out.min_delta_eig >= -tol && max_eigenvalue(0.5 * (gap + gap.adjoint()).eval()) <= tol;

  for (double r : radial_grid) {
    RadialPoint pt;
    pt.r = r;
    const Matrix delta_r = data.delta_at(r);
    pt.min_delta_eig = min_eigenvalue(delta_r);
    // Membership only: the partial sums of the PSD series are increasing, so
    // the last one witnesses the <= I condition without a convergence gate.
    const Matrix rsum = middle_sum(cache, wf, delta_r, r, nullptr);
    const Matrix rgap = rsum - Matrix::Identity(t.dim(), t.dim());
    pt.in_domain = pt.min_delta_eig >= -tol &&
                   max_eigenvalue(0.5 * (rgap + rgap.adjoint()).eval()) <= tol;
    out.radial.push_back(pt);
  }
  return out;
}

Lemm2Result lemm2_certificate(const WeightFamily& wf, const OperatorTuple& t, double c,
                              int degree_cap, double tol) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("lemm2_certificate: c must be in (0,1)");
  check_defect_args(wf, t, degree_cap);
  Lemm2Result out;
  const WordOpCache cache = build_cache(t, degree_cap);
  const std::vector<Matrix> increments = weighted_square_increments(
      cache, [&](const Word& w) { return w.empty() ? 0.0 : std::abs(wf.a(w)); });
  Matrix sum = Matrix::Zero(t.dim(), t.dim());
  std::vector<double> norms;
  for (const Matrix& m : increments) {
    sum += m;
    norms.push_back(operator_norm(m));
  }
  sum = 0.5 * (sum + sum.adjoint()).eval();
  out.sup_eig = max_eigenvalue(sum);
  out.converged = tail_small(norms, tol, out.sup_eig);
  out.pass = out.converged && out.sup_eig <= c;
  if (!out.converged)
    throw convergence_error("lemm2_certificate: absolute-coefficient series did not converge");
  if (out.pass) {
    // Cross-check purity. The pure-sum tail past degree_cap is bounded by
    // 2 c_hat^{cap+1} / (1 - c_hat) with c_hat the measured contraction bound.
    const Classification cls = classify(wf, t, degree_cap, tol, {});
    const double c_hat = std::min(c, std::max(out.sup_eig, 1e-4));
    const double tail_bound = 2.0 * std::pow(c_hat, degree_cap + 1) / (1.0 - c_hat);
    const double allowed = std::max(cls.tol_pure, tail_bound);
    if (!(cls.min_delta_eig >= -tol) || cls.pure_residual > allowed)
      throw std::runtime_error("lemm2_certificate: certificate passed but tuple is not pure");
  }
  return out;
}

PureBallEstimate pure_ball_radius(const WeightFamily& wf) {
  PureBallEstimate out;
  double r_max = 0.0;
  std::vector<double> degree_l1(static_cast<std::size_t>(wf.degree()) + 1, 0.0);
  std::vector<double> growth;  // A_k^{1/k} for degrees with A_k > 0
  for (int k = 1; k <= wf.degree(); ++k) {
    double a1 = 0.0;
    for_each_word(wf.n(), k, [&](const Word& w) { a1 += std::abs(wf.a(w)); });
    degree_l1[static_cast<std::size_t>(k)] = a1;
    if (a1 > 0.0) {
      growth.push_back(std::pow(a1, 1.0 / k));
      r_max = std::max(r_max, growth.back());
    }
  }
  if (!(r_max > 0.0) || !std::isfinite(r_max))
    throw std::domain_error("pure_ball_radius: no usable coefficient growth data");
  // A growth rate still accelerating at the truncation boundary means the
  // probe cannot certify any radius of convergence.
  if (growth.size() >= 3) {
    const double r1 = growth[growth.size() - 1] / growth[growth.size() - 2];
    const double r2 = growth[growth.size() - 2] / growth[growth.size() - 3];
    if (r1 > 1.05 && r2 > 1.05)
      throw std::domain_error("pure_ball_radius: no usable t within the probe range "
                              "(coefficient growth still accelerating)");
  }
  out.t = 0.5 / r_max;
  if (out.t < 1e-12)
    throw std::domain_error("pure_ball_radius: no usable t within the probe range");
  out.m = 0.0;
  for (int k = 1; k <= wf.degree(); ++k)
    out.m += degree_l1[static_cast<std::size_t>(k)] * std::pow(out.t, k);
  out.omega = std::min(0.5 / out.m, 0.99);
  out.epsilon = std::sqrt(out.omega * out.t);
  return out;
}

BerezinKernel berezin_kernel(const WeightFamily& wf, const OperatorTuple& t, int fock_degree,
                             int degree_cap, double tol) {
  if (fock_degree > wf.degree())
    throw std::invalid_argument("berezin_kernel: fock_degree exceeds the weight degree");
  const DefectResult dr = defect(wf, t, degree_cap, tol);
  if (!dr.converged) throw convergence_error("berezin_kernel: defect series did not converge");

  Eigen::SelfAdjointEigenSolver<Matrix> es(dr.delta);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double norm_delta =
      ev.size() > 0 ? std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff())) : 0.0;
  if (ev.size() > 0 && ev.minCoeff() < -tol)
    throw std::domain_error("berezin_kernel: defect has an eigenvalue below -tol (not in domain)");

  // Relative rank threshold with an absolute floor at tol, so a numerically
  // zero defect (Cuntz tuple) yields rank 0 rather than noise eigenvectors.
  const double threshold = std::max(1e-10 * norm_delta, tol);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > threshold) kept.push_back(i);

  BerezinKernel out;
  out.fock_degree = fock_degree;
  out.rank = static_cast<Eigen::Index>(kept.size());
  out.defect_basis = Matrix(t.dim(), out.rank);
  Eigen::VectorXd kept_ev(out.rank);
  for (Eigen::Index j = 0; j < out.rank; ++j) {
    out.defect_basis.col(j) = es.eigenvectors().col(kept[static_cast<std::size_t>(j)]);
    kept_ev(j) = ev(kept[static_cast<std::size_t>(j)]);
  }
  out.sqrt_delta = out.defect_basis * kept_ev.cwiseSqrt().asDiagonal() * out.defect_basis.adjoint();

  const TruncatedFock fock(wf.n(), fock_degree);
  out.k = Matrix::Zero(fock.dim * out.rank, t.dim());
  if (out.rank == 0) return out;
  // Row block at alpha: sqrt(b_alpha) * diag(sqrt(eigenvalues)) * E^* * T_alpha^*.
  const Matrix scaled_basis = kept_ev.cwiseSqrt().asDiagonal() * out.defect_basis.adjoint();
  for_each_word_operator(t, fock_degree, [&](const Word& alpha, const Matrix& ta) {
    const auto row = static_cast<Eigen::Index>(word_index(alpha, wf.n())) * out.rank;
    out.k.block(row, 0, out.rank, t.dim()) =
        std::sqrt(wf.b(alpha)) * (scaled_basis * ta.adjoint());
  });
  return out;
}

double intertwining_residual(const WeightFamily& wf, const OperatorTuple& t,
                             const BerezinKernel& kernel) {
  if (kernel.rank == 0) return 0.0;
  const int N = kernel.fock_degree;
  const TruncatedFock fock(wf.n(), N);
  const OperatorTuple w = build_W(wf, N);
  const Eigen::Index interior_rows = fock.offset(N) * kernel.rank;
  double residual = 0.0;
  for (int i = 0; i < wf.n(); ++i) {
    const Matrix lhs = kernel.k * t[i].adjoint();
    const Matrix rhs = kron(w[i].adjoint(), Matrix::Identity(kernel.rank, kernel.rank)) * kernel.k;
    residual = std::max(residual, operator_norm((lhs - rhs).topRows(interior_rows)));
  }
  return residual;
}

double model_transfer_check(const WeightFamily& wf, const OperatorTuple& t,
                            const BerezinKernel& kernel,
                            const std::vector<std::pair<Word, Word>>& pairs, double pure_tol) {
  const Matrix gram = kernel.k.adjoint() * kernel.k;
  if (operator_norm(gram - Matrix::Identity(t.dim(), t.dim())) > pure_tol)
    throw std::domain_error("model_transfer_check: kernel is not isometric (tuple not pure)");
  const OperatorTuple w = build_W(wf, kernel.fock_degree);
  const Matrix id_r = Matrix::Identity(kernel.rank, kernel.rank);
  double residual = 0.0;
  for (const auto& [alpha, beta] : pairs) {
    const Matrix lhs = t.word_operator(alpha) * t.word_operator(beta).adjoint();
    const Matrix mid = w.word_operator(alpha) * w.word_operator(beta).adjoint();
    const Matrix rhs = kernel.k.adjoint() * kron(mid, id_r) * kernel.k;
    residual = std::max(residual, operator_norm(lhs - rhs));
  }
  return residual;
}

std::vector<VonNeumannPair> von_neumann_check(const WeightFamily& wf, const OperatorTuple& t,
                                              const std::vector<std::vector<WordPairCoeff>>& sets,
                                              int degree_cap, double tol, double pure_tol) {
  const Classification cls = classify(wf, t, degree_cap, tol, {}, pure_tol);
  if (!cls.converged || cls.pure_residual > pure_tol)
    throw std::domain_error("von_neumann_check: tuple is not pure within tolerance");
  const OperatorTuple w = build_W(wf, wf.degree());

  int max_deg = 0;
  for (const auto& set : sets)
    for (const auto& term : set)
      max_deg = std::max({max_deg, static_cast<int>(term.alpha.size()),
                          static_cast<int>(term.beta.size())});
  const WordOpCache tc = build_cache(t, max_deg);
  const WordOpCache wc = build_cache(w, max_deg);
  const auto index_of = [&](const Word& word) {
    return static_cast<std::size_t>(word_index(word, wf.n()));
  };

  std::vector<VonNeumannPair> out;
  out.reserve(sets.size());
  for (const auto& set : sets) {
    // p(X, X^*) = sum_a X_a (sum_b d_ab X_b^*): one product per left word.
    const auto assemble = [&](const WordOpCache& cache) {
      const Eigen::Index d = cache.tuple->dim();
      std::vector<Matrix> right(cache.ops.size());
      std::vector<bool> used(cache.ops.size(), false);
      for (const auto& term : set) {
        const std::size_t ia = index_of(term.alpha);
        if (!used[ia]) {
          right[ia] = Matrix::Zero(d, d);
          used[ia] = true;
        }
        right[ia].noalias() += term.d * cache.ops[index_of(term.beta)].adjoint();
      }
      Matrix p = Matrix::Zero(d, d);
      for (std::size_t ia = 0; ia < right.size(); ++ia)
        if (used[ia]) p.noalias() += cache.ops[ia] * right[ia];
      return p;
    };
    out.push_back({operator_norm(assemble(tc)), operator_norm(assemble(wc))});
  }
  return out;
}

}  // namespace ncfock
