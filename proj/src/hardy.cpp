#include "ncfock/hardy.hpp"

#include <cmath>

namespace ncfock {

int infer_fock_degree(int n, Eigen::Index total_dim, Eigen::Index aux_dim) {
  if (aux_dim < 1 || total_dim % aux_dim != 0)
    throw std::invalid_argument("infer_fock_degree: dimension not divisible by aux_dim");
  const Eigen::Index fock_dim = total_dim / aux_dim;
  for (int N = 0; N <= 62; ++N) {
    const std::int64_t d = truncation_dim(n, N);
    if (d == fock_dim) return N;
    if (d > fock_dim) break;
  }
  throw std::invalid_argument("infer_fock_degree: dimension is not a Fock truncation size");
}

Matrix homogeneous_part(const TruncatedFock& fock, const Matrix& a, int s,
                        Eigen::Index aux_dim) {
  const Eigen::Index total = fock.dim * aux_dim;
  if (a.rows() != total || a.cols() != total)
    throw std::invalid_argument("homogeneous_part: matrix does not match the graded space");
  Matrix out = Matrix::Zero(total, total);
  for (int p = 0; p <= fock.degree; ++p) {
    const int q = s + p;
    if (q < 0 || q > fock.degree) continue;
    const Eigen::Index row = fock.offset(q) * aux_dim;
    const Eigen::Index col = fock.offset(p) * aux_dim;
    const Eigen::Index rows = fock.block_size(q) * aux_dim;
    const Eigen::Index cols = fock.block_size(p) * aux_dim;
    out.block(row, col, rows, cols) = a.block(row, col, rows, cols);
  }
  return out;
}

double cesaro_weight(int fock_degree, int nprime, int s) {
  const int m = std::max(2 * fock_degree + 1, nprime + 1);
  double w = 0.0;
  for (int j = -2; j <= 2; ++j) {
    const double freq = std::abs(static_cast<double>(s) + static_cast<double>(j) * m);
    w += std::max(0.0, 1.0 - freq / (nprime + 1));
  }
  return w;
}

Matrix cesaro_sum(const TruncatedFock& fock, const Matrix& a, int nprime, Eigen::Index aux_dim) {
  if (nprime < 0) throw std::invalid_argument("cesaro_sum: N' must be >= 0");
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  for (int s = -fock.degree; s <= fock.degree; ++s) {
    const double w = cesaro_weight(fock.degree, nprime, s);
    if (w == 0.0) continue;
    out += w * homogeneous_part(fock, a, s, aux_dim);
  }
  return out;
}

FreeSeries fourier_coefficients(const WeightFamily& wf, const Matrix& a) {
  const int N = infer_fock_degree(wf.n(), a.rows());
  if (N > wf.degree())
    throw std::invalid_argument("fourier_coefficients: weight degree insufficient");
  FreeSeries out(wf.n(), N);
  const Vector vacuum_column = a.col(0);
  for (std::int64_t i = 0; i < out.size(); ++i) {
    out.set_coeff_at(i, std::sqrt(wf.b_at(i)) * vacuum_column(static_cast<Eigen::Index>(i)));
  }
  return out;
}

double commutant_residual(const WeightFamily& wf, const Matrix& a) {
  const int N = infer_fock_degree(wf.n(), a.rows());
  const TruncatedFock fock(wf.n(), N);
  const OperatorTuple lam = build_Lambda(wf, N);
  const Eigen::Index interior = fock.offset(N);
  double residual = 0.0;
  for (int i = 0; i < wf.n(); ++i) {
    const Matrix c = a * lam[i] - lam[i] * a;
    residual = std::max(residual, operator_norm(c.topLeftCorner(interior, interior)));
  }
  return residual;
}

Matrix poly_of_tuple(const OperatorTuple& t, const FreeSeries& coeffs) {
  if (coeffs.n() != t.n()) throw std::invalid_argument("poly_of_tuple: generator count mismatch");
  Matrix out = Matrix::Zero(t.dim(), t.dim());
  for_each_word_operator(t, coeffs.degree(), [&](const Word& alpha, const Matrix& ta) {
    const cplx c = coeffs.coeff(alpha);
    if (c != cplx(0.0, 0.0)) out += c * ta;
  });
  return out;
}

Matrix radial_evaluate(const OperatorTuple& t, const FreeSeries& coeffs, double r) {
  Matrix out = Matrix::Zero(t.dim(), t.dim());
  for_each_word_operator(t, coeffs.degree(), [&](const Word& alpha, const Matrix& ta) {
    const cplx c = coeffs.coeff(alpha) * std::pow(r, static_cast<double>(alpha.size()));
    if (c != cplx(0.0, 0.0)) out += c * ta;
  });
  return out;
}

Matrix functional_calculus(const WeightFamily& wf, const OperatorTuple& t,
                           const FreeSeries& phi, int degree_cap, double tol, double pure_tol) {
  if (phi.degree() > wf.degree())
    throw std::invalid_argument("functional_calculus: phi degree exceeds the truncation");
  const BerezinKernel kernel = berezin_kernel(wf, t, wf.degree(), degree_cap, tol);
  const Matrix gram = kernel.k.adjoint() * kernel.k;
  if (operator_norm(gram - Matrix::Identity(t.dim(), t.dim())) > pure_tol)
    throw std::domain_error("functional_calculus: tuple is not pure within tolerance");
  const OperatorTuple w = build_W(wf, wf.degree());
  const Matrix phi_w = poly_of_tuple(w, phi.truncated(wf.degree()));
  const Matrix id_r = Matrix::Identity(kernel.rank, kernel.rank);
  return kernel.k.adjoint() * kron(phi_w, id_r) * kernel.k;
}

CesaroCalculus cesaro_calculus(const OperatorTuple& t, const FreeSeries& phi, int max_nprime) {
  CesaroCalculus out;
  // Homogeneous pieces H_s(T) = sum_{|alpha|=s} c_alpha T_alpha.
  std::vector<Matrix> parts(static_cast<std::size_t>(phi.degree()) + 1,
                            Matrix::Zero(t.dim(), t.dim()));
  for_each_word_operator(t, phi.degree(), [&](const Word& alpha, const Matrix& ta) {
    const cplx c = phi.coeff(alpha);
    if (c != cplx(0.0, 0.0)) parts[alpha.size()] += c * ta;
  });
  out.limit = Matrix::Zero(t.dim(), t.dim());
  for (const Matrix& p : parts) out.limit += p;
  for (int np = 0; np <= max_nprime; ++np) {
    Matrix sigma = Matrix::Zero(t.dim(), t.dim());
    for (int s = 0; s <= phi.degree() && s <= np; ++s)
      sigma += (1.0 - static_cast<double>(s) / (np + 1)) * parts[static_cast<std::size_t>(s)];
    out.sequence.push_back(std::move(sigma));
  }
  return out;
}

CncResult cnc_check(const WeightFamily& wf, const OperatorTuple& t, int fock_degree,
                    int degree_cap, double tol) {
  const BerezinKernel kernel = berezin_kernel(wf, t, fock_degree, degree_cap, tol);
  CncResult out;
  if (kernel.rank == 0) {
    out.sigma_min = 0.0;
    out.kernel_dim = t.dim();
    out.cnc = t.dim() == 0;
    out.threshold = 0.0;
    return out;
  }
  const Eigen::VectorXd sv = singular_values(kernel.k);
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  out.threshold = 1e-10 * sigma_max;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > out.threshold) ++rank;
  out.kernel_dim = t.dim() - rank;
  out.sigma_min = sv.size() == t.dim() ? sv(sv.size() - 1) : 0.0;
  out.cnc = out.kernel_dim == 0;
  return out;
}

}  // namespace ncfock
