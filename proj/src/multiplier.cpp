#include "ncfock/multiplier.hpp"

#include <cmath>

#include "ncfock/hardy.hpp"

namespace ncfock {

MultiplierSymbol::MultiplierSymbol(int n_, int degree_, Eigen::Index e1_, Eigen::Index e2_)
    : n(n_), degree(degree_), e1(e1_), e2(e2_) {
  if (n < 1 || degree < 0 || e1 < 1 || e2 < 1)
    throw std::invalid_argument("MultiplierSymbol: bad arguments");
  terms.assign(static_cast<std::size_t>(truncation_dim(n, degree)), Matrix::Zero(e2, e1));
}

const Matrix& MultiplierSymbol::term(const Word& alpha) const {
  return terms[static_cast<std::size_t>(word_index(alpha, n))];
}

Matrix& MultiplierSymbol::term(const Word& alpha) {
  return terms[static_cast<std::size_t>(word_index(alpha, n))];
}

Matrix u_g(const WeightFamily& wf, int N) {
  if (N > wf.degree()) throw std::invalid_argument("u_g: weight degree insufficient");
  const TruncatedFock fock(wf.n(), N);
  Matrix out = Matrix::Zero(fock.dim, fock.dim);
  for (Eigen::Index i = 0; i < fock.dim; ++i)
    out(i, i) = std::sqrt(wf.b_at(static_cast<std::int64_t>(i)));
  return out;
}

OperatorTuple build_L(const WeightFamily& wf, int N) { return build_W(wf, N); }

OperatorTuple build_R(const WeightFamily& wf, int N) { return build_Lambda(wf, N); }

Vector apply_right_multiplier(const MultiplierSymbol& phi, const Vector& zeta,
                              const WeightFamily& g, const WeightFamily& f, int N) {
  if (g.n() != phi.n || f.n() != phi.n)
    throw std::invalid_argument("apply_right_multiplier: generator count mismatch");
  const TruncatedFock fock(phi.n, N);
  if (zeta.size() != fock.dim * phi.e1)
    throw std::invalid_argument("apply_right_multiplier: vector dimension mismatch");
  Vector out = Vector::Zero(fock.dim * phi.e2);
  for (Eigen::Index bi = 0; bi < fock.dim; ++bi) {
    const Word beta = index_word(bi, phi.n);
    // Z-coefficient of zeta at beta in the orthonormal storage convention.
    const Vector h = std::sqrt(g.b_at(bi)) * zeta.segment(bi * phi.e1, phi.e1);
    const int room = N - static_cast<int>(beta.size());
    for (int ka = 0; ka <= std::min(room, phi.degree); ++ka) {
      for_each_word(phi.n, ka, [&](const Word& alpha) {
        const Matrix& a = phi.term(alpha);
        if (a.isZero(0.0)) return;
        const Word gamma = concat(beta, alpha);
        const auto gi = static_cast<Eigen::Index>(word_index(gamma, phi.n));
        out.segment(gi * phi.e2, phi.e2) +=
            (a * h) / std::sqrt(f.b_at(static_cast<std::int64_t>(gi)));
      });
    }
  }
  return out;
}

Matrix right_multiplier_matrix(const MultiplierSymbol& phi, const WeightFamily& g,
                               const WeightFamily& f, int N) {
  const TruncatedFock fock(phi.n, N);
  Matrix out = Matrix::Zero(fock.dim * phi.e2, fock.dim * phi.e1);
  for (Eigen::Index bi = 0; bi < fock.dim; ++bi) {
    const Word beta = index_word(bi, phi.n);
    const int room = N - static_cast<int>(beta.size());
    for (int ka = 0; ka <= std::min(room, phi.degree); ++ka) {
      for_each_word(phi.n, ka, [&](const Word& alpha) {
        const Matrix& a = phi.term(alpha);
        if (a.isZero(0.0)) return;
        const Word gamma = concat(beta, alpha);
        const auto gi = static_cast<Eigen::Index>(word_index(gamma, phi.n));
        const double scale =
            std::sqrt(g.b_at(static_cast<std::int64_t>(bi)) / f.b_at(static_cast<std::int64_t>(gi)));
        out.block(gi * phi.e2, bi * phi.e1, phi.e2, phi.e1) += scale * a;
      });
    }
  }
  return out;
}

namespace {

// Interior block (rows and columns of degree < N) of a two-sided graded map.
Matrix interior_block(const Matrix& m, const TruncatedFock& fock, Eigen::Index e_row,
                      Eigen::Index e_col) {
  const Eigen::Index rows = fock.offset(fock.degree) * e_row;
  const Eigen::Index cols = fock.offset(fock.degree) * e_col;
  return m.topLeftCorner(rows, cols);
}

double masked_intertwining_residual(const Matrix& x, const OperatorTuple& tg,
                                    const OperatorTuple& tf, const TruncatedFock& fock,
                                    Eigen::Index e1, Eigen::Index e2) {
  const Matrix id1 = Matrix::Identity(e1, e1);
  const Matrix id2 = Matrix::Identity(e2, e2);
  double residual = 0.0;
  for (int i = 0; i < tg.n(); ++i) {
    const Matrix c = x * kron(tg[i], id1) - kron(tf[i], id2) * x;
    residual = std::max(residual, operator_norm(interior_block(c, fock, e2, e1)));
  }
  return residual;
}

}  // namespace

SymbolRecovery symbol_from_commutant(const Matrix& x, const WeightFamily& g,
                                     const WeightFamily& f, Eigen::Index e1, Eigen::Index e2,
                                     double tol) {
  if (g.n() != f.n()) throw std::invalid_argument("symbol_from_commutant: generator mismatch");
  const int N = infer_fock_degree(g.n(), x.cols(), e1);
  const TruncatedFock fock(g.n(), N);
  if (x.rows() != fock.dim * e2)
    throw std::invalid_argument("symbol_from_commutant: row dimension mismatch");

  const OperatorTuple lg = build_L(g, N);
  const OperatorTuple lf = build_L(f, N);
  const double inter = masked_intertwining_residual(x, lg, lf, fock, e1, e2);
  if (inter > tol)
    throw std::domain_error("symbol_from_commutant: X does not intertwine the left multiplications");

  SymbolRecovery out{MultiplierSymbol(g.n(), N, e1, e2), inter, 0.0};
  // X(1 (x) h) = sum_gamma Z_gamma (x) A_(gamma) h; the g_0 column block of X
  // carries A_(gamma) / sqrt(b^f_gamma).
  for (Eigen::Index gi = 0; gi < fock.dim; ++gi) {
    out.symbol.terms[static_cast<std::size_t>(gi)] =
        std::sqrt(f.b_at(static_cast<std::int64_t>(gi))) * x.block(gi * e2, 0, e2, e1);
  }
  const Matrix rebuilt = right_multiplier_matrix(out.symbol, g, f, N);
  out.reconstruction_residual = operator_norm(interior_block(x - rebuilt, fock, e2, e1));
  return out;
}

HatXResult hatX_conjugate(const Matrix& x, const WeightFamily& g, const WeightFamily& f,
                          Eigen::Index e1, Eigen::Index e2, double tol) {
  const int N = infer_fock_degree(g.n(), x.cols(), e1);
  const TruncatedFock fock(g.n(), N);
  if (x.rows() != fock.dim * e2) throw std::invalid_argument("hatX_conjugate: row mismatch");
  const OperatorTuple wg = build_W(g, N);
  const OperatorTuple wn = build_W(f, N);
  HatXResult out;
  // Orthonormal F^2(g) coordinates are the Fock coordinates transported by
  // U_g, so the conjugated matrix is numerically identical.
  out.hat_x = x;
  out.w_intertwining_residual = masked_intertwining_residual(x, wg, wn, fock, e1, e2);
  if (out.w_intertwining_residual > tol)
    throw std::domain_error("hatX_conjugate: X is not multi-analytic for the universal models");
  return out;
}

}  // namespace ncfock
