#include "ncfock/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace ncfock {

TruncatedFock::TruncatedFock(int n_, int degree_) : n(n_), degree(degree_) {
  if (n < 1 || degree < 0) throw std::invalid_argument("TruncatedFock: bad arguments");
  dim = static_cast<Eigen::Index>(truncation_dim(n, degree));
}

Eigen::Index TruncatedFock::offset(int k) const {
  if (k < 0 || k > degree + 1) throw std::out_of_range("TruncatedFock::offset");
  return static_cast<Eigen::Index>(degree_offset(n, k));
}

Eigen::Index TruncatedFock::block_size(int k) const {
  return static_cast<Eigen::Index>(words_at_degree(n, k));
}

int TruncatedFock::degree_of_index(Eigen::Index i) const {
  if (i < 0 || i >= dim) throw std::out_of_range("TruncatedFock::degree_of_index");
  int k = 0;
  while (offset(k + 1) <= i) ++k;
  return k;
}

OperatorTuple::OperatorTuple(int n, Eigen::Index dim) : dim_(dim) {
  if (n < 1 || dim < 0) throw std::invalid_argument("OperatorTuple: bad arguments");
  matrices_.assign(static_cast<std::size_t>(n), Matrix::Zero(dim, dim));
}

OperatorTuple::OperatorTuple(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw std::invalid_argument("OperatorTuple: empty tuple");
  dim_ = matrices_.front().rows();
  for (const Matrix& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("OperatorTuple: matrices must be square with a common dimension");
  }
}

Matrix OperatorTuple::word_operator(const Word& alpha) const {
  check_word(alpha, n());
  Matrix out = Matrix::Identity(dim_, dim_);
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it)
    out = matrices_[static_cast<std::size_t>(*it - 1)] * out;
  return out;
}

OperatorTuple OperatorTuple::compress(const Matrix& basis) const {
  std::vector<Matrix> out;
  out.reserve(matrices_.size());
  for (const Matrix& m : matrices_) out.push_back(basis.adjoint() * m * basis);
  return OperatorTuple(std::move(out));
}

OperatorTuple OperatorTuple::direct_sum(const OperatorTuple& other) const {
  if (other.n() != n()) throw std::invalid_argument("direct_sum: generator count mismatch");
  std::vector<Matrix> out;
  for (int i = 0; i < n(); ++i) {
    Matrix m = Matrix::Zero(dim_ + other.dim_, dim_ + other.dim_);
    m.topLeftCorner(dim_, dim_) = matrices_[static_cast<std::size_t>(i)];
    m.bottomRightCorner(other.dim_, other.dim_) = other.matrices_[static_cast<std::size_t>(i)];
    out.push_back(std::move(m));
  }
  return OperatorTuple(std::move(out));
}

OperatorTuple OperatorTuple::tensor_identity(Eigen::Index k) const {
  std::vector<Matrix> out;
  const Matrix id = Matrix::Identity(k, k);
  for (const Matrix& m : matrices_) out.push_back(kron(m, id));
  return OperatorTuple(std::move(out));
}

OperatorTuple OperatorTuple::scaled(double r) const {
  std::vector<Matrix> out;
  for (const Matrix& m : matrices_) out.push_back(r * m);
  return OperatorTuple(std::move(out));
}

OperatorTuple build_W(const WeightFamily& wf, int N) {
  if (N > wf.degree()) throw std::invalid_argument("build_W: weight degree insufficient");
  const TruncatedFock fock(wf.n(), N);
  OperatorTuple w(wf.n(), fock.dim);
  for (int k = 0; k < N; ++k) {
    for_each_word(wf.n(), k, [&](const Word& alpha) {
      const auto col = static_cast<Eigen::Index>(word_index(alpha, wf.n()));
      for (int i = 1; i <= wf.n(); ++i) {
        const Word up = concat(Word{i}, alpha);
        const auto row = static_cast<Eigen::Index>(word_index(up, wf.n()));
        w[i - 1](row, col) = std::sqrt(wf.b(alpha) / wf.b(up));
      }
    });
  }
  return w;
}

OperatorTuple build_Lambda(const WeightFamily& wf, int N) {
  if (N > wf.degree()) throw std::invalid_argument("build_Lambda: weight degree insufficient");
  const TruncatedFock fock(wf.n(), N);
  OperatorTuple lam(wf.n(), fock.dim);
  for (int k = 0; k < N; ++k) {
    for_each_word(wf.n(), k, [&](const Word& alpha) {
      const auto col = static_cast<Eigen::Index>(word_index(alpha, wf.n()));
      for (int i = 1; i <= wf.n(); ++i) {
        const Word up = concat(alpha, Word{i});
        const auto row = static_cast<Eigen::Index>(word_index(up, wf.n()));
        lam[i - 1](row, col) = std::sqrt(wf.b(alpha) / wf.b(up));
      }
    });
  }
  return lam;
}

Matrix grading_projection(const TruncatedFock& fock, int p) {
  if (p < 0 || p > fock.degree) throw std::out_of_range("grading_projection: p out of range");
  Matrix q = Matrix::Zero(fock.dim, fock.dim);
  const Eigen::Index off = fock.offset(p);
  for (Eigen::Index i = 0; i < fock.block_size(p); ++i) q(off + i, off + i) = 1.0;
  return q;
}

void for_each_word_operator(const OperatorTuple& t, int cap,
                            const std::function<void(const Word&, const Matrix&)>& fn) {
  const int n = t.n();
  std::vector<Matrix> prev{Matrix::Identity(t.dim(), t.dim())};
  fn(Word{}, prev.front());
  std::vector<Word> prev_words{Word{}};
  for (int k = 1; k <= cap; ++k) {
    std::vector<Matrix> cur;
    std::vector<Word> cur_words;
    cur.reserve(prev.size() * static_cast<std::size_t>(n));
    cur_words.reserve(prev.size() * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < prev.size(); ++j) {
        cur.push_back(t[i - 1] * prev[j]);
        cur_words.push_back(concat(Word{i}, prev_words[j]));
        fn(cur_words.back(), cur.back());
      }
    }
    prev = std::move(cur);
    prev_words = std::move(cur_words);
  }
}

Matrix model_defect(const WeightFamily& wf, int N) {
  const OperatorTuple w = build_W(wf, N);
  Matrix acc = Matrix::Zero(w.dim(), w.dim());
  for_each_word_operator(w, N, [&](const Word& beta, const Matrix& wb) {
    acc += wf.a(beta) * (wb * wb.adjoint());
  });
  return acc;
}

Matrix model_defect_structured(const WeightFamily& wf, int N) {
  const TruncatedFock fock(wf.n(), N);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(fock.dim);
  // W_beta W_beta^* is diagonal: entry b_gamma / b_alpha at alpha = beta gamma.
  for (Eigen::Index idx = 0; idx < fock.dim; ++idx) {
    const Word alpha = index_word(idx, wf.n());
    double acc = 0.0;
    for (std::size_t cut = 0; cut <= alpha.size(); ++cut) {
      const Word beta(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(cut));
      const Word gamma(alpha.begin() + static_cast<std::ptrdiff_t>(cut), alpha.end());
      acc += wf.a(beta) * wf.b(gamma);
    }
    diag(idx) = acc / wf.b(alpha);
  }
  Matrix out = Matrix::Zero(fock.dim, fock.dim);
  out.diagonal() = diag.cast<cplx>();
  return out;
}

Matrix model_completeness(const WeightFamily& wf, int N) {
  const OperatorTuple w = build_W(wf, N);
  Matrix p = Matrix::Zero(w.dim(), w.dim());
  p(0, 0) = 1.0;
  Matrix acc = Matrix::Zero(w.dim(), w.dim());
  for_each_word_operator(w, N, [&](const Word& alpha, const Matrix& wa) {
    acc += wf.b(alpha) * (wa * p * wa.adjoint());
  });
  return acc;
}

Matrix model_completeness_structured(const WeightFamily& wf, int N) {
  const TruncatedFock fock(wf.n(), N);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(fock.dim);
  // W_alpha e_{g_0} is supported on e_alpha with coefficient 1/sqrt(b_alpha).
  for (Eigen::Index idx = 0; idx < fock.dim; ++idx) {
    const Word alpha = index_word(idx, wf.n());
    double c = 1.0;
    Word built;
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
      const Word up = concat(Word{*it}, built);
      c *= std::sqrt(wf.b(built) / wf.b(up));
      built = up;
    }
    diag(idx) = wf.b(alpha) * c * c;
  }
  Matrix out = Matrix::Zero(fock.dim, fock.dim);
  out.diagonal() = diag.cast<cplx>();
  return out;
}

Matrix diag_compactness_matrix(const WeightFamily& wf, int N, int i) {
  if (i < 1 || i > wf.n()) throw std::invalid_argument("diag_compactness_matrix: bad generator");
  const OperatorTuple w = build_W(wf, N);
  Matrix acc = w[i - 1].adjoint() * w[i - 1];
  for (int p = 0; p < wf.n(); ++p) acc -= w[p] * w[p].adjoint();
  return acc;
}

}  // namespace ncfock
