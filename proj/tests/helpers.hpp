#pragma once

// Shared constructions for domain/wold/acceptance tests.

#include <random>

#include "ncfock/domain.hpp"

namespace helpers {

using namespace ncfock;

// Orthonormal basis of a random co-invariant subspace of t (x) I_e: the
// closure of seed vectors under every adjoint t_i^*. Adjoints lower the
// grading for creation-type tuples, so the closure terminates.
inline Matrix random_coinvariant_basis(const OperatorTuple& t, Eigen::Index e, int seeds,
                                       std::mt19937_64& rng) {
  const OperatorTuple big = e == 1 ? t : t.tensor_identity(e);
  std::vector<Vector> vecs;
  for (int i = 0; i < seeds; ++i) vecs.push_back(random_matrix(big.dim(), 1, rng).col(0));
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (int g = 0; g < big.n(); ++g) {
      Vector next = big[g].adjoint() * vecs[i];
      if (next.norm() > 1e-12) vecs.push_back(std::move(next));
    }
    if (vecs.size() > 4096) throw std::runtime_error("coinvariant closure did not terminate");
  }
  Matrix stacked(big.dim(), static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    stacked.col(static_cast<Eigen::Index>(i)) = vecs[i];
  return range_basis(stacked, 1e-12);
}

// Scalar tuple (1x1 matrices) from a list of complex numbers.
inline OperatorTuple scalar_tuple(const std::vector<cplx>& lambda) {
  std::vector<Matrix> mats;
  for (cplx l : lambda) {
    Matrix m(1, 1);
    m(0, 0) = l;
    mats.push_back(m);
  }
  return OperatorTuple(std::move(mats));
}

// The (1/sqrt(2), 1/sqrt(2)) * U Cuntz block used throughout.
inline OperatorTuple cuntz_halves(Eigen::Index dim, std::mt19937_64& rng) {
  const Matrix u = random_unitary(dim, rng);
  OperatorTuple out(2, dim);
  out[0] = u / std::sqrt(2.0);
  out[1] = u / std::sqrt(2.0);
  return out;
}

}  // namespace helpers
