#include <doctest.h>

#include <cmath>

#include "ncfock/hardy.hpp"
#include "ncfock/multiplier.hpp"
#include "oracles.hpp"

using namespace ncfock;

namespace {

MultiplierSymbol random_symbol(int n, int degree, Eigen::Index e1, Eigen::Index e2,
                               std::mt19937_64& rng) {
  MultiplierSymbol s(n, degree, e1, e2);
  for (auto& term : s.terms) term = random_matrix(e2, e1, rng);
  return s;
}

}  // namespace

TEST_CASE("u_g: diagonal entries and weighted unitarity") {
  const auto flat = WeightFamily::bergman(2, 1.0, 4);
  CHECK(operator_norm(u_g(flat, 4) - Matrix::Identity(31, 31)) == 0.0);

  const auto b2 = WeightFamily::bergman(2, 2.0, 4);
  const Matrix ug = u_g(b2, 4);
  CHECK(std::abs(ug(1, 1) - cplx(std::sqrt(2.0), 0)) < 1e-14);
  // Weighted adjoint is the inverse: U U^* = I holds as diag(sqrt b) diag(1/sqrt b).
  Matrix prod = Matrix::Identity(31, 31);
  for (Eigen::Index i = 0; i < 31; ++i) prod(i, i) = ug(i, i) * (1.0 / ug(i, i));
  CHECK(operator_norm(prod - Matrix::Identity(31, 31)) < 1e-14);
}

TEST_CASE("build_L/build_R realize the U_g conjugation of W and Lambda") {
  const auto wf = WeightFamily::bergman(2, 2.0, 4);
  const auto w = build_W(wf, 4);
  const auto lam = build_Lambda(wf, 4);
  const auto l = build_L(wf, 4);
  const auto r = build_R(wf, 4);
  for (int i = 0; i < 2; ++i) {
    CHECK(operator_norm(l[i] - w[i]) == 0.0);
    CHECK(operator_norm(r[i] - lam[i]) == 0.0);
  }
  // n = 1: left and right multiplications coincide.
  const auto one = WeightFamily::dirichlet(1, 1.0, 4);
  CHECK(operator_norm(build_L(one, 4)[0] - build_R(one, 4)[0]) == 0.0);
  // Norm of L_{Z_i} is the square root of the probed ratio sup.
  const auto sups = ratio_sups(wf);
  CHECK(operator_norm(l[0]) == doctest::Approx(std::sqrt(sups.left[0])).epsilon(1e-12));
}

TEST_CASE("apply_right_multiplier convolution") {
  const auto wf = WeightFamily::bergman(2, 1.5, 4);
  const TruncatedFock fock(2, 4);

  // phi = 1 (x) I acts as the identity.
  std::mt19937_64 rng(3);
  MultiplierSymbol unit(2, 0, 2, 2);
  unit.term(Word{}) = Matrix::Identity(2, 2);
  const Vector zeta = random_matrix(fock.dim * 2, 1, rng).col(0);
  CHECK((apply_right_multiplier(unit, zeta, wf, wf, 4) - zeta).norm() < 1e-13);

  // phi = Z_1 (x) I sends Z_2 (x) h to Z_2 Z_1 (x) h (right concatenation).
  MultiplierSymbol z1(2, 1, 1, 1);
  z1.term(Word{1}) = Matrix::Identity(1, 1);
  Vector e2 = Vector::Zero(fock.dim);
  e2(word_index(Word{2}, 2)) = 1.0;  // orthonormal coordinate of sqrt(b) Z_2
  const Vector image = apply_right_multiplier(z1, e2, wf, wf, 4);
  // Expected: sqrt(b_{g2}) Z_{g2 g1} in orthonormal coordinates.
  Vector expected = Vector::Zero(fock.dim);
  expected(word_index(Word{2, 1}, 2)) = std::sqrt(wf.b(Word{2}) / wf.b(Word{2, 1}));
  CHECK((image - expected).norm() < 1e-14);

  // Consistency with the assembled matrix on random data.
  const auto phi = random_symbol(2, 2, 2, 3, rng);
  const Matrix r_phi = right_multiplier_matrix(phi, wf, wf, 4);
  const Vector zeta2 = random_matrix(fock.dim * 2, 1, rng).col(0);
  CHECK((r_phi * zeta2 - apply_right_multiplier(phi, zeta2, wf, wf, 4)).norm() < 1e-12);

  CHECK_THROWS_AS(apply_right_multiplier(phi, Vector::Zero(5), wf, wf, 4),
                  std::invalid_argument);
}

TEST_CASE("right multipliers commute with left multiplications and vice versa") {
  std::mt19937_64 rng(5);
  const auto wf = WeightFamily::bergman(2, 2.0, 4);
  const auto l = build_L(wf, 4);
  const auto r = build_R(wf, 4);
  const TruncatedFock fock(2, 4);
  const Eigen::Index interior = fock.offset(4);

  const auto phi = random_symbol(2, 2, 1, 1, rng);
  const Matrix r_phi = right_multiplier_matrix(phi, wf, wf, 4);
  for (int i = 0; i < 2; ++i) {
    const Matrix c = r_phi * l[i] - l[i] * r_phi;
    CHECK(operator_norm(c.topLeftCorner(interior, interior)) < 1e-12);
  }
  // And the right multiplications themselves are the simplest right multipliers.
  for (int i = 0; i < 2; ++i) {
    MultiplierSymbol zi(2, 1, 1, 1);
    zi.term(Word{i + 1}) = Matrix::Identity(1, 1);
    CHECK(operator_norm(right_multiplier_matrix(zi, wf, wf, 4) - r[i]) < 1e-13);
  }
}

TEST_CASE("symbol_from_commutant: construct-then-recover round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto wf = WeightFamily::bergman(2, 1.5, 4);
    const auto phi = random_symbol(2, 3, 2, 2, rng);
    const Matrix r_phi = right_multiplier_matrix(phi, wf, wf, 4);
    const auto rec = symbol_from_commutant(r_phi, wf, wf, 2, 2, 1e-8);
    CHECK(rec.intertwining_residual < 1e-12);
    CHECK(rec.reconstruction_residual < 1e-10);
    for (std::size_t i = 0; i < phi.terms.size(); ++i) {
      if (static_cast<int>(index_word(static_cast<std::int64_t>(i), 2).size()) > 3) continue;
      CHECK((phi.terms[i] - rec.symbol.terms[i]).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("symbol_from_commutant: the right multiplication by Z_1 recovers Z_1 (x) I") {
  const auto wf = WeightFamily::bergman(2, 2.5, 4);
  const auto r = build_R(wf, 4);
  const auto rec = symbol_from_commutant(r[0], wf, wf, 1, 1, 1e-8);
  CHECK(rec.reconstruction_residual < 1e-12);
  CHECK(std::abs(rec.symbol.term(Word{1})(0, 0) - cplx(1, 0)) < 1e-12);
  double rest = 0.0;
  for (std::size_t i = 0; i < rec.symbol.terms.size(); ++i) {
    if (index_word(static_cast<std::int64_t>(i), 2) == Word{1}) continue;
    rest = std::max(rest, rec.symbol.terms[i].cwiseAbs().maxCoeff());
  }
  CHECK(rest < 1e-12);
}

TEST_CASE("symbol_from_commutant rejects non-multi-analytic input") {
  const auto wf = WeightFamily::bergman(2, 1.0, 4);
  const TruncatedFock fock(2, 4);
  CHECK_THROWS_AS(symbol_from_commutant(grading_projection(fock, 1), wf, wf, 1, 1, 1e-8),
                  std::domain_error);
  // Left multiplication by Z_1 does not commute with the left multiplications
  // when n >= 2, so it is rejected as well.
  const auto l = build_L(wf, 4);
  CHECK_THROWS_AS(symbol_from_commutant(l[0], wf, wf, 1, 1, 1e-8), std::domain_error);
}

TEST_CASE("cross-weight multipliers: g to f") {
  std::mt19937_64 rng(11);
  const auto g = WeightFamily::bergman(2, 1.0, 4);
  const auto f = WeightFamily::bergman(2, 2.0, 4);

  // phi = 1 (x) I becomes the diagonal rescaling sqrt(b^g / b^f).
  MultiplierSymbol unit(2, 0, 1, 1);
  unit.term(Word{}) = Matrix::Identity(1, 1);
  const Matrix x = right_multiplier_matrix(unit, g, f, 4);
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    CHECK(std::abs(x(i, i) - cplx(std::sqrt(g.b_at(i) / f.b_at(i)), 0)) < 1e-14);

  // Recovery works across weight families too.
  const auto phi = random_symbol(2, 2, 2, 2, rng);
  const Matrix r_phi = right_multiplier_matrix(phi, g, f, 4);
  const auto rec = symbol_from_commutant(r_phi, g, f, 2, 2, 1e-8);
  CHECK(rec.reconstruction_residual < 1e-10);
  for (std::size_t i = 0; i < phi.terms.size(); ++i) {
    if (static_cast<int>(index_word(static_cast<std::int64_t>(i), 2).size()) > 2) continue;
    CHECK((phi.terms[i] - rec.symbol.terms[i]).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hatX_conjugate verifies the W-intertwining") {
  std::mt19937_64 rng(13);
  const auto g = WeightFamily::bergman(2, 1.0, 4);
  const auto f = WeightFamily::bergman(2, 2.0, 4);

  // g = f, phi = 1: the identity.
  MultiplierSymbol unit(2, 0, 1, 1);
  unit.term(Word{}) = Matrix::Identity(1, 1);
  const auto id = hatX_conjugate(right_multiplier_matrix(unit, g, g, 4), g, g, 1, 1, 1e-8);
  CHECK(operator_norm(id.hat_x - Matrix::Identity(31, 31)) < 1e-13);
  CHECK(id.w_intertwining_residual < 1e-13);

  // Random symbols give multi-analytic Fock-side operators.
  const auto phi = random_symbol(2, 2, 2, 2, rng);
  const auto hat = hatX_conjugate(right_multiplier_matrix(phi, g, f, 4), g, f, 2, 2, 1e-8);
  CHECK(hat.w_intertwining_residual < 1e-10);

  // Rejection for non-multi-analytic input.
  const TruncatedFock fock(2, 4);
  CHECK_THROWS_AS(hatX_conjugate(grading_projection(fock, 1), g, g, 1, 1, 1e-8),
                  std::domain_error);
}
