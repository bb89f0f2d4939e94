#include "ncfock/wold.hpp"

#include <cmath>

namespace ncfock {

namespace {

BerezinKernel gated_kernel(const WeightFamily& wf, const OperatorTuple& v, int degree_cap,
                           double tol, double gate_tol, double* gate_residual) {
  BerezinKernel kernel = berezin_kernel(wf, v, wf.degree(), degree_cap, tol);
  const Matrix kk = kernel.k.adjoint() * kernel.k;
  const double gate = operator_norm(kk * kk - kk);
  if (gate_residual) *gate_residual = gate;
  if (gate > gate_tol)
    throw std::domain_error("wold: Berezin kernel fails the partial-isometry gate "
                            "(not representation-type)");
  return kernel;
}

}  // namespace

Matrix wandering_space(const OperatorTuple& v, double threshold_rel) {
  Matrix stacked(v.dim(), v.dim() * v.n());
  for (int i = 0; i < v.n(); ++i)
    stacked.middleCols(v.dim() * i, v.dim()) = v[i];
  const Matrix range = range_basis(stacked, threshold_rel);
  // Orthogonal complement of the joint range.
  const Matrix proj = Matrix::Identity(v.dim(), v.dim()) - range * range.adjoint();
  return range_basis(proj, threshold_rel);
}

Matrix k1_characterization(const WeightFamily& wf, const OperatorTuple& v, int cap,
                           int degree_cap, double tol, double threshold_rel) {
  const DefectResult dr = defect(wf, v, degree_cap, tol);
  if (!dr.converged) throw convergence_error("k1_characterization: defect did not converge");
  const auto word_count = static_cast<Eigen::Index>(truncation_dim(wf.n(), cap));
  Matrix stacked(word_count * v.dim(), v.dim());
  Eigen::Index row = 0;
  for_each_word_operator(v, cap, [&](const Word&, const Matrix& va) {
    stacked.middleRows(row, v.dim()) = dr.delta * va.adjoint();
    row += v.dim();
  });
  return kernel_basis(stacked, threshold_rel);
}

WoldDecomposition wold_decompose(const WeightFamily& wf, const OperatorTuple& v, int degree_cap,
                                 double tol, double gate_tol, double threshold_rel) {
  WoldDecomposition out;
  const BerezinKernel kernel =
      gated_kernel(wf, v, degree_cap, tol, gate_tol, &out.gate_residual);

  // K^(0) = range K^*, K^(1) = ker K, split by singular-value threshold.
  out.kk_singular_values = singular_values(kernel.k);
  const double sigma_max = out.kk_singular_values.size() > 0 ? out.kk_singular_values(0) : 0.0;
  out.threshold = threshold_rel * sigma_max;
  out.basis_k0 = range_basis(kernel.k.adjoint(), threshold_rel);
  out.basis_k1 = kernel_basis(kernel.k, threshold_rel);

  const Matrix p0 = out.basis_k0 * out.basis_k0.adjoint();
  for (int i = 0; i < v.n(); ++i)
    out.reducing_residuals.push_back(operator_norm(p0 * v[i] - v[i] * p0));

  if (out.basis_k0.cols() > 0) {
    out.v_on_k0 = v.compress(out.basis_k0);
    const Classification c0 = classify(wf, out.v_on_k0, degree_cap, tol, {});
    out.pure_residual_k0 = c0.pure_residual;
  }
  if (out.basis_k1.cols() > 0) {
    out.v_on_k1 = v.compress(out.basis_k1);
    const Classification c1 = classify(wf, out.v_on_k1, degree_cap, tol, {});
    out.cuntz_residual_k1 = c1.cuntz_residual;
  }

  const Matrix k1_alt = k1_characterization(wf, v, wf.degree(), degree_cap, tol, threshold_rel);
  out.k1_cross_residual = subspace_gap(out.basis_k1, k1_alt);

  out.wandering_basis = wandering_space(v, threshold_rel);
  const DefectResult dr = defect(wf, v, degree_cap, tol);
  const Matrix defect_range = range_basis(dr.delta, threshold_rel);
  out.wandering_vs_defect_gap = subspace_gap(out.wandering_basis, defect_range);
  return out;
}

K0Expansion k0_orthogonal_expansion(const WeightFamily& wf, const OperatorTuple& v, int cap,
                                    int degree_cap, double tol, double threshold_rel) {
  K0Expansion out;
  double gate = 0.0;
  const BerezinKernel kernel = gated_kernel(wf, v, degree_cap, tol, 1e-8, &gate);
  const Matrix wandering = wandering_space(v, threshold_rel);

  std::vector<Matrix> raw;
  for_each_word_operator(v, cap, [&](const Word&, const Matrix& va) {
    const Matrix image = va * wandering;
    raw.push_back(range_basis(image, threshold_rel));
  });
  out.subspaces = raw;

  // Pairwise orthogonality across distinct words.
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (raw[i].cols() == 0 || raw[j].cols() == 0) continue;
      const Matrix cross = raw[i].adjoint() * raw[j];
      out.max_cross_inner = std::max(out.max_cross_inner, cross.cwiseAbs().maxCoeff());
    }
  }

  // Span of all V_alpha D against K^(0) = range K^*.
  Eigen::Index total = 0;
  for (const Matrix& m : raw) total += m.cols();
  Matrix stacked(v.dim(), total);
  Eigen::Index col = 0;
  for (const Matrix& m : raw) {
    stacked.middleCols(col, m.cols()) = m;
    col += m.cols();
  }
  const Matrix span = range_basis(stacked, threshold_rel);
  const Matrix k0 = range_basis(kernel.k.adjoint(), threshold_rel);
  out.span_gap = subspace_gap(span, k0);
  return out;
}

}  // namespace ncfock
