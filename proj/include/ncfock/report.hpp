#pragma once

#include <cstdint>

#include "ncfock/json_io.hpp"

namespace ncfock {

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
  int degree_cap = -1;  // -1 means: use the weight degree
  double tol = 1e-10;
  double pure_tol = 1e-8;
  double cuntz_tol = 1e-10;
  std::vector<double> radial_grid{0.5, 0.7, 0.9, 0.99};
  std::uint64_t seed = 1;
};

/// Construct-and-dump report: the family, its inverse coefficients, and the
/// basic ratio data.
json weights_report(const WeightFamily& wf);

/// All admissibility probes (conditions (a), (b), (c)) plus the regularity,
/// ratio-monotonicity, sign-pattern and diagonal-decay checks.
json admissible_report(const WeightFamily& wf, const ReportOptions& opts = {});

/// Domain membership / pure / Cuntz / radial classification of a tuple.
json classify_report(const WeightFamily& wf, const OperatorTuple& t,
                     const ReportOptions& opts = {});

/// Berezin kernel diagnostics: rank, isometry defect, intertwining residual,
/// and the model-transfer residual over all word pairs of length <= 2.
json berezin_report(const WeightFamily& wf, const OperatorTuple& t,
                    const ReportOptions& opts = {});

/// Fourier/Cesaro/functional-calculus exercises on seeded random data.
json hardy_report(const WeightFamily& wf, const ReportOptions& opts = {});

/// Symbol recovery round trip; a seeded random symbol is used when none is
/// supplied. Also exercises the non-commutant rejection path.
json multiplier_report(const WeightFamily& wf, const MultiplierSymbol* symbol,
                       const ReportOptions& opts = {});

/// Wold decomposition report for a tuple.
json wold_report(const WeightFamily& wf, const OperatorTuple& t, const ReportOptions& opts = {});

/// Deterministic cross-module invariant suite.
json selftest_report(int n, int N, std::uint64_t seed);

/// True when every entry of report["checks"] passed (vacuously true for
/// reports without checks).
bool report_checks_pass(const json& report);

}  // namespace ncfock
