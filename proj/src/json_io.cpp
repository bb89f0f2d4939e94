#include "ncfock/json_io.hpp"

namespace ncfock {

json word_to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("word JSON must be an array of 1-based letters");
  Word w = j.get<Word>();
  check_word(w, n);
  return w;
}

json series_to_json(const FreeSeries& s) {
  json terms = json::array();
  for (std::int64_t i = 0; i < s.size(); ++i) {
    const cplx c = s.coeff_at(i);
    if (c == cplx(0.0, 0.0)) continue;
    terms.push_back({{"word", word_to_json(index_word(i, s.n()))},
                     {"re", c.real()},
                     {"im", c.imag()}});
  }
  return json{{"n", s.n()}, {"degree", s.degree()}, {"terms", std::move(terms)}};
}

FreeSeries series_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const int degree = j.at("degree").get<int>();
  FreeSeries s(n, degree);
  for (const auto& term : j.at("terms")) {
    const Word w = word_from_json(term.at("word"), n);
    if (static_cast<int>(w.size()) > degree)
      throw std::invalid_argument("series JSON: term beyond the declared degree");
    s.set_coeff(w, cplx(term.at("re").get<double>(),
                        term.value("im", 0.0)));
  }
  return s;
}

json weights_to_json(const WeightFamily& wf) {
  json j{{"kind", to_string(wf.kind())}, {"n", wf.n()}, {"degree", wf.degree()}};
  if (wf.s_param()) j["s"] = *wf.s_param();
  if (wf.phi()) j["phi"] = series_to_json(*wf.phi());
  if (wf.kind() == WeightKind::table) j["b"] = series_to_json(wf.b_series());
  return j;
}

WeightFamily weights_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int n = j.at("n").get<int>();
  const int degree = j.at("degree").get<int>();
  if (kind == "bergman") return WeightFamily::bergman(n, j.at("s").get<double>(), degree);
  if (kind == "dirichlet") return WeightFamily::dirichlet(n, j.at("s").get<double>(), degree);
  if (kind == "psi")
    return WeightFamily::psi(series_from_json(j.at("phi")), j.at("s").get<double>(), degree);
  if (kind == "table") {
    FreeSeries b = series_from_json(j.at("b"));
    if (b.n() != n || b.degree() != degree)
      throw std::invalid_argument("weights JSON: table dimensions disagree with header");
    return WeightFamily::from_table(b);
  }
  throw std::invalid_argument("weights JSON: unknown kind '" + kind + "'");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(i, c).real(), m(i, c).imag()}));
    rows.push_back(std::move(row));
  }
  json j{{"dim", m.rows()}, {"rows", std::move(rows)}};
  if (m.rows() != m.cols()) j["cols"] = m.cols();
  return j;
}

Matrix matrix_from_json(const json& j) {
  const auto& rows = j.at("rows");
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r > 0 ? static_cast<Eigen::Index>(rows.at(0).size()) : 0;
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw std::invalid_argument("matrix JSON: ragged rows");
    for (Eigen::Index k = 0; k < c; ++k) {
      const auto& entry = row.at(static_cast<std::size_t>(k));
      m(i, k) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != r)
    throw std::invalid_argument("matrix JSON: dim disagrees with rows");
  return m;
}

json tuple_to_json(const OperatorTuple& t) {
  json mats = json::array();
  for (int i = 0; i < t.n(); ++i) mats.push_back(matrix_to_json(t[i]));
  return json{{"n", t.n()}, {"dim", t.dim()}, {"matrices", std::move(mats)}};
}

OperatorTuple tuple_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const auto dim = j.at("dim").get<Eigen::Index>();
  std::vector<Matrix> mats;
  for (const auto& mj : j.at("matrices")) mats.push_back(matrix_from_json(mj));
  if (static_cast<int>(mats.size()) != n)
    throw std::invalid_argument("tuple JSON: matrix count disagrees with n");
  OperatorTuple t(std::move(mats));
  if (t.dim() != dim) throw std::invalid_argument("tuple JSON: dim disagrees with matrices");
  return t;
}

json symbol_to_json(const MultiplierSymbol& s) {
  json terms = json::array();
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (s.terms[i].isZero(0.0)) continue;
    terms.push_back({{"word", word_to_json(index_word(static_cast<std::int64_t>(i), s.n))},
                     {"matrix", matrix_to_json(s.terms[i])}});
  }
  return json{{"n", s.n}, {"degree", s.degree}, {"e1", s.e1}, {"e2", s.e2},
              {"terms", std::move(terms)}};
}

MultiplierSymbol symbol_from_json(const json& j) {
  MultiplierSymbol s(j.at("n").get<int>(), j.at("degree").get<int>(),
                     j.at("e1").get<Eigen::Index>(), j.at("e2").get<Eigen::Index>());
  for (const auto& term : j.at("terms")) {
    const Word w = word_from_json(term.at("word"), s.n);
    const Matrix m = matrix_from_json(term.at("matrix"));
    if (m.rows() != s.e2 || m.cols() != s.e1)
      throw std::invalid_argument("symbol JSON: coefficient shape mismatch");
    s.term(w) = m;
  }
  return s;
}

json classification_to_json(const Classification& c) {
  json radial = json::array();
  for (const auto& pt : c.radial)
    radial.push_back({{"r", pt.r}, {"in_domain", pt.in_domain}, {"min_delta_eig", pt.min_delta_eig}});
  return json{{"in_domain", c.in_domain},
              {"pure_residual", c.pure_residual},
              {"cuntz_residual", c.cuntz_residual},
              {"min_delta_eig", c.min_delta_eig},
              {"radial", std::move(radial)},
              {"converged", c.converged},
              {"tolerances",
               {{"membership", c.tol_membership}, {"pure", c.tol_pure}, {"cuntz", c.tol_cuntz}}}};
}

}  // namespace ncfock
