#include <doctest.h>

#include "ncfock/json_io.hpp"
#include "ncfock/report.hpp"
#include "oracles.hpp"

using namespace ncfock;

TEST_CASE("word JSON uses 1-based letters") {
  CHECK(word_to_json(Word{1, 2, 2}).dump() == "[1,2,2]");
  CHECK(word_to_json(Word{}).dump() == "[]");
  CHECK(word_from_json(json::parse("[2,1]"), 2) == Word{2, 1});
  CHECK_THROWS(word_from_json(json::parse("[0]"), 2));
  CHECK_THROWS(word_from_json(json::parse("[3]"), 2));
}

TEST_CASE("series JSON round trip drops zero terms") {
  std::mt19937_64 rng(3);
  FreeSeries s(2, 3);
  s.set_coeff(Word{}, 1.0);
  s.set_coeff(Word{1, 2}, cplx(0.5, -0.25));
  const json j = series_to_json(s);
  CHECK(j.at("terms").size() == 2);
  const FreeSeries back = series_from_json(j);
  CHECK(back.n() == 2);
  CHECK(back.degree() == 3);
  for (std::int64_t i = 0; i < s.size(); ++i) CHECK(back.coeff_at(i) == s.coeff_at(i));

  // Terms beyond the declared degree are rejected.
  json bad = j;
  bad["terms"].push_back({{"word", json::array({1, 1, 1, 1})}, {"re", 1.0}, {"im", 0.0}});
  CHECK_THROWS(series_from_json(bad));
}

TEST_CASE("weights JSON carries the constructor") {
  const auto berg = WeightFamily::bergman(2, 2.5, 4);
  const json bj = weights_to_json(berg);
  CHECK(bj.at("kind") == "bergman");
  CHECK(bj.at("s") == 2.5);
  const auto back = weights_from_json(bj);
  CHECK(back.kind() == WeightKind::bergman);
  for (std::int64_t i = 0; i < berg.b_series().size(); ++i)
    CHECK(back.b_at(i) == berg.b_at(i));

  FreeSeries phi(2, 3);
  phi.set_coeff(Word{1}, 2.0);
  phi.set_coeff(Word{2}, 1.0);
  const auto psi = WeightFamily::psi(phi, 1.5, 3);
  const auto psi_back = weights_from_json(weights_to_json(psi));
  for (std::int64_t i = 0; i < psi.b_series().size(); ++i)
    CHECK(psi_back.b_at(i) == doctest::Approx(psi.b_at(i)).epsilon(1e-14));

  std::mt19937_64 rng(5);
  const auto table = WeightFamily::from_table(oracles::random_positive_series(2, 3, rng));
  const auto table_back = weights_from_json(weights_to_json(table));
  for (std::int64_t i = 0; i < table.b_series().size(); ++i)
    CHECK(table_back.b_at(i) == table.b_at(i));

  CHECK_THROWS(weights_from_json(json::parse(R"({"kind":"nope","n":2,"degree":3})")));
}

TEST_CASE("matrix and tuple JSON round trips") {
  std::mt19937_64 rng(7);
  const Matrix m = random_matrix(3, 3, rng);
  const json mj = matrix_to_json(m);
  CHECK(mj.at("dim") == 3);
  const Matrix back = matrix_from_json(mj);
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);

  // Rectangular matrices carry a cols field.
  const Matrix rect = random_matrix(2, 4, rng);
  const json rj = matrix_to_json(rect);
  CHECK(rj.at("cols") == 4);
  CHECK((matrix_from_json(rj) - rect).cwiseAbs().maxCoeff() == 0.0);

  OperatorTuple t(2, 3);
  t[0] = random_matrix(3, 3, rng);
  t[1] = random_matrix(3, 3, rng);
  const OperatorTuple tb = tuple_from_json(tuple_to_json(t));
  CHECK(tb.n() == 2);
  for (int i = 0; i < 2; ++i) CHECK((tb[i] - t[i]).cwiseAbs().maxCoeff() == 0.0);

  json bad = tuple_to_json(t);
  bad["dim"] = 4;
  CHECK_THROWS(tuple_from_json(bad));
}

TEST_CASE("symbol JSON round trip") {
  std::mt19937_64 rng(11);
  MultiplierSymbol s(2, 2, 2, 3);
  s.term(Word{1}) = random_matrix(3, 2, rng);
  s.term(Word{2, 1}) = random_matrix(3, 2, rng);
  const json j = symbol_to_json(s);
  CHECK(j.at("e1") == 2);
  CHECK(j.at("e2") == 3);
  CHECK(j.at("terms").size() == 2);
  const MultiplierSymbol back = symbol_from_json(j);
  for (std::size_t i = 0; i < s.terms.size(); ++i)
    CHECK((back.terms[i] - s.terms[i]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const auto a = selftest_report(2, 3, 7).dump();
  const auto b = selftest_report(2, 3, 7).dump();
  CHECK(a == b);
  const auto c = selftest_report(2, 3, 8).dump();
  CHECK(a != c);
}

TEST_CASE("selftest passes at small sizes") {
  const json rep = selftest_report(2, 3, 7);
  CHECK(rep.at("all_checks_pass").get<bool>());
  CHECK(report_checks_pass(rep));
}

TEST_CASE("classification JSON carries tolerances") {
  const auto wf = WeightFamily::bergman(2, 1.0, 6);
  const auto w = build_W(wf, 3);
  const json j = classify_report(wf, w, {});
  CHECK(j.at("classification").at("tolerances").contains("pure"));
  CHECK(j.at("verdict") == "pure");
}
