#include "ncfock/ncfock.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ncfock/report.hpp"

struct ncf_weights {
  ncfock::WeightFamily value;
};

struct ncf_tuple {
  ncfock::OperatorTuple value;
};

namespace {

thread_local std::string g_last_error = "ok";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ncf_status fail(ncf_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
ncf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error = "ok";
    return NCF_OK;
  } catch (const ncfock::convergence_error& e) {
    return fail(NCF_ERR_CONVERGENCE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(NCF_ERR_PARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(NCF_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NCF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(NCF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::length_error& e) {
    return fail(NCF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(NCF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NCF_ERR_INTERNAL, "unknown error");
  }
}

ncf_status require(bool ok, const char* what) {
  return ok ? NCF_OK : fail(NCF_ERR_INVALID_ARGUMENT, what);
}

ncfock::ReportOptions parse_options(const char* options_json) {
  ncfock::ReportOptions opts;
  if (!options_json || options_json[0] == '\0') return opts;
  const auto j = ncfock::json::parse(options_json);
  opts.degree_cap = j.value("degree_cap", opts.degree_cap);
  opts.tol = j.value("tol", opts.tol);
  opts.pure_tol = j.value("pure_tol", opts.pure_tol);
  opts.cuntz_tol = j.value("cuntz_tol", opts.cuntz_tol);
  if (j.contains("radial_grid")) opts.radial_grid = j.at("radial_grid").get<std::vector<double>>();
  opts.seed = j.value("seed", opts.seed);
  return opts;
}

ncfock::Word to_word(const int* word, size_t len) {
  ncfock::Word w;
  w.reserve(len);
  for (size_t i = 0; i < len; ++i) w.push_back(word[i]);
  return w;
}

void emit(char** out_json, const ncfock::json& j) { *out_json = dup_string(j.dump(2)); }

}  // namespace

extern "C" {

const char* ncf_version(void) { return "0.1.0"; }

const char* ncf_last_error(void) { return g_last_error.c_str(); }

void ncf_string_free(char* s) { std::free(s); }

ncf_status ncf_weights_bergman(int n, double s, int degree, ncf_weights** out) {
  if (ncf_status st = require(out != nullptr, "out must not be NULL")) return st;
  return guarded([&] { *out = new ncf_weights{ncfock::WeightFamily::bergman(n, s, degree)}; });
}

ncf_status ncf_weights_dirichlet(int n, double s, int degree, ncf_weights** out) {
  if (ncf_status st = require(out != nullptr, "out must not be NULL")) return st;
  return guarded([&] { *out = new ncf_weights{ncfock::WeightFamily::dirichlet(n, s, degree)}; });
}

ncf_status ncf_weights_psi(const char* phi_json, double s, int degree, ncf_weights** out) {
  if (ncf_status st = require(out && phi_json, "phi_json and out must not be NULL")) return st;
  return guarded([&] {
    const auto phi = ncfock::series_from_json(ncfock::json::parse(phi_json));
    *out = new ncf_weights{ncfock::WeightFamily::psi(phi, s, degree)};
  });
}

ncf_status ncf_weights_from_json(const char* weights_json, ncf_weights** out) {
  if (ncf_status st = require(out && weights_json, "weights_json and out must not be NULL")) return st;
  return guarded([&] {
    *out = new ncf_weights{ncfock::weights_from_json(ncfock::json::parse(weights_json))};
  });
}

ncf_status ncf_weights_to_json(const ncf_weights* wf, char** out_json) {
  if (ncf_status st = require(wf && out_json, "wf and out_json must not be NULL")) return st;
  return guarded([&] { emit(out_json, ncfock::weights_to_json(wf->value)); });
}

void ncf_weights_free(ncf_weights* wf) { delete wf; }

ncf_status ncf_weights_n(const ncf_weights* wf, int* out) {
  if (ncf_status st = require(wf && out, "wf and out must not be NULL")) return st;
  *out = wf->value.n();
  return NCF_OK;
}

ncf_status ncf_weights_degree(const ncf_weights* wf, int* out) {
  if (ncf_status st = require(wf && out, "wf and out must not be NULL")) return st;
  *out = wf->value.degree();
  return NCF_OK;
}

ncf_status ncf_weights_b(const ncf_weights* wf, const int* word, size_t len, double* out) {
  if (ncf_status st = require(wf && out && (word || len == 0), "bad arguments")) return st;
  return guarded([&] { *out = wf->value.b(to_word(word, len)); });
}

ncf_status ncf_weights_a(const ncf_weights* wf, const int* word, size_t len, double* out) {
  if (ncf_status st = require(wf && out && (word || len == 0), "bad arguments")) return st;
  return guarded([&] { *out = wf->value.a(to_word(word, len)); });
}

ncf_status ncf_tuple_from_json(const char* tuple_json, ncf_tuple** out) {
  if (ncf_status st = require(out && tuple_json, "tuple_json and out must not be NULL")) return st;
  return guarded([&] {
    *out = new ncf_tuple{ncfock::tuple_from_json(ncfock::json::parse(tuple_json))};
  });
}

ncf_status ncf_tuple_to_json(const ncf_tuple* t, char** out_json) {
  if (ncf_status st = require(t && out_json, "t and out_json must not be NULL")) return st;
  return guarded([&] { emit(out_json, ncfock::tuple_to_json(t->value)); });
}

ncf_status ncf_tuple_model(const ncf_weights* wf, int degree, ncf_tuple** out) {
  if (ncf_status st = require(wf && out, "wf and out must not be NULL")) return st;
  return guarded([&] { *out = new ncf_tuple{ncfock::build_W(wf->value, degree)}; });
}

void ncf_tuple_free(ncf_tuple* t) { delete t; }

ncf_status ncf_tuple_dim(const ncf_tuple* t, int64_t* out) {
  if (ncf_status st = require(t && out, "t and out must not be NULL")) return st;
  *out = static_cast<int64_t>(t->value.dim());
  return NCF_OK;
}

ncf_status ncf_report_weights(const ncf_weights* wf, char** out_json) {
  if (ncf_status st = require(wf && out_json, "wf and out_json must not be NULL")) return st;
  return guarded([&] { emit(out_json, ncfock::weights_report(wf->value)); });
}

ncf_status ncf_report_admissible(const ncf_weights* wf, const char* options_json,
                                 char** out_json) {
  if (ncf_status st = require(wf && out_json, "wf and out_json must not be NULL")) return st;
  return guarded([&] {
    emit(out_json, ncfock::admissible_report(wf->value, parse_options(options_json)));
  });
}

ncf_status ncf_report_classify(const ncf_weights* wf, const ncf_tuple* t,
                               const char* options_json, char** out_json) {
  if (ncf_status st = require(wf && t && out_json, "wf, t, out_json must not be NULL")) return st;
  return guarded([&] {
    emit(out_json, ncfock::classify_report(wf->value, t->value, parse_options(options_json)));
  });
}

ncf_status ncf_report_berezin(const ncf_weights* wf, const ncf_tuple* t,
                              const char* options_json, char** out_json) {
  if (ncf_status st = require(wf && t && out_json, "wf, t, out_json must not be NULL")) return st;
  return guarded([&] {
    emit(out_json, ncfock::berezin_report(wf->value, t->value, parse_options(options_json)));
  });
}

ncf_status ncf_report_hardy(const ncf_weights* wf, const char* options_json, char** out_json) {
  if (ncf_status st = require(wf && out_json, "wf and out_json must not be NULL")) return st;
  return guarded([&] {
    emit(out_json, ncfock::hardy_report(wf->value, parse_options(options_json)));
  });
}

ncf_status ncf_report_multiplier(const ncf_weights* wf, const char* symbol_json,
                                 const char* options_json, char** out_json) {
  if (ncf_status st = require(wf && out_json, "wf and out_json must not be NULL")) return st;
  return guarded([&] {
    if (symbol_json) {
      const auto symbol = ncfock::symbol_from_json(ncfock::json::parse(symbol_json));
      emit(out_json, ncfock::multiplier_report(wf->value, &symbol, parse_options(options_json)));
    } else {
      emit(out_json, ncfock::multiplier_report(wf->value, nullptr, parse_options(options_json)));
    }
  });
}

ncf_status ncf_report_wold(const ncf_weights* wf, const ncf_tuple* t, const char* options_json,
                           char** out_json) {
  if (ncf_status st = require(wf && t && out_json, "wf, t, out_json must not be NULL")) return st;
  return guarded([&] {
    emit(out_json, ncfock::wold_report(wf->value, t->value, parse_options(options_json)));
  });
}

ncf_status ncf_report_selftest(int n, int degree, uint64_t seed, char** out_json) {
  if (ncf_status st = require(out_json != nullptr, "out_json must not be NULL")) return st;
  return guarded([&] { emit(out_json, ncfock::selftest_report(n, degree, seed)); });
}

int ncf_report_all_checks_pass(const char* report_json) {
  if (!report_json) return -1;
  try {
    return ncfock::report_checks_pass(ncfock::json::parse(report_json)) ? 1 : 0;
  } catch (...) {
    return -1;
  }
}

}  // extern "C"
