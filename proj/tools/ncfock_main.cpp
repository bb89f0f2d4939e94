// Command-line front end. Links the ncfock shared library through its C API;
// CLI11 and nlohmann/json are used only for argument parsing and rendering.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ncfock/ncfock.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitChecksFailed = 1;
constexpr int kExitError = 2;

struct WeightArgs {
  std::optional<double> bergman;
  std::optional<double> dirichlet;
  std::string psi_file;
  double psi_s = 1.0;
  std::string weights_file;
  int n = 2;
  int degree = 5;
};

struct CommonArgs {
  int cap = -1;
  double tol = 1e-10;
  double pure_tol = 1e-8;
  double cuntz_tol = 1e-10;
  std::string radial = "0.5,0.7,0.9,0.99";
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitError);
}

void check_status(ncf_status st) {
  if (st != NCF_OK) die(ncf_last_error());
}

struct WeightsHandle {
  ncf_weights* ptr = nullptr;
  ~WeightsHandle() { ncf_weights_free(ptr); }
};

struct TupleHandle {
  ncf_tuple* ptr = nullptr;
  ~TupleHandle() { ncf_tuple_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { ncf_string_free(ptr); }
};

void build_weights(const WeightArgs& wa, WeightsHandle& wh) {
  int selected = 0;
  selected += wa.bergman.has_value();
  selected += wa.dirichlet.has_value();
  selected += !wa.psi_file.empty();
  selected += !wa.weights_file.empty();
  if (selected != 1)
    die("select exactly one of --bergman, --dirichlet, --psi, --weights");
  if (wa.bergman)
    check_status(ncf_weights_bergman(wa.n, *wa.bergman, wa.degree, &wh.ptr));
  else if (wa.dirichlet)
    check_status(ncf_weights_dirichlet(wa.n, *wa.dirichlet, wa.degree, &wh.ptr));
  else if (!wa.psi_file.empty())
    check_status(ncf_weights_psi(read_file(wa.psi_file).c_str(), wa.psi_s, wa.degree, &wh.ptr));
  else
    check_status(ncf_weights_from_json(read_file(wa.weights_file).c_str(), &wh.ptr));
}

std::string options_json(const CommonArgs& ca) {
  json radial = json::array();
  std::stringstream ss(ca.radial);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) radial.push_back(std::stod(item));
  }
  json j{{"degree_cap", ca.cap}, {"tol", ca.tol},   {"pure_tol", ca.pure_tol},
         {"cuntz_tol", ca.cuntz_tol}, {"seed", ca.seed}, {"radial_grid", radial}};
  return j.dump();
}

void render_value(std::ostream& os, const json& v) {
  if (v.is_number_float()) {
    std::ostringstream tmp;
    tmp.precision(6);
    tmp << v.get<double>();
    os << tmp.str();
  } else {
    os << v.dump();
  }
}

void render_text(std::ostream& os, const json& report) {
  os << "ncfock " << report.value("command", "?") << " report\n";
  for (const auto& [key, value] : report.items()) {
    if (key == "schema_version" || key == "command" || key == "checks") continue;
    os << "  " << key << ": ";
    render_value(os, value);
    os << "\n";
  }
  if (report.contains("checks")) {
    os << "  checks:\n";
    for (const auto& c : report.at("checks")) {
      os << "    [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] "
         << c.at("name").get<std::string>();
      if (c.contains("value")) {
        os << "  value=";
        render_value(os, c.at("value"));
        os << " tol=";
        render_value(os, c.at("tol"));
      }
      os << "\n";
    }
  }
}

int finish(const char* report_json, const CommonArgs& ca) {
  const json report = json::parse(report_json);
  if (!ca.out.empty()) {
    std::ofstream out(ca.out);
    if (!out) die("cannot write: " + ca.out);
    out << report.dump(2) << "\n";
  }
  if (ca.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    render_text(std::cout, report);
  return ncf_report_all_checks_pass(report_json) == 1 ? 0 : kExitChecksFailed;
}

void add_weight_flags(CLI::App* cmd, WeightArgs& wa) {
  cmd->add_option("--bergman", wa.bergman, "Bergman-scale weights with parameter s > 0");
  cmd->add_option("--dirichlet", wa.dirichlet, "Dirichlet-scale weights with parameter s");
  cmd->add_option("--psi", wa.psi_file, "series JSON file phi for (1-phi)^{-s} weights");
  cmd->add_option("--s", wa.psi_s, "exponent s for --psi (default 1)");
  cmd->add_option("--weights", wa.weights_file, "weight-family JSON file");
  cmd->add_option("--n", wa.n, "generator count (default 2)");
  cmd->add_option("--N", wa.degree, "truncation degree (default 5)");
}

void add_common_flags(CLI::App* cmd, CommonArgs& ca) {
  cmd->add_option("--cap", ca.cap, "defect series degree cap (default: N)");
  cmd->add_option("--tol", ca.tol, "membership/convergence tolerance (default 1e-10)");
  cmd->add_option("--pure-tol", ca.pure_tol, "purity tolerance (default 1e-8)");
  cmd->add_option("--cuntz-tol", ca.cuntz_tol, "Cuntz tolerance (default 1e-10)");
  cmd->add_option("--radial", ca.radial, "comma-separated radial grid");
  cmd->add_option("--seed", ca.seed, "seed for randomized suites");
  cmd->add_option("--format", ca.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", ca.out, "write the JSON report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncfock: operator models on truncated weighted Fock spaces"};
  app.require_subcommand(1);

  WeightArgs wa;
  CommonArgs ca;
  std::string tuple_file;
  std::string symbol_file;
  int st_n = 2, st_degree = 4;
  std::uint64_t st_seed = 1;

  auto* weights_cmd = app.add_subcommand("weights", "construct and dump a weight family");
  auto* admissible_cmd = app.add_subcommand("admissible", "probe admissibility conditions (a)(b)(c)");
  auto* classify_cmd = app.add_subcommand("classify", "classify a tuple: domain/pure/Cuntz/radial");
  auto* berezin_cmd = app.add_subcommand("berezin", "Berezin kernel, intertwining, model transfer");
  auto* hardy_cmd = app.add_subcommand("hardy", "Fourier/Cesaro/functional-calculus checks");
  auto* multiplier_cmd = app.add_subcommand("multiplier", "multiplier symbol recovery");
  auto* wold_cmd = app.add_subcommand("wold", "Wold decomposition of a tuple");
  auto* selftest_cmd = app.add_subcommand("selftest", "deterministic cross-module invariant suite");

  for (auto* cmd : {weights_cmd, admissible_cmd, classify_cmd, berezin_cmd, hardy_cmd,
                    multiplier_cmd, wold_cmd}) {
    add_weight_flags(cmd, wa);
    add_common_flags(cmd, ca);
  }
  for (auto* cmd : {classify_cmd, berezin_cmd, wold_cmd})
    cmd->add_option("--tuple", tuple_file, "operator-tuple JSON file")->required();
  multiplier_cmd->add_option("--symbol", symbol_file, "multiplier-symbol JSON file");
  selftest_cmd->add_option("--n", st_n, "generator count (default 2)");
  selftest_cmd->add_option("--N", st_degree, "truncation degree (default 4)");
  selftest_cmd->add_option("--seed", st_seed, "seed (default 1)");
  add_common_flags(selftest_cmd, ca);

  CLI11_PARSE(app, argc, argv);

  try {
    StringHandle report;
    if (selftest_cmd->parsed()) {
      check_status(ncf_report_selftest(st_n, st_degree, st_seed, &report.ptr));
      return finish(report.ptr, ca);
    }

    WeightsHandle wf;
    build_weights(wa, wf);
    const std::string opts = options_json(ca);

    if (weights_cmd->parsed()) {
      check_status(ncf_report_weights(wf.ptr, &report.ptr));
    } else if (admissible_cmd->parsed()) {
      check_status(ncf_report_admissible(wf.ptr, opts.c_str(), &report.ptr));
    } else if (hardy_cmd->parsed()) {
      check_status(ncf_report_hardy(wf.ptr, opts.c_str(), &report.ptr));
    } else if (multiplier_cmd->parsed()) {
      if (symbol_file.empty()) {
        check_status(ncf_report_multiplier(wf.ptr, nullptr, opts.c_str(), &report.ptr));
      } else {
        const std::string symbol = read_file(symbol_file);
        check_status(ncf_report_multiplier(wf.ptr, symbol.c_str(), opts.c_str(), &report.ptr));
      }
    } else {
      TupleHandle tuple;
      check_status(ncf_tuple_from_json(read_file(tuple_file).c_str(), &tuple.ptr));
      if (classify_cmd->parsed())
        check_status(ncf_report_classify(wf.ptr, tuple.ptr, opts.c_str(), &report.ptr));
      else if (berezin_cmd->parsed())
        check_status(ncf_report_berezin(wf.ptr, tuple.ptr, opts.c_str(), &report.ptr));
      else
        check_status(ncf_report_wold(wf.ptr, tuple.ptr, opts.c_str(), &report.ptr));
    }
    return finish(report.ptr, ca);
  } catch (const std::exception& e) {
    die(e.what());
  }
}
