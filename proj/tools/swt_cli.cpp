// Copyright 2026 The swt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swt_cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "swt/dense.hpp"
#include "swt/engine.hpp"
#include "swt/io.hpp"
#include "swt/models.hpp"
#include "swt/verify.hpp"

namespace swt::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config;
  std::optional<double> tol;
  std::optional<std::size_t> depth;
  bool no_verify = false;
  std::string out_dir;
  std::string format = "text";
};

struct RunConfig {
  PauliSum hamiltonian;
  double tol = kDefaultTolerance;
  std::size_t max_closure_depth = kDefaultClosureDepth;
  bool verify = true;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("invalid JSON in \"" + path + "\": " + e.what());
  }
}

// The document kind is decided by its key: "model", "n_modes" or "n_qubits".
RunConfig load(const Options& opts) {
  const Json j = read_json(opts.config);
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig rc;
  if (j.contains("model")) {
    rc.hamiltonian = jordan_wigner(build_model(model_config_from_json(j)));
  } else if (j.contains("n_modes")) {
    rc.hamiltonian = jordan_wigner(fermion_from_json(j));
  } else if (j.contains("n_qubits")) {
    rc.hamiltonian = pauli_sum_from_json(j);
  } else {
    throw ConfigError("config has none of \"model\", \"n_modes\", \"n_qubits\"");
  }
  try {
    if (j.contains("tol")) rc.tol = j.at("tol").get<double>();
    if (j.contains("max_closure_depth")) rc.max_closure_depth = j.at("max_closure_depth").get<std::size_t>();
    if (j.contains("verify")) rc.verify = j.at("verify").get<bool>();
  } catch (const Json::exception&) {
    throw ConfigError("\"tol\", \"max_closure_depth\" or \"verify\" has the wrong type");
  }
  if (opts.tol) rc.tol = *opts.tol;
  if (opts.depth) rc.max_closure_depth = *opts.depth;
  if (opts.no_verify) rc.verify = false;
  if (!(rc.tol >= 0.0)) throw ConfigError("tol must be non-negative");
  if (rc.max_closure_depth < 1) throw ConfigError("closure depth must be at least 1");
  return rc;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out || !(out << content)) throw ConfigError("cannot write \"" + path.string() + "\"");
}

fs::path out_path(const Options& opts, const char* name) {
  std::error_code ec;
  fs::create_directories(opts.out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory \"" + opts.out_dir + "\"");
  return fs::path(opts.out_dir) / name;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_map(const Options& opts, std::ostream& out) {
  const RunConfig rc = load(opts);
  const Json j = to_json(rc.hamiltonian);
  const std::string text = to_text(rc.hamiltonian);
  if (!opts.out_dir.empty()) {
    write_file(out_path(opts, "hamiltonian.json"), dump(j));
    write_file(out_path(opts, "hamiltonian.txt"), text);
  }
  out << (opts.format == "json" ? dump(j) : text);
  return kOk;
}

int cmd_run(const Options& opts, std::ostream& out, std::ostream& err) {
  const RunConfig rc = load(opts);
  const std::size_t n = rc.hamiltonian.n_qubits();
  const bool oracle = rc.verify && n <= kMaxExponentialQubits;

  const SplitHamiltonian s = split(rc.hamiltonian);
  SwtReport report;
  report.eta = compute_eta(s);
  AnsatzBasis basis;
  try {
    basis = build_ansatz(report.eta, s.h0, rc.max_closure_depth);
  } catch (const ClosureNotReached& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
  report.closure_depth = basis.closure_depth;
  GeneratorFit fit = fit_generator(basis, s, rc.tol);
  report.generator = fit.generator;
  report.residual = fit.residual;
  report.h_eff = effective_hamiltonian(s, report.generator);

  const bool feasible = fit.residual <= rc.tol;
  std::optional<ExactGenerator> exact;
  if (oracle) {
    exact = exact_generator_dense(s);
    report.degenerate_pairs = exact->degeneracies.pairs;
  }

  Json j = to_json(report);
  j["status"] = feasible ? "ok" : "infeasible";
  if (!feasible) j["unmatched"] = to_json(fit.unmatched);
  bool oracle_ok = true;
  if (exact && feasible) {
    const double gen_diff = max_abs_coeff(report.generator - pauli_decompose(exact->generator));
    oracle_ok = gen_diff <= rc.tol && exact->degeneracies.pairs.empty();
    j["oracle"] = {{"generator_vs_dense", gen_diff}, {"passed", oracle_ok}};
  }

  if (!opts.out_dir.empty()) write_file(out_path(opts, "report.json"), dump(j));
  std::ostream& summary = opts.format == "json" ? err : out;
  if (opts.format == "json") out << dump(j);
  summary << "constraint_residual: " << format_real(fit.residual) << '\n'
          << "closure_depth: " << basis.closure_depth << '\n'
          << "directions: " << basis.directions.size() << '\n';
  if (!feasible) {
    summary << "status: infeasible\nunmatched:\n" << to_text(fit.unmatched);
    for (const auto& p : report.degenerate_pairs) {
      summary << "degenerate pair " << p.i << ' ' << p.j << " energy " << format_real(p.energy)
              << " hv " << format_coefficient(p.hv) << '\n';
    }
    err << "error: first-order elimination infeasible (residual " << format_real(fit.residual)
        << " > tol " << format_real(rc.tol) << ")\n";
    return kInfeasible;
  }
  if (opts.format != "json") out << "h_eff:\n" << to_text(report.h_eff);
  if (!oracle_ok) {
    err << "error: generator disagrees with the dense oracle\n";
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
  const RunConfig rc = load(opts);
  const VerificationReport r = verify(rc.hamiltonian, {rc.tol, rc.max_closure_depth});
  const Json j = to_json(r);
  if (!opts.out_dir.empty()) write_file(out_path(opts, "verify.json"), dump(j));
  if (opts.format == "json") {
    out << dump(j);
  } else {
    for (const auto& c : r.checks) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ' ' << format_real(c.measured);
      if (c.is_range) {
        out << " in [" << format_real(c.lower) << ", " << format_real(c.upper) << "]";
      } else {
        out << " <= " << format_real(c.upper);
      }
      if (!c.note.empty()) out << "  (" << c.note << ")";
      out << '\n';
    }
    for (const auto& p : r.degenerate_pairs) {
      out << "degenerate pair " << p.i << ' ' << p.j << " energy " << format_real(p.energy)
          << " hv " << format_coefficient(p.hv) << '\n';
    }
    out << (r.passed ? "verify: passed" : "verify: failed (" + r.reason + ")") << '\n';
  }
  return r.passed ? kOk : kVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schrieffer-Wolff transformation of qubit-mapped fermionic Hamiltonians", "swt"};
  app.require_subcommand(1);
  Options opts;

  const auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("-c,--config", opts.config, "Model config, fermion operator or Pauli sum (JSON)")
        ->required();
    sub->add_option("--tol", opts.tol, "Residual and oracle tolerance");
    sub->add_option("--depth", opts.depth, "Maximum ansatz closure depth");
    sub->add_flag("--no-verify", opts.no_verify, "Skip the dense oracle");
    sub->add_option("--out", opts.out_dir, "Directory for output files");
    sub->add_option("--format", opts.format, "Standard output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  CLI::App* map = app.add_subcommand("map", "Write the Jordan-Wigner qubit Hamiltonian");
  CLI::App* run = app.add_subcommand("run", "Compute the generator and effective Hamiltonian");
  CLI::App* ver = app.add_subcommand("verify", "Check the pipeline against the dense oracle");
  for (CLI::App* sub : {map, run, ver}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (map->parsed()) return cmd_map(opts, out);
    if (run->parsed()) return cmd_run(opts, out, err);
    return cmd_verify(opts, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kConfigError;
}

}  // namespace swt::cli
