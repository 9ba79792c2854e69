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

#include "swt/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace swt {
namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Json complex_pair(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_coefficient(Complex c) {
  const double re = c.real(), im = c.imag();
  if (im == 0.0) return format_real(re);
  if (re == 0.0) return format_real(im) + "i";
  return "(" + format_real(re) + (im < 0 ? "" : "+") + format_real(im) + "i)";
}

std::string to_text(const PauliSum& a) {
  std::ostringstream out;
  for (const auto& t : a) out << format_coefficient(t.coeff) << " * " << t.string.str() << '\n';
  return out.str();
}

Json to_json(const PauliSum& a) {
  Json terms = Json::array();
  for (const auto& t : a) {
    terms.push_back({{"pauli", t.string.str()},
                     {"re", t.coeff.real() == 0.0 ? 0.0 : t.coeff.real()},
                     {"im", t.coeff.imag() == 0.0 ? 0.0 : t.coeff.imag()}});
  }
  return {{"n_qubits", a.n_qubits()}, {"terms", std::move(terms)}};
}

PauliSum pauli_sum_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("Pauli sum must be a JSON object");
  const auto n = field<std::size_t>(j, "n_qubits");
  const auto terms = field<Json>(j, "terms");
  if (!terms.is_array()) throw ConfigError("\"terms\" must be an array");
  std::vector<PauliTerm> out;
  for (const auto& t : terms) {
    const auto text = field<std::string>(t, "pauli");
    if (text.size() != n) {
      throw ConfigError("Pauli string \"" + text + "\" does not have " + std::to_string(n) + " qubits");
    }
    PauliString p;
    try {
      p = PauliString::from_str(text);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const double re = t.contains("re") ? field<double>(t, "re") : 0.0;
    const double im = t.contains("im") ? field<double>(t, "im") : 0.0;
    out.push_back({std::move(p), Complex(re, im)});
  }
  return canonicalize(n, std::move(out), 0.0);
}

FermionOperator fermion_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("fermion operator must be a JSON object");
  const auto n = field<std::size_t>(j, "n_modes");
  if (n == 0) throw ConfigError("\"n_modes\" must be positive");
  const auto terms = field<Json>(j, "terms");
  if (!terms.is_array()) throw ConfigError("\"terms\" must be an array");
  FermionOperator op(n);
  for (const auto& t : terms) {
    const auto coeff = field<std::vector<double>>(t, "coeff");
    if (coeff.size() != 2) throw ConfigError("\"coeff\" must be [re, im]");
    std::vector<LadderOp> factors;
    for (const auto& f : field<Json>(t, "ops")) {
      if (!f.is_array() || f.size() != 2 || !f[0].is_number_unsigned() || !f[1].is_string()) {
        throw ConfigError("each op must be [mode, \"c\" | \"cdag\"]");
      }
      const auto kind = f[1].get<std::string>();
      if (kind != "c" && kind != "cdag") throw ConfigError("unknown ladder operator \"" + kind + "\"");
      factors.push_back({f[0].get<std::size_t>(), kind == "cdag"});
    }
    try {
      op.add_term(Complex(coeff[0], coeff[1]), std::move(factors));
    } catch (const std::out_of_range& e) {
      throw ConfigError(e.what());
    }
  }
  return op;
}

ModelConfig model_config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("model config must be a JSON object");
  const auto model = field<std::string>(j, "model");
  ModelConfig config;
  if (model == "siam2") {
    config.kind = ModelKind::TwoSite;
  } else if (model == "siam_chain") {
    config.kind = ModelKind::Chain;
  } else {
    throw ConfigError("unknown model \"" + model + "\"");
  }
  config.params.U = field<double>(j, "U");
  config.params.mu = field<double>(j, "mu");
  config.params.eps = field<std::vector<double>>(j, "eps");
  config.params.V = field<std::vector<double>>(j, "V");
  config.params.n_bath = config.params.V.size();
  return config;
}

Json to_json(const DegeneratePair& p) {
  return {{"i", p.i}, {"j", p.j}, {"energy", p.energy}, {"hv", complex_pair(p.hv)}};
}

Json to_json(const SwtReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.degenerate_pairs) pairs.push_back(to_json(p));
  return {{"eta", to_json(r.eta)},
          {"generator", to_json(r.generator)},
          {"h_eff", to_json(r.h_eff)},
          {"constraint_residual", r.residual},
          {"closure_depth", r.closure_depth},
          {"degenerate_pairs", std::move(pairs)}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry = {{"name", c.name}, {"measured", c.measured}, {"upper", c.upper}, {"passed", c.passed}};
    if (c.is_range) entry["lower"] = c.lower;
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(std::move(entry));
  }
  Json pairs = Json::array();
  for (const auto& p : r.degenerate_pairs) pairs.push_back(to_json(p));
  return {{"passed", r.passed}, {"reason", r.reason}, {"checks", std::move(checks)},
          {"degenerate_pairs", std::move(pairs)}};
}

Json to_json(const SpectralComparison& c) {
  return {{"exact", c.exact}, {"effective", c.effective}, {"delta", c.delta}, {"max_delta", c.max_delta}};
}

}  // namespace swt
