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

#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "swt/dense.hpp"
#include "swt/engine.hpp"
#include "swt/fermion.hpp"
#include "swt/models.hpp"
#include "swt/pauli.hpp"
#include "swt/verify.hpp"

namespace swt {

using Json = nlohmann::json;

/** Malformed or inconsistent input document. */
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Shortest round-trip decimal; -0 prints as 0. */
std::string format_real(double x);

/** "re" when real, "imi" when imaginary, "(re+imi)" otherwise. */
std::string format_coefficient(Complex c);

/** One "coefficient * STRING" line per term in canonical order. */
std::string to_text(const PauliSum& a);

/** {"n_qubits": n, "terms": [{"pauli": "XZ..", "re": r, "im": i}, ...]} */
Json to_json(const PauliSum& a);
PauliSum pauli_sum_from_json(const Json& j);

/** {"n_modes": n, "terms": [{"coeff": [re, im], "ops": [[mode, "cdag" | "c"], ...]}, ...]} */
FermionOperator fermion_from_json(const Json& j);

/** {"model": "siam2" | "siam_chain", "U": .., "mu": .., "eps": [..], "V": [..]} */
ModelConfig model_config_from_json(const Json& j);

Json to_json(const DegeneratePair& p);
Json to_json(const SwtReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const SpectralComparison& c);

}  // namespace swt
