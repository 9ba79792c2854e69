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

#include <gtest/gtest.h>

using namespace swt;

TEST(Format, Reals) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(1.0), "1");
  EXPECT_EQ(format_real(0.1 + 0.2), "0.30000000000000004");
}

TEST(Format, Coefficients) {
  EXPECT_EQ(format_coefficient({-0.5, 0.0}), "-0.5");
  EXPECT_EQ(format_coefficient({0.0, 0.25}), "0.25i");
  EXPECT_EQ(format_coefficient({1.0, -2.0}), "(1-2i)");
  EXPECT_EQ(format_coefficient({1.0, 2.0}), "(1+2i)");
}

TEST(Text, OneLinePerTerm) {
  const PauliSum a(2, {{PauliString::from_str("XX"), 0.5}, {PauliString::from_str("ZI"), -1.0}});
  EXPECT_EQ(to_text(a), "0.5 * XX\n-1 * ZI\n");
}

TEST(Json, PauliSumRoundTrip) {
  const PauliSum a(3, {{PauliString::from_str("XYZ"), Complex(0.1, -0.3)},
                       {PauliString::from_str("IIZ"), 2.0}});
  EXPECT_EQ(pauli_sum_from_json(to_json(a)), a);
  EXPECT_EQ(to_json(a).dump(), to_json(pauli_sum_from_json(to_json(a))).dump());
}

TEST(Json, PauliSumErrors) {
  EXPECT_THROW(pauli_sum_from_json(Json::parse(R"({"terms": []})")), ConfigError);
  EXPECT_THROW(pauli_sum_from_json(Json::parse(R"({"n_qubits": 2, "terms": [{"pauli": "XQ", "re": 1}]})")),
               ConfigError);
  EXPECT_THROW(pauli_sum_from_json(Json::parse(R"({"n_qubits": 2, "terms": [{"pauli": "X", "re": 1}]})")),
               ConfigError);
  EXPECT_THROW(pauli_sum_from_json(Json::parse(R"({"n_qubits": "2", "terms": []})")), ConfigError);
}

TEST(Json, FermionOperator) {
  const FermionOperator op = fermion_from_json(Json::parse(
      R"({"n_modes": 2, "terms": [{"coeff": [1, 0], "ops": [[0, "cdag"], [1, "c"]]},
                                  {"coeff": [1, 0], "ops": [[1, "cdag"], [0, "c"]]}]})"));
  const PauliSum expected(2, {{PauliString::from_str("XX"), 0.5}, {PauliString::from_str("YY"), 0.5}});
  EXPECT_EQ(jordan_wigner(op), expected);
  EXPECT_THROW(fermion_from_json(Json::parse(R"({"n_modes": 1, "terms": [{"coeff": [1, 0], "ops": [[3, "c"]]}]})")),
               ConfigError);
  EXPECT_THROW(fermion_from_json(Json::parse(R"({"n_modes": 1, "terms": [{"coeff": [1, 0], "ops": [[0, "a"]]}]})")),
               ConfigError);
}

TEST(Json, ModelConfig) {
  const ModelConfig c = model_config_from_json(
      Json::parse(R"({"model": "siam_chain", "U": 4, "mu": 0.5, "eps": [0, 1, 2], "V": [0.1, 0.2]})"));
  EXPECT_EQ(c.kind, ModelKind::Chain);
  EXPECT_EQ(c.params.n_bath, 2u);
  EXPECT_THROW(model_config_from_json(Json::parse(R"({"model": "pam", "U": 1, "mu": 0, "eps": [], "V": []})")),
               ConfigError);
  EXPECT_THROW(model_config_from_json(Json::parse(R"({"model": "siam2", "mu": 0, "eps": [0], "V": [1]})")),
               ConfigError);
}
