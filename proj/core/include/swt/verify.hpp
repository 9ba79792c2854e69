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

#include <cstddef>
#include <string>
#include <vector>

#include "swt/engine.hpp"
#include "swt/pauli.hpp"

namespace swt {

/** One measured quantity against its bound: measured <= upper, or lower <= measured <= upper. */
struct Check {
  std::string name;
  double measured = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool is_range = false;
  bool passed = false;
  std::string note;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool passed = true;
  std::string reason;  // empty, "degenerate", "closure" or "check failed"
  std::vector<DegeneratePair> degenerate_pairs;
};

struct VerifyOptions {
  double tol = kDefaultTolerance;
  std::size_t max_closure_depth = kDefaultClosureDepth;
  int octaves = 3;
};

/**
 * Oracle equivalences for the full pipeline on h, followed by the first- and
 * second-order scaling checks over hv -> hv / 2^k, k = 0..octaves.
 * Exponential checks run only up to kMaxExponentialQubits.
 */
VerificationReport verify(const PauliSum& h, const VerifyOptions& options = {});

struct ScalingPoint {
  double lambda = 1.0;
  double off_diagonal = 0.0;  // || offdiag(e^S H e^-S) ||_2
  double second_order = 0.0;  // || e^S H e^-S - H_eff ||_2
};

/** The two conjugation errors of h0 + lambda hv for each lambda. */
std::vector<ScalingPoint> scaling_series(
    const SplitHamiltonian& s, const std::vector<double>& lambdas, const SwtOptions& options);

}  // namespace swt
