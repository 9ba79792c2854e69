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

#include "swt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "swt/dense.hpp"

namespace swt {
namespace {

constexpr double kBchTolerance = 1e-8;
constexpr double kBchGeneratorNorm = 0.1;
constexpr int kBchOrder = 8;
constexpr double kFirstOrderLow = 3.4;
constexpr double kFirstOrderHigh = 4.6;
constexpr double kSecondOrderLow = 6.5;
constexpr double kSecondOrderHigh = 9.5;

double coeff_distance(const PauliSum& a, const PauliSum& b) {
  return max_abs_coeff(canonicalize(a.n_qubits(), (a - b).terms(), 0.0));
}

void add_upper(VerificationReport& r, std::string name, double measured, double upper,
               std::string note = {}) {
  r.checks.push_back({std::move(name), measured, 0.0, upper, false, measured <= upper, std::move(note)});
}

void add_range(VerificationReport& r, std::string name, double measured, double lower,
               double upper, std::string note = {}) {
  r.checks.push_back({std::move(name), measured, lower, upper, true,
                      measured >= lower && measured <= upper, std::move(note)});
}

void finish(VerificationReport& r) {
  r.passed = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; });
  if (!r.passed && r.reason.empty()) r.reason = "check failed";
}

SplitHamiltonian scaled(const SplitHamiltonian& s, double lambda) {
  return {s.h0, scale(s.hv, lambda)};
}

}  // namespace

std::vector<ScalingPoint> scaling_series(
    const SplitHamiltonian& s, const std::vector<double>& lambdas, const SwtOptions& options) {
  std::vector<ScalingPoint> out;
  for (double lambda : lambdas) {
    const SplitHamiltonian part = scaled(s, lambda);
    const PauliSum h = part.h0 + part.hv;
    const SwtReport report = schrieffer_wolff(h, options);
    const Eigen::MatrixXcd conj = conjugate_by_exp(h, report.generator);
    out.push_back({lambda, operator_norm(off_diagonal(conj)),
                   operator_norm(conj - to_matrix(report.h_eff).matrix)});
  }
  return out;
}

VerificationReport verify(const PauliSum& h, const VerifyOptions& options) {
  VerificationReport r;
  const double tol = options.tol;
  const std::size_t n = h.n_qubits();
  if (n > kMaxDenseQubits) {
    throw std::length_error("verify: " + std::to_string(n) + " qubits exceeds the dense limit");
  }

  const SplitHamiltonian s = split(h);
  add_upper(r, "split_reconstruction", max_abs_coeff(canonicalize(n, (s.h0 + s.hv - h).terms(), 0.0)), tol);

  const ExactGenerator exact = exact_generator_dense(s);
  r.degenerate_pairs = exact.degeneracies.pairs;
  add_upper(r, "degenerate_pairs", static_cast<double>(exact.degeneracies.pairs.size()), 0.0,
            "coupled basis pairs with equal h0 energy");
  if (!exact.degeneracies.pairs.empty()) {
    r.reason = "degenerate";
    finish(r);
    return r;
  }

  const PauliSum eta = compute_eta(s);
  AnsatzBasis basis;
  try {
    basis = build_ansatz(eta, s.h0, options.max_closure_depth);
  } catch (const ClosureNotReached& e) {
    add_upper(r, "ansatz_closure", static_cast<double>(e.depth()),
              static_cast<double>(options.max_closure_depth), e.what());
    r.checks.back().passed = false;
    r.reason = "closure";
    finish(r);
    return r;
  }

  const GeneratorFit fit = fit_generator(basis, s, tol);
  add_upper(r, "constraint_residual", fit.residual, tol);

  const DenseOperator h0 = to_matrix(s.h0);
  const DenseOperator hv = to_matrix(s.hv);
  const DenseOperator gen = to_matrix(fit.generator);
  add_upper(r, "generator_vs_dense", coeff_distance(fit.generator, pauli_decompose(exact.generator)), tol);
  add_upper(r, "dense_constraint",
            max_abs_entry(gen.matrix * h0.matrix - h0.matrix * gen.matrix + hv.matrix), tol);
  add_upper(r, "generator_anti_hermitian", max_abs_coeff(fit.generator + adjoint(fit.generator)), tol);

  const PauliSum h_eff = effective_hamiltonian(s, fit.generator);
  add_upper(r, "h_eff_hermitian", max_abs_coeff(h_eff - adjoint(h_eff)), tol);
  const Eigen::MatrixXcd& se = exact.generator.matrix;
  const PauliSum dense_eff = pauli_decompose(
      from_matrix(h0.matrix + 0.5 * (se * hv.matrix - hv.matrix * se)));
  add_upper(r, "h_eff_vs_dense", coeff_distance(h_eff, dense_eff), tol);

  if (n > kMaxExponentialQubits || s.hv.empty()) {
    finish(r);
    return r;
  }

  // Truncated BCH is only accurate to kBchTolerance for small generators.
  const double gen_norm = operator_norm(gen.matrix);
  double lambda = 1.0;
  if (gen_norm > kBchGeneratorNorm) lambda = kBchGeneratorNorm / gen_norm;
  {
    const SplitHamiltonian part = scaled(s, lambda);
    const PauliSum hl = part.h0 + part.hv;
    const PauliSum gl = scale(fit.generator, lambda);
    const Eigen::MatrixXcd series = to_matrix(bch_conjugate(hl, gl, kBchOrder)).matrix;
    char note[64];
    std::snprintf(note, sizeof note, "hv scaled by %.6g", lambda);
    add_upper(r, "bch_order8_vs_expm", max_abs_entry(series - conjugate_by_exp(hl, gl)),
              kBchTolerance, lambda == 1.0 ? "" : note);
  }

  std::vector<double> lambdas;
  for (int k = 0; k <= options.octaves; ++k) lambdas.push_back(std::ldexp(1.0, -k));
  const SwtOptions swt_options{tol, options.max_closure_depth};
  std::vector<ScalingPoint> series;
  try {
    series = scaling_series(s, lambdas, swt_options);
  } catch (const std::exception& e) {
    add_upper(r, "scaling_series", 1.0, 0.0, e.what());
    finish(r);
    return r;
  }
  for (std::size_t k = 1; k < series.size(); ++k) {
    add_range(r, "first_order_ratio_" + std::to_string(k),
              series[k - 1].off_diagonal / series[k].off_diagonal, kFirstOrderLow, kFirstOrderHigh);
  }
  for (std::size_t k = 1; k < series.size(); ++k) {
    add_range(r, "second_order_ratio_" + std::to_string(k),
              series[k - 1].second_order / series[k].second_order, kSecondOrderLow, kSecondOrderHigh);
  }
  finish(r);
  return r;
}

}  // namespace swt
