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

#include "swt/engine.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace swt {

SplitHamiltonian split(const PauliSum& h) {
  std::vector<PauliTerm> diagonal, off_diagonal;
  for (const auto& t : h) (t.string.is_diagonal() ? diagonal : off_diagonal).push_back(t);
  return {canonicalize(h.n_qubits(), std::move(diagonal), 0.0),
          canonicalize(h.n_qubits(), std::move(off_diagonal), 0.0)};
}

PauliSum compute_eta(const SplitHamiltonian& s) { return commutator(s.h0, s.hv); }

ClosureNotReached::ClosureNotReached(std::size_t depth, std::size_t frontier_size)
    : std::runtime_error(
          "ansatz closure not reached within depth " + std::to_string(depth) +
          " (" + std::to_string(frontier_size) + " strings still unexpanded)"),
      depth_(depth),
      frontier_size_(frontier_size) {}

AnsatzBasis build_ansatz(const PauliSum& eta, const PauliSum& h0, std::size_t max_depth) {
  if (max_depth < 1) throw std::invalid_argument("build_ansatz: max_depth must be >= 1");

  AnsatzBasis basis;
  std::set<PauliString> seen;
  for (const auto& t : eta) {
    if (t.string.is_diagonal()) continue;
    if (seen.insert(t.string).second) basis.directions.push_back(t.string);
  }
  basis.seed_count = basis.directions.size();

  std::vector<PauliString> frontier = basis.directions;
  while (!frontier.empty()) {
    if (basis.closure_depth == max_depth) {
      throw ClosureNotReached(basis.closure_depth, frontier.size());
    }
    ++basis.closure_depth;
    std::vector<PauliString> next;
    for (const auto& p : frontier) {
      for (const auto& a : h0) {
        if (p.commutes_with(a.string)) continue;
        const PauliString q = product(p, a.string).string;
        for (const auto& b : h0) {
          if (q.commutes_with(b.string)) continue;
          PauliString r = product(q, b.string).string;
          if (seen.insert(r).second) {
            basis.directions.push_back(r);
            next.push_back(std::move(r));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

EliminationInfeasible::EliminationInfeasible(GeneratorFit fit)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "first-order elimination infeasible: residual " << fit.residual
            << ", unmatched strings:";
        for (const auto& t : fit.unmatched) msg << ' ' << t.string.str();
        return msg.str();
      }()),
      fit_(std::move(fit)) {}

GeneratorFit fit_generator(const AnsatzBasis& basis, const SplitHamiltonian& s, double tol) {
  const std::size_t n = s.h0.n_qubits() ? s.h0.n_qubits() : s.hv.n_qubits();
  GeneratorFit fit{PauliSum(n), 0.0, PauliSum(n), 0};
  if (s.hv.empty()) return fit;

  // Column k holds the Pauli coefficients of [i P_k, h0].
  std::vector<PauliSum> columns;
  columns.reserve(basis.directions.size());
  for (const auto& p : basis.directions) {
    columns.push_back(commutator(PauliSum({p, Complex(0.0, 1.0)}), s.h0));
  }

  std::vector<PauliString> rows;
  for (const auto& t : s.hv) rows.push_back(t.string);
  for (const auto& col : columns) {
    for (const auto& t : col) rows.push_back(t.string);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const auto row_of = [&](const PauliString& str) {
    return static_cast<Eigen::Index>(std::lower_bound(rows.begin(), rows.end(), str) - rows.begin());
  };

  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index k = static_cast<Eigen::Index>(columns.size());
  // Real and imaginary parts stacked: rows [0, m) real, [m, 2m) imaginary.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * m, k);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * m);
  for (Eigen::Index col = 0; col < k; ++col) {
    for (const auto& t : columns[static_cast<std::size_t>(col)]) {
      const Eigen::Index r = row_of(t.string);
      a(r, col) = t.coeff.real();
      a(m + r, col) = t.coeff.imag();
    }
  }
  for (const auto& t : s.hv) {
    const Eigen::Index r = row_of(t.string);
    rhs(r) = -t.coeff.real();
    rhs(m + r) = -t.coeff.imag();
  }

  Eigen::VectorXd solution = Eigen::VectorXd::Zero(k);
  if (k > 0) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
    solution = cod.solve(rhs);
    fit.rank = static_cast<std::size_t>(cod.rank());
  }
  const Eigen::VectorXd resid = a * solution - rhs;  // = [S, h0] + hv
  fit.residual = resid.norm();

  std::vector<PauliTerm> gen;
  gen.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index col = 0; col < k; ++col) {
    gen.push_back({basis.directions[static_cast<std::size_t>(col)], Complex(0.0, solution(col))});
  }
  fit.generator = PauliSum(n, std::move(gen));

  // Left-over strings; any residual above tol has an entry above tol / sqrt(m).
  const double cutoff = tol / std::sqrt(static_cast<double>(m));
  std::vector<PauliTerm> left;
  for (Eigen::Index r = 0; r < m; ++r) {
    const Complex v(resid(r), resid(m + r));
    if (std::abs(v) > cutoff) left.push_back({rows[static_cast<std::size_t>(r)], v});
  }
  fit.unmatched = canonicalize(n, std::move(left), 0.0);
  return fit;
}

GeneratorFit solve_generator(const AnsatzBasis& basis, const SplitHamiltonian& s, double tol) {
  GeneratorFit fit = fit_generator(basis, s, tol);
  if (fit.residual > tol) throw EliminationInfeasible(std::move(fit));
  return fit;
}

PauliSum effective_hamiltonian(const SplitHamiltonian& s, const PauliSum& gen) {
  return add(s.h0, scale(commutator(gen, s.hv), 0.5));
}

PauliSum bch_conjugate(const PauliSum& h, const PauliSum& gen, int order) {
  if (order < 0) throw std::invalid_argument("bch_conjugate: order must be >= 0");
  PauliSum result = h;
  PauliSum term = h;
  for (int k = 1; k <= order; ++k) {
    term = scale(commutator(gen, term), 1.0 / k);
    if (term.empty()) break;
    result = add(result, term);
  }
  return result;
}

SwtReport schrieffer_wolff(const PauliSum& h, const SwtOptions& options) {
  const SplitHamiltonian parts = split(h);
  SwtReport report;
  report.eta = compute_eta(parts);
  const AnsatzBasis basis = build_ansatz(report.eta, parts.h0, options.max_closure_depth);
  report.closure_depth = basis.closure_depth;
  GeneratorFit fit = solve_generator(basis, parts, options.tol);
  report.generator = std::move(fit.generator);
  report.residual = fit.residual;
  report.h_eff = effective_hamiltonian(parts, report.generator);
  return report;
}

}  // namespace swt
