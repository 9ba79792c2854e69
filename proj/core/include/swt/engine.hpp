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
#include <stdexcept>
#include <string>
#include <vector>

#include "swt/pauli.hpp"

namespace swt {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultClosureDepth = 4;

/** Diagonal (I/Z-only strings) and off-diagonal parts of a qubit Hamiltonian. */
struct SplitHamiltonian {
  PauliSum h0;
  PauliSum hv;
};

SplitHamiltonian split(const PauliSum& h);

/** eta = [h0, hv]; its strings seed the generator ansatz. */
PauliSum compute_eta(const SplitHamiltonian& s);

/**
 * Candidate generator directions. The first seed_count entries are the
 * strings of eta in canonical order; later entries were admitted by closure.
 */
struct AnsatzBasis {
  std::vector<PauliString> directions;
  std::size_t seed_count = 0;
  std::size_t closure_depth = 0;
};

class ClosureNotReached : public std::runtime_error {
 public:
  ClosureNotReached(std::size_t depth, std::size_t frontier_size);

  std::size_t depth() const noexcept { return depth_; }
  std::size_t frontier_size() const noexcept { return frontier_size_; }

 private:
  std::size_t depth_;
  std::size_t frontier_size_;
};

/**
 * Seeds with the strings of eta and closes the set under P -> strings of
 * [[P, h0], h0]. The double commutator maps generator-type strings back to
 * generator-type strings, which admits the Z-dressed variants that an
 * operator-valued coefficient would otherwise need.
 *
 * Each round expands the newest strings; closure_depth is the number of
 * rounds run until one added nothing. Throws ClosureNotReached if strings are
 * still being added after max_depth rounds.
 */
AnsatzBasis build_ansatz(const PauliSum& eta, const PauliSum& h0, std::size_t max_depth);

struct GeneratorFit {
  PauliSum generator;     // sum_k i r_k P_k, anti-Hermitian
  double residual = 0.0;  // || [generator, h0] + hv ||_2 over Pauli coefficients
  PauliSum unmatched;     // the part of [generator, h0] + hv left over
  std::size_t rank = 0;
};

/**
 * Minimum-norm least-squares solution of sum_k i r_k [P_k, h0] = -hv over
 * real r_k. Never throws on a large residual; see solve_generator.
 */
GeneratorFit fit_generator(const AnsatzBasis& basis, const SplitHamiltonian& s, double tol);

class EliminationInfeasible : public std::runtime_error {
 public:
  explicit EliminationInfeasible(GeneratorFit fit);

  const GeneratorFit& fit() const noexcept { return fit_; }

 private:
  GeneratorFit fit_;
};

/** fit_generator, throwing EliminationInfeasible when residual > tol. */
GeneratorFit solve_generator(
    const AnsatzBasis& basis, const SplitHamiltonian& s, double tol = kDefaultTolerance);

/** h0 + [gen, hv] / 2. */
PauliSum effective_hamiltonian(const SplitHamiltonian& s, const PauliSum& gen);

/** sum_{k=0}^{order} ad_gen^k(h) / k!, the truncated expansion of e^gen h e^-gen. */
PauliSum bch_conjugate(const PauliSum& h, const PauliSum& gen, int order);

struct SwtOptions {
  double tol = kDefaultTolerance;
  std::size_t max_closure_depth = kDefaultClosureDepth;
};

/** A computational basis pair (i, j) whose energies coincide while hv couples them. */
struct DegeneratePair {
  std::size_t i = 0;
  std::size_t j = 0;
  double energy = 0.0;
  Complex hv{0.0, 0.0};
};

struct SwtReport {
  PauliSum eta;
  PauliSum generator;
  PauliSum h_eff;
  double residual = 0.0;
  std::size_t closure_depth = 0;
  std::vector<DegeneratePair> degenerate_pairs;  // filled only by the dense oracle
};

/**
 * split -> eta -> ansatz -> generator -> effective Hamiltonian. Throws
 * ClosureNotReached or EliminationInfeasible.
 */
SwtReport schrieffer_wolff(const PauliSum& h, const SwtOptions& options = {});

}  // namespace swt
