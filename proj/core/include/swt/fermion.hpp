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
#include <vector>

#include "swt/pauli.hpp"

namespace swt {

/** A single creation (dagger) or annihilation operator on one mode. */
struct LadderOp {
  std::size_t mode = 0;
  bool dagger = false;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp cdag(std::size_t mode) { return {mode, true}; }
inline LadderOp c(std::size_t mode) { return {mode, false}; }

struct FermionTerm {
  Complex coeff{1.0, 0.0};
  std::vector<LadderOp> factors;  // applied right to left, as written
};

/**
 * Sum of products of ladder operators, kept in the order the caller wrote
 * them. No normal ordering is performed: each factor is mapped as written.
 */
class FermionOperator {
 public:
  explicit FermionOperator(std::size_t n_modes);

  std::size_t n_modes() const noexcept { return n_modes_; }
  const std::vector<FermionTerm>& terms() const noexcept { return terms_; }

  /** Throws std::out_of_range if any factor addresses a mode >= n_modes. */
  void add_term(Complex coeff, std::vector<LadderOp> factors);

  FermionOperator& operator+=(const FermionOperator& other);

 private:
  std::size_t n_modes_;
  std::vector<FermionTerm> terms_;
};

FermionOperator operator+(FermionOperator a, const FermionOperator& b);
FermionOperator operator*(Complex factor, FermionOperator a);

/** Pauli image of c_mode (dagger=false) or c_mode^dagger on n_modes qubits. */
PauliSum jordan_wigner(std::size_t n_modes, LadderOp op);

/**
 * Jordan-Wigner image: c_j -> Z_0 ... Z_{j-1} (X_j + i Y_j) / 2 with mode j on
 * qubit j, so n_j -> (I - Z_j) / 2. Factor products are expanded with exact
 * phase tracking and the result is canonical.
 */
PauliSum jordan_wigner(const FermionOperator& op);

/** Identity (trace) part of a sum, separated from everything else. */
struct IdentitySplit {
  Complex constant{0.0, 0.0};
  PauliSum rest;
};

IdentitySplit split_identity(const PauliSum& a);

}  // namespace swt
