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

#include "swt/fermion.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace swt {

FermionOperator::FermionOperator(std::size_t n_modes) : n_modes_(n_modes) {
  if (n_modes == 0) throw std::invalid_argument("FermionOperator: n_modes must be positive");
}

void FermionOperator::add_term(Complex coeff, std::vector<LadderOp> factors) {
  for (const auto& f : factors) {
    if (f.mode >= n_modes_) {
      throw std::out_of_range(
          "mode index " + std::to_string(f.mode) + " out of range for " +
          std::to_string(n_modes_) + " modes");
    }
  }
  terms_.push_back({coeff, std::move(factors)});
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  if (other.n_modes_ != n_modes_) {
    throw std::invalid_argument("FermionOperator: mode count mismatch");
  }
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionOperator operator+(FermionOperator a, const FermionOperator& b) {
  a += b;
  return a;
}

FermionOperator operator*(Complex factor, FermionOperator a) {
  FermionOperator out(a.n_modes());
  for (const auto& t : a.terms()) out.add_term(factor * t.coeff, t.factors);
  return out;
}

PauliSum jordan_wigner(std::size_t n_modes, LadderOp op) {
  if (op.mode >= n_modes) throw std::out_of_range("mode index out of range");
  PauliString x_part(n_modes);
  for (std::size_t q = 0; q < op.mode; ++q) x_part.set(q, Pauli::Z);
  PauliString y_part = x_part;
  x_part.set(op.mode, Pauli::X);
  y_part.set(op.mode, Pauli::Y);
  const Complex y_coeff = op.dagger ? Complex(0.0, -0.5) : Complex(0.0, 0.5);
  return PauliSum(n_modes, {{std::move(x_part), 0.5}, {std::move(y_part), y_coeff}});
}

PauliSum jordan_wigner(const FermionOperator& op) {
  const std::size_t n = op.n_modes();
  std::vector<PauliSum> annihilate, create;
  annihilate.reserve(n);
  create.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    annihilate.push_back(jordan_wigner(n, c(j)));
    create.push_back(jordan_wigner(n, cdag(j)));
  }

  std::vector<PauliTerm> raw;
  for (const auto& term : op.terms()) {
    std::vector<PauliTerm> partial{{PauliString(n), term.coeff}};
    for (const auto& f : term.factors) {
      const PauliSum& image = f.dagger ? create[f.mode] : annihilate[f.mode];
      std::vector<PauliTerm> next;
      next.reserve(partial.size() * image.size());
      for (const auto& p : partial) {
        for (const auto& q : image) next.push_back(multiply(p, q));
      }
      partial = std::move(next);
    }
    raw.insert(raw.end(), partial.begin(), partial.end());
  }
  return PauliSum(n, std::move(raw));
}

IdentitySplit split_identity(const PauliSum& a) {
  IdentitySplit out{0.0, PauliSum(a.n_qubits())};
  std::vector<PauliTerm> rest;
  for (const auto& t : a) {
    if (t.string.is_identity()) {
      out.constant = t.coeff;
    } else {
      rest.push_back(t);
    }
  }
  out.rest = canonicalize(a.n_qubits(), std::move(rest), 0.0);
  return out;
}

}  // namespace swt
