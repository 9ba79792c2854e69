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

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <vector>

#include "swt/engine.hpp"
#include "swt/pauli.hpp"

namespace swt {

inline constexpr std::size_t kMaxDenseQubits = 14;
inline constexpr std::size_t kMaxExponentialQubits = 10;

/**
 * Dense 2^n x 2^n matrix. Qubit q is bit (n - 1 - q) of the basis index, so
 * qubit 0 is the outermost Kronecker factor.
 */
struct DenseOperator {
  std::size_t n_qubits = 0;
  Eigen::MatrixXcd matrix;
};

/** Throws std::length_error above kMaxDenseQubits. */
DenseOperator to_matrix(const PauliSum& a);

/** Throws std::invalid_argument unless the matrix is square with power-of-two size. */
DenseOperator from_matrix(Eigen::MatrixXcd m);

/** Coefficients tr(P^dagger m) / 2^n via a Walsh-Hadamard transform per X pattern. */
PauliSum pauli_decompose(const DenseOperator& m);

struct DegeneracyReport {
  std::vector<DegeneratePair> pairs;  // i < j
  double degeneracy_tol = 0.0;
};

struct ExactGenerator {
  DenseOperator generator;
  DegeneracyReport degeneracies;
};

/**
 * S_ij = hv_ij / (E_i - E_j) with E the diagonal of h0. Pairs closer than
 * degeneracy_tol get S_ij = 0 and are reported when hv couples them. The
 * default tolerance is 1e-9 times the spectral range of h0.
 */
ExactGenerator exact_generator_dense(
    const SplitHamiltonian& s, std::optional<double> degeneracy_tol = std::nullopt);

/** Scaling and squaring with a degree-18 Taylor polynomial. */
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/** e^gen h e^-gen. Throws std::length_error above kMaxExponentialQubits. */
Eigen::MatrixXcd conjugate_by_exp(const PauliSum& h, const PauliSum& gen);

/** Spectral (largest singular value) norm. */
double operator_norm(const Eigen::MatrixXcd& m);

Eigen::MatrixXcd off_diagonal(const Eigen::MatrixXcd& m);

double max_abs_entry(const Eigen::MatrixXcd& m);

/**
 * Ascending eigenvalues of a Hermitian operator, optionally restricted to
 * basis states with the given number of set bits (occupied modes).
 */
std::vector<double> sector_eigenvalues(
    const PauliSum& h, std::optional<std::size_t> particle_number = std::nullopt);

struct SpectralComparison {
  std::vector<double> exact;
  std::vector<double> effective;
  std::vector<double> delta;
  double max_delta = 0.0;  // over the first lowest_k levels
};

SpectralComparison spectral_compare(
    const PauliSum& h, const PauliSum& h_eff,
    std::optional<std::size_t> particle_number = std::nullopt,
    std::optional<std::size_t> lowest_k = std::nullopt);

}  // namespace swt
