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

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swt {

using Complex = std::complex<double>;

/** Relative pruning threshold used whenever a PauliSum is assembled from raw terms. */
inline constexpr double kDefaultDropTolerance = 1e-12;

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

/**
 * Tensor product of single-qubit Paulis in symplectic (x, z) form.
 *
 * Qubit q lives in bit (q % 64) of word (q / 64) of both bit vectors:
 * (0,0) = I, (1,0) = X, (1,1) = Y, (0,1) = Z. There is no stored phase; the
 * string always denotes the Hermitian operator P_0 (x) P_1 (x) ... with qubit
 * 0 outermost, and all phases live in term coefficients.
 *
 * Strings are totally ordered: qubit count, then z bits, then x bits, each bit
 * vector compared lexicographically from qubit 0 with 0 < 1.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);

  /** Parses a string over {I,X,Y,Z}; character 0 is qubit 0. */
  static PauliString from_str(std::string_view text);

  /** Builds from packed bit vectors; bits at or above n_qubits must be clear. */
  static PauliString from_words(
      std::size_t n_qubits, std::vector<std::uint64_t> x,
      std::vector<std::uint64_t> z);

  std::size_t n_qubits() const noexcept { return n_qubits_; }

  Pauli get(std::size_t qubit) const;
  void set(std::size_t qubit, Pauli p);

  /** True iff the string is a product of I and Z only. */
  bool is_diagonal() const noexcept;
  bool is_identity() const noexcept;
  std::size_t weight() const noexcept;
  std::size_t y_count() const noexcept;

  bool commutes_with(const PauliString& other) const;

  std::span<const std::uint64_t> x_words() const noexcept { return x_; }
  std::span<const std::uint64_t> z_words() const noexcept { return z_; }

  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend std::strong_ordering operator<=>(
      const PauliString& a, const PauliString& b);

 private:
  std::size_t n_qubits_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/** a * b = i^phase * string. */
struct PauliProduct {
  PauliString string;
  int phase = 0;  // in [0, 4)
};

PauliProduct product(const PauliString& a, const PauliString& b);

/** Multiplies c by i^k without rounding. */
Complex times_i_power(Complex c, int k) noexcept;

struct PauliTerm {
  PauliString string;
  Complex coeff{1.0, 0.0};

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/** The unique term whose matrix is matrix(a) * matrix(b). */
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/**
 * Complex-weighted sum of Pauli strings on a fixed qubit count.
 *
 * Always canonical: strings strictly increasing and every coefficient
 * nonzero. Constructing from raw terms merges duplicates and drops
 * coefficients at or below kDefaultDropTolerance times the largest raw
 * magnitude, so exact cancellations vanish regardless of overall scale.
 */
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}
  PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms);
  explicit PauliSum(PauliTerm term);

  static PauliSum identity(std::size_t n_qubits, Complex coeff = 1.0);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /** Coefficient of `string`, zero when absent. */
  Complex coefficient(const PauliString& string) const;
  bool contains(const PauliString& string) const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  friend PauliSum canonicalize(
      std::size_t n_qubits, std::vector<PauliTerm> terms,
      double drop_tolerance);
  friend PauliSum operator-(const PauliSum& a);

  std::size_t n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/**
 * Sorts, merges like strings in input order and drops every term with
 * |coeff| <= drop_tolerance (exact zeros are always dropped).
 */
PauliSum canonicalize(
    std::size_t n_qubits, std::vector<PauliTerm> terms, double drop_tolerance);
PauliSum canonicalize(const PauliSum& a, double drop_tolerance);

PauliSum add(const PauliSum& a, const PauliSum& b);
PauliSum scale(const PauliSum& a, Complex factor);
PauliSum multiply(const PauliSum& a, const PauliSum& b);

/**
 * [a, b] = ab - ba. Only anticommuting string pairs contribute, each with
 * twice its product. [b, a] is returned as the exact negation of [a, b].
 */
PauliSum commutator(const PauliSum& a, const PauliSum& b);

PauliSum adjoint(const PauliSum& a);

/** 2-norm of the coefficient vector. */
double norm(const PauliSum& a);
double max_abs_coeff(const PauliSum& a);

/** All coefficients exactly real / exactly imaginary. */
bool has_real_coefficients(const PauliSum& a);
bool has_imaginary_coefficients(const PauliSum& a);

/** Lexicographic order on canonical term lists; used to fix evaluation order. */
bool precedes(const PauliSum& a, const PauliSum& b);

PauliSum operator+(const PauliSum& a, const PauliSum& b);
PauliSum operator-(const PauliSum& a, const PauliSum& b);
PauliSum operator-(const PauliSum& a);
PauliSum operator*(Complex factor, const PauliSum& a);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

}  // namespace swt
