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

#include "swt/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace swt {
namespace {

using Index = Eigen::Index;

void check_size(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw std::length_error(
        std::string(what) + ": " + std::to_string(n) + " qubits exceeds the limit of " +
        std::to_string(cap));
  }
}

std::uint64_t dense_mask(const PauliString& p, bool x_part) {
  const std::size_t n = p.n_qubits();
  const auto words = x_part ? p.x_words() : p.z_words();
  std::uint64_t mask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((words[q / 64] >> (q % 64)) & 1U) mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

PauliString string_from_masks(std::size_t n, std::uint64_t x, std::uint64_t z) {
  std::vector<std::uint64_t> xw(1, 0), zw(1, 0);
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    if (x & bit) xw[0] |= std::uint64_t{1} << q;
    if (z & bit) zw[0] |= std::uint64_t{1} << q;
  }
  return PauliString::from_words(n, std::move(xw), std::move(zw));
}

void walsh_hadamard(std::vector<Complex>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Complex a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

}  // namespace

DenseOperator to_matrix(const PauliSum& a) {
  const std::size_t n = a.n_qubits();
  check_size(n, kMaxDenseQubits, "to_matrix");
  const Index dim = Index{1} << n;
  DenseOperator out{n, Eigen::MatrixXcd::Zero(dim, dim)};
  for (const auto& t : a) {
    const std::uint64_t x = dense_mask(t.string, true);
    const std::uint64_t z = dense_mask(t.string, false);
    const Complex c = times_i_power(t.coeff, static_cast<int>(t.string.y_count() % 4));
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
      const bool odd = std::popcount(b & z) & 1;
      out.matrix(static_cast<Index>(b ^ x), static_cast<Index>(b)) += odd ? -c : c;
    }
  }
  return out;
}

DenseOperator from_matrix(Eigen::MatrixXcd m) {
  const Index dim = m.rows();
  if (dim != m.cols() || dim < 1 || !std::has_single_bit(static_cast<std::uint64_t>(dim))) {
    throw std::invalid_argument("dense operator must be square with power-of-two dimension");
  }
  const std::size_t n = static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(dim)));
  check_size(n, kMaxDenseQubits, "from_matrix");
  return {n, std::move(m)};
}

PauliSum pauli_decompose(const DenseOperator& m) {
  const Index dim = m.matrix.rows();
  if (dim != m.matrix.cols() || dim != (Index{1} << m.n_qubits)) {
    throw std::invalid_argument("pauli_decompose: dimension does not match 2^n_qubits");
  }
  check_size(m.n_qubits, kMaxDenseQubits, "pauli_decompose");
  const auto udim = static_cast<std::uint64_t>(dim);
  std::vector<PauliTerm> terms;
  std::vector<Complex> v(udim);
  for (std::uint64_t x = 0; x < udim; ++x) {
    for (std::uint64_t b = 0; b < udim; ++b) {
      v[b] = m.matrix(static_cast<Index>(b ^ x), static_cast<Index>(b));
    }
    walsh_hadamard(v);
    for (std::uint64_t z = 0; z < udim; ++z) {
      if (v[z] == Complex(0.0, 0.0)) continue;
      // conj(i^ny) = i^(4 - ny)
      const int ny = std::popcount(x & z);
      const Complex c = times_i_power(v[z] / static_cast<double>(udim), (4 - ny % 4) % 4);
      terms.push_back({string_from_masks(m.n_qubits, x, z), c});
    }
  }
  return PauliSum(m.n_qubits, std::move(terms));
}

ExactGenerator exact_generator_dense(
    const SplitHamiltonian& s, std::optional<double> degeneracy_tol) {
  const std::size_t n = std::max(s.h0.n_qubits(), s.hv.n_qubits());
  const Eigen::MatrixXcd h0 = to_matrix(canonicalize(s.h0, 0.0)).matrix;
  const Eigen::MatrixXcd hv = to_matrix(s.hv).matrix;
  const Index dim = h0.rows();
  const Eigen::VectorXd e = h0.diagonal().real();

  double tol;
  if (degeneracy_tol) {
    tol = *degeneracy_tol;
  } else {
    const double range = dim > 0 ? e.maxCoeff() - e.minCoeff() : 0.0;
    tol = range > 0.0 ? 1e-9 * range : 1e-9;
  }

  const double hv_floor = kDefaultDropTolerance * max_abs_entry(hv);
  ExactGenerator out{{n, Eigen::MatrixXcd::Zero(dim, dim)}, {{}, tol}};
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) {
      if (i == j || hv(i, j) == Complex(0.0, 0.0)) continue;
      const double gap = e(i) - e(j);
      if (std::abs(gap) >= tol) {
        out.generator.matrix(i, j) = hv(i, j) / gap;
      }
    }
  }
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j) {
      if (std::abs(e(i) - e(j)) < tol && std::abs(hv(i, j)) > hv_floor) {
        out.degeneracies.pairs.push_back(
            {static_cast<std::size_t>(i), static_cast<std::size_t>(j), e(i), hv(i, j)});
      }
    }
  }
  return out;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  constexpr int kOrder = 18;
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);

  // Horner evaluation of sum_k scaled^k / k!
  const Index dim = a.rows();
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
  for (int k = kOrder; k >= 1; --k) {
    result = Eigen::MatrixXcd::Identity(dim, dim) + (scaled * result) / static_cast<double>(k);
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Eigen::MatrixXcd conjugate_by_exp(const PauliSum& h, const PauliSum& gen) {
  check_size(std::max(h.n_qubits(), gen.n_qubits()), kMaxExponentialQubits, "conjugate_by_exp");
  const Eigen::MatrixXcd s = to_matrix(gen).matrix;
  return expm(s) * to_matrix(h).matrix * expm(-s);
}

double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.adjoint() * m, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

Eigen::MatrixXcd off_diagonal(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd out = m;
  out.diagonal().setZero();
  return out;
}

double max_abs_entry(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::vector<double> sector_eigenvalues(
    const PauliSum& h, std::optional<std::size_t> particle_number) {
  const Eigen::MatrixXcd full = to_matrix(h).matrix;
  std::vector<Index> keep;
  for (Index b = 0; b < full.rows(); ++b) {
    if (!particle_number ||
        static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(b))) == *particle_number) {
      keep.push_back(b);
    }
  }
  const Index k = static_cast<Index>(keep.size());
  Eigen::MatrixXcd block(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) block(i, j) = full(keep[i], keep[j]);
  }
  std::vector<double> out;
  if (k == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block, Eigen::EigenvaluesOnly);
  out.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
  return out;
}

SpectralComparison spectral_compare(
    const PauliSum& h, const PauliSum& h_eff, std::optional<std::size_t> particle_number,
    std::optional<std::size_t> lowest_k) {
  if (h.n_qubits() != h_eff.n_qubits()) {
    throw std::invalid_argument("spectral_compare: qubit counts differ");
  }
  SpectralComparison out;
  out.exact = sector_eigenvalues(h, particle_number);
  out.effective = sector_eigenvalues(h_eff, particle_number);
  out.delta.resize(out.exact.size());
  for (std::size_t i = 0; i < out.exact.size(); ++i) {
    out.delta[i] = std::abs(out.exact[i] - out.effective[i]);
  }
  const std::size_t k = std::min(lowest_k.value_or(out.delta.size()), out.delta.size());
  for (std::size_t i = 0; i < k; ++i) out.max_delta = std::max(out.max_delta, out.delta[i]);
  return out;
}

}  // namespace swt
