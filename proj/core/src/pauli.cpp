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

#include "swt/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace swt {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n_qubits) {
  return (n_qubits + kWordBits - 1) / kWordBits;
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(
        std::string(what) + ": qubit count mismatch (" + std::to_string(a) +
        " vs " + std::to_string(b) + ")");
  }
}

// Lexicographic from qubit 0: the first differing bit decides, 1 > 0.
std::strong_ordering compare_bits(
    std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    const std::uint64_t diff = a[w] ^ b[w];
    if (diff == 0) continue;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a[w] & lowest) ? std::strong_ordering::greater
                           : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::size_t n_qubits)
    : n_qubits_(n_qubits),
      x_(word_count(n_qubits), 0),
      z_(word_count(n_qubits), 0) {}

PauliString PauliString::from_str(std::string_view text) {
  PauliString s(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        s.set(q, Pauli::X);
        break;
      case 'Y':
        s.set(q, Pauli::Y);
        break;
      case 'Z':
        s.set(q, Pauli::Z);
        break;
      default:
        throw std::invalid_argument(
            "invalid Pauli character '" + std::string(1, text[q]) +
            "' at position " + std::to_string(q));
    }
  }
  return s;
}

PauliString PauliString::from_words(
    std::size_t n_qubits, std::vector<std::uint64_t> x,
    std::vector<std::uint64_t> z) {
  const std::size_t words = word_count(n_qubits);
  if (x.size() != words || z.size() != words) {
    throw std::invalid_argument("PauliString::from_words: wrong word count");
  }
  if (words > 0 && n_qubits % kWordBits != 0) {
    const std::uint64_t spill = ~std::uint64_t{0} << (n_qubits % kWordBits);
    if ((x.back() | z.back()) & spill) {
      throw std::invalid_argument(
          "PauliString::from_words: bits set beyond n_qubits");
    }
  }
  PauliString s;
  s.n_qubits_ = n_qubits;
  s.x_ = std::move(x);
  s.z_ = std::move(z);
  return s;
}

Pauli PauliString::get(std::size_t qubit) const {
  if (qubit >= n_qubits_) throw std::out_of_range("qubit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (qubit % kWordBits);
  const bool x = x_[qubit / kWordBits] & mask;
  const bool z = z_[qubit / kWordBits] & mask;
  if (x) return z ? Pauli::Y : Pauli::X;
  return z ? Pauli::Z : Pauli::I;
}

void PauliString::set(std::size_t qubit, Pauli p) {
  if (qubit >= n_qubits_) throw std::out_of_range("qubit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (qubit % kWordBits);
  std::uint64_t& x = x_[qubit / kWordBits];
  std::uint64_t& z = z_[qubit / kWordBits];
  x &= ~mask;
  z &= ~mask;
  if (p == Pauli::X || p == Pauli::Y) x |= mask;
  if (p == Pauli::Z || p == Pauli::Y) z |= mask;
}

bool PauliString::is_diagonal() const noexcept {
  return std::all_of(x_.begin(), x_.end(), [](std::uint64_t w) { return w == 0; });
}

bool PauliString::is_identity() const noexcept {
  return is_diagonal() &&
         std::all_of(z_.begin(), z_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t PauliString::weight() const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) total += std::popcount(x_[w] | z_[w]);
  return total;
}

std::size_t PauliString::y_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) total += std::popcount(x_[w] & z_[w]);
  return total;
}

bool PauliString::commutes_with(const PauliString& other) const {
  require_same_size(n_qubits_, other.n_qubits_, "commutes_with");
  std::uint64_t parity = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    parity ^= (x_[w] & other.z_[w]) ^ (z_[w] & other.x_[w]);
  }
  return std::popcount(parity) % 2 == 0;
}

std::string PauliString::str() const {
  std::string out(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) out[q] = to_char(get(q));
  return out;
}

std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
  if (auto c = a.n_qubits_ <=> b.n_qubits_; c != 0) return c;
  if (auto c = compare_bits(a.z_, b.z_); c != 0) return c;
  return compare_bits(a.x_, b.x_);
}

PauliProduct product(const PauliString& a, const PauliString& b) {
  require_same_size(a.n_qubits(), b.n_qubits(), "multiply");
  const auto ax = a.x_words(), az = a.z_words();
  const auto bx = b.x_words(), bz = b.z_words();
  std::vector<std::uint64_t> x(ax.size()), z(az.size());
  int phase = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) {
    const std::uint64_t xa = ax[w] & ~az[w], ya = ax[w] & az[w], za = ~ax[w] & az[w];
    const std::uint64_t xb = bx[w] & ~bz[w], yb = bx[w] & bz[w], zb = ~bx[w] & bz[w];
    // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
    const std::uint64_t plus = (xa & yb) | (ya & zb) | (za & xb);
    const std::uint64_t minus = (ya & xb) | (za & yb) | (xa & zb);
    phase += std::popcount(plus) - std::popcount(minus);
    x[w] = ax[w] ^ bx[w];
    z[w] = az[w] ^ bz[w];
  }
  return {PauliString::from_words(a.n_qubits(), std::move(x), std::move(z)),
          ((phase % 4) + 4) % 4};
}

Complex times_i_power(Complex c, int k) noexcept {
  switch (((k % 4) + 4) % 4) {
    case 1:
      return {-c.imag(), c.real()};
    case 2:
      return {-c.real(), -c.imag()};
    case 3:
      return {c.imag(), -c.real()};
    default:
      return c;
  }
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  auto [string, phase] = product(a.string, b.string);
  return {std::move(string), times_i_power(a.coeff * b.coeff, phase)};
}

// ---------------------------------------------------------------------------
// PauliSum

namespace {

double raw_max(const std::vector<PauliTerm>& terms) {
  double m = 0.0;
  for (const auto& t : terms) m = std::max(m, std::abs(t.coeff));
  return m;
}

PauliSum canonicalize_relative(std::size_t n_qubits, std::vector<PauliTerm> terms) {
  const double tol = kDefaultDropTolerance * raw_max(terms);
  return canonicalize(n_qubits, std::move(terms), tol);
}

}  // namespace

PauliSum::PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : PauliSum(canonicalize_relative(n_qubits, std::move(terms))) {}

PauliSum::PauliSum(PauliTerm term)
    : PauliSum(term.string.n_qubits(), std::vector<PauliTerm>{std::move(term)}) {}

PauliSum PauliSum::identity(std::size_t n_qubits, Complex coeff) {
  return PauliSum(n_qubits, {{PauliString(n_qubits), coeff}});
}

Complex PauliSum::coefficient(const PauliString& string) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), string,
      [](const PauliTerm& t, const PauliString& s) { return t.string < s; });
  if (it != terms_.end() && it->string == string) return it->coeff;
  return 0.0;
}

bool PauliSum::contains(const PauliString& string) const {
  return coefficient(string) != Complex(0.0);
}

PauliSum canonicalize(
    std::size_t n_qubits, std::vector<PauliTerm> terms, double drop_tolerance) {
  if (drop_tolerance < 0.0 || std::isnan(drop_tolerance)) {
    throw std::invalid_argument("canonicalize: drop_tolerance must be >= 0");
  }
  for (const auto& t : terms) {
    require_same_size(n_qubits, t.string.n_qubits(), "canonicalize");
  }
  std::stable_sort(terms.begin(), terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return a.string < b.string;
  });

  PauliSum out(n_qubits);
  out.terms_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    Complex acc = terms[i].coeff;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].string == terms[i].string) acc += terms[j++].coeff;
    const double mag = std::abs(acc);
    if (mag > drop_tolerance && mag != 0.0) {
      out.terms_.push_back({std::move(terms[i].string), acc});
    }
    i = j;
  }
  return out;
}

PauliSum canonicalize(const PauliSum& a, double drop_tolerance) {
  return canonicalize(a.n_qubits(), a.terms(), drop_tolerance);
}

PauliSum add(const PauliSum& a, const PauliSum& b) {
  require_same_size(a.n_qubits(), b.n_qubits(), "add");
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() + b.size());
  terms.insert(terms.end(), a.begin(), a.end());
  terms.insert(terms.end(), b.begin(), b.end());
  return PauliSum(a.n_qubits(), std::move(terms));
}

PauliSum scale(const PauliSum& a, Complex factor) {
  std::vector<PauliTerm> terms(a.begin(), a.end());
  for (auto& t : terms) t.coeff *= factor;
  return PauliSum(a.n_qubits(), std::move(terms));
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  require_same_size(a.n_qubits(), b.n_qubits(), "multiply");
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a) {
    for (const auto& tb : b) terms.push_back(multiply(ta, tb));
  }
  return PauliSum(a.n_qubits(), std::move(terms));
}

namespace {

PauliSum ordered_commutator(const PauliSum& a, const PauliSum& b) {
  std::vector<PauliTerm> terms;
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      if (ta.string.commutes_with(tb.string)) continue;
      PauliTerm t = multiply(ta, tb);
      t.coeff *= 2.0;
      terms.push_back(std::move(t));
    }
  }
  return PauliSum(a.n_qubits(), std::move(terms));
}

}  // namespace

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  require_same_size(a.n_qubits(), b.n_qubits(), "commutator");
  if (precedes(b, a)) return -ordered_commutator(b, a);
  return ordered_commutator(a, b);
}

PauliSum adjoint(const PauliSum& a) {
  std::vector<PauliTerm> terms(a.begin(), a.end());
  for (auto& t : terms) t.coeff = std::conj(t.coeff);
  return canonicalize(a.n_qubits(), std::move(terms), 0.0);
}

double norm(const PauliSum& a) {
  double sum = 0.0;
  for (const auto& t : a) sum += std::norm(t.coeff);
  return std::sqrt(sum);
}

double max_abs_coeff(const PauliSum& a) { return raw_max(a.terms()); }

bool has_real_coefficients(const PauliSum& a) {
  return std::all_of(a.begin(), a.end(), [](const PauliTerm& t) { return t.coeff.imag() == 0.0; });
}

bool has_imaginary_coefficients(const PauliSum& a) {
  return std::all_of(a.begin(), a.end(), [](const PauliTerm& t) { return t.coeff.real() == 0.0; });
}

bool precedes(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) return a.n_qubits() < b.n_qubits();
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const PauliTerm& ta = a.terms()[i];
    const PauliTerm& tb = b.terms()[i];
    if (auto c = ta.string <=> tb.string; c != 0) return c < 0;
    if (ta.coeff.real() != tb.coeff.real()) return ta.coeff.real() < tb.coeff.real();
    if (ta.coeff.imag() != tb.coeff.imag()) return ta.coeff.imag() < tb.coeff.imag();
  }
  return false;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) { return add(a, b); }

PauliSum operator-(const PauliSum& a, const PauliSum& b) { return add(a, -b); }

PauliSum operator-(const PauliSum& a) {
  PauliSum out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

PauliSum operator*(Complex factor, const PauliSum& a) { return scale(a, factor); }

PauliSum operator*(const PauliSum& a, const PauliSum& b) { return multiply(a, b); }

}  // namespace swt
