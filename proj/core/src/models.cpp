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

#include "swt/models.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swt {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument("parameter-shape mismatch: " + message);
}

void check_common(const SiamParams& p) {
  require(std::isfinite(p.U) && p.U >= 0.0, "U must be finite and >= 0");
  require(std::isfinite(p.mu), "mu must be finite");
  for (double e : p.eps) require(std::isfinite(e), "eps entries must be finite");
  for (double v : p.V) require(std::isfinite(v), "V entries must be finite");
}

void add_number(FermionOperator& h, double coeff, std::size_t mode) {
  h.add_term(coeff, {cdag(mode), c(mode)});
}

void add_hopping(FermionOperator& h, double coeff, std::size_t a, std::size_t b) {
  h.add_term(coeff, {cdag(a), c(b)});
  h.add_term(coeff, {cdag(b), c(a)});
}

}  // namespace

std::size_t siam_mode(std::size_t site, Spin spin, std::size_t n_bath) {
  if (site > n_bath) throw std::out_of_range("site index out of range");
  return spin == Spin::Up ? site : site + n_bath + 1;
}

FermionOperator siam_two_site(const SiamParams& p) {
  check_common(p);
  require(p.n_bath == 1, "two-site model needs n_bath = 1");
  require(p.eps.size() == 1, "two-site model takes eps = [eps_2]");
  require(p.V.size() == 1, "two-site model takes V = [V]");

  FermionOperator h(4);
  const auto imp = [](Spin s) { return siam_mode(0, s, 1); };
  const auto bath = [](Spin s) { return siam_mode(1, s, 1); };
  h.add_term(p.U, {cdag(imp(Spin::Down)), c(imp(Spin::Down)),
                   cdag(imp(Spin::Up)), c(imp(Spin::Up))});
  for (Spin s : {Spin::Up, Spin::Down}) {
    add_number(h, -p.mu, imp(s));
    add_number(h, p.eps[0], bath(s));
    add_hopping(h, p.V[0], imp(s), bath(s));
  }
  return h;
}

FermionOperator siam_chain(const SiamParams& p) {
  check_common(p);
  const std::size_t n = p.n_bath;
  require(n >= 1, "chain model needs n_bath >= 1");
  require(p.V.size() == n, "chain model takes V = [V_1 .. V_N]");
  require(p.eps.size() == n + 1, "chain model takes eps = [eps_0 .. eps_N]");

  FermionOperator h(2 * (n + 1));
  for (Spin s : {Spin::Up, Spin::Down}) {
    for (std::size_t i = 1; i <= n; ++i) {
      add_hopping(h, p.V[i - 1], siam_mode(0, s, n), siam_mode(i, s, n));
    }
  }
  h.add_term(p.U, {cdag(siam_mode(0, Spin::Down, n)), c(siam_mode(0, Spin::Down, n)),
                   cdag(siam_mode(0, Spin::Up, n)), c(siam_mode(0, Spin::Up, n))});
  for (std::size_t i = 0; i <= n; ++i) {
    for (Spin s : {Spin::Up, Spin::Down}) add_number(h, p.eps[i] - p.mu, siam_mode(i, s, n));
  }
  return h;
}

FermionOperator build_model(const ModelConfig& config) {
  return config.kind == ModelKind::TwoSite ? siam_two_site(config.params)
                                           : siam_chain(config.params);
}

}  // namespace swt
