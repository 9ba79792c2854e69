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

#include "swt/fermion.hpp"

namespace swt {

enum class Spin { Up, Down };

/**
 * Single-impurity Anderson model parameters.
 *
 * Two-site model: n_bath = 1, eps = {bath level}, V = {hybridization}; the
 * impurity sits at -mu. Chain model: eps = {impurity, bath_1 .. bath_N} with
 * every site at (eps_i - mu), V = {V_1 .. V_N}.
 */
struct SiamParams {
  std::size_t n_bath = 1;
  double U = 0.0;
  double mu = 0.0;
  std::vector<double> eps;
  std::vector<double> V;
};

/**
 * Mode of (site, spin): all spin-up sites first (impurity = site 0), then all
 * spin-down sites, so spin-down impurity is mode n_bath + 1.
 */
std::size_t siam_mode(std::size_t site, Spin spin, std::size_t n_bath);

/** U n_imp,dn n_imp,up - mu sum_s n_imp,s + eps_2 sum_s n_bath,s + V sum_s (c+_imp c_bath + h.c.) */
FermionOperator siam_two_site(const SiamParams& p);

/** sum_{i,s} V_i (c+_0s c_is + h.c.) + U n_0dn n_0up + sum_{i,s} (eps_i - mu) n_is */
FermionOperator siam_chain(const SiamParams& p);

enum class ModelKind { TwoSite, Chain };

struct ModelConfig {
  ModelKind kind = ModelKind::TwoSite;
  SiamParams params;
};

FermionOperator build_model(const ModelConfig& config);

}  // namespace swt
