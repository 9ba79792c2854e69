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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "swt/dense.hpp"
#include "swt/models.hpp"

using namespace swt;
using swt::testing::max_abs;

namespace {

PauliSum two_site(double U, double mu, double eps2, double V) {
  return jordan_wigner(siam_two_site({1, U, mu, {eps2}, {V}}));
}

PauliString ps(const char* s) { return PauliString::from_str(s); }

double distance(const PauliSum& a, const PauliSum& b) { return max_abs_coeff(a - b); }

std::set<std::string> strings(const PauliSum& a) {
  std::set<std::string> out;
  for (const auto& t : a) out.insert(t.string.str());
  return out;
}

}  // namespace

TEST(Split, PartitionsByDiagonality) {
  const PauliSum h = two_site(4, 1, 0.5, 0.2);
  const SplitHamiltonian s = split(h);
  EXPECT_EQ(s.hv.size(), 4u);
  EXPECT_EQ(strings(s.hv), (std::set<std::string>{"XXII", "YYII", "IIXX", "IIYY"}));
  for (const auto& t : s.h0) EXPECT_TRUE(t.string.is_diagonal());
  EXPECT_EQ(s.h0 + s.hv, h);
}

TEST(Split, TrivialCases) {
  EXPECT_TRUE(split(PauliSum(2, {{ps("ZZ"), 1.0}})).hv.empty());
  EXPECT_TRUE(split(PauliSum(2, {{ps("XX"), 0.5}, {ps("YY"), 0.5}})).h0.empty());
}

TEST(Eta, TwoSiteStringPattern) {
  const SplitHamiltonian s = split(two_site(4, 1, 0.5, 0.2));
  const PauliSum eta = compute_eta(s);
  EXPECT_EQ(strings(eta), (std::set<std::string>{"YXII", "XYII", "YXZI", "XYZI",
                                                 "IIYX", "IIXY", "ZIYX", "ZIXY"}));
  const Eigen::MatrixXcd h0 = to_matrix(s.h0).matrix, hv = to_matrix(s.hv).matrix;
  EXPECT_LE(distance(eta, pauli_decompose(from_matrix(h0 * hv - hv * h0))), 1e-12);
  EXPECT_TRUE(compute_eta(split(PauliSum(2, {{ps("ZZ"), 1.0}}))).empty());
}

TEST(Ansatz, TwoSiteHasEightDirections) {
  const SplitHamiltonian s = split(two_site(4, 1, 0.5, 0.2));
  const AnsatzBasis b = build_ansatz(compute_eta(s), s.h0, 4);
  EXPECT_EQ(b.directions.size(), 8u);
  EXPECT_EQ(b.seed_count, 8u);
  EXPECT_EQ(b.closure_depth, 1u);
}

TEST(Ansatz, EmptyEtaGivesEmptyBasis) {
  const AnsatzBasis b = build_ansatz(PauliSum(2), PauliSum(2, {{ps("ZZ"), 1.0}}), 4);
  EXPECT_TRUE(b.directions.empty());
  EXPECT_EQ(b.closure_depth, 0u);
  EXPECT_THROW(build_ansatz(PauliSum(2), PauliSum(2), 0), std::invalid_argument);
}

TEST(Ansatz, ClosureAddsDressedStrings) {
  // The flip gap 2 (Z1 + 0.7 Z2 + 0.4) needs a Z1 Z2-dressed direction.
  const PauliSum h0(3, {{ps("ZZI"), 1.0}, {ps("ZIZ"), 0.7}, {ps("ZII"), 0.4}});
  const SplitHamiltonian s{h0, PauliSum(3, {{ps("XII"), 0.1}})};
  const AnsatzBasis b = build_ansatz(compute_eta(s), s.h0, 4);
  EXPECT_EQ(b.seed_count, 3u);
  EXPECT_EQ(b.directions.size(), 4u);
  EXPECT_EQ(b.closure_depth, 2u);
  EXPECT_EQ(b.directions.back(), ps("YZZ"));
  const GeneratorFit fit = solve_generator(b, s);
  EXPECT_LE(distance(fit.generator, pauli_decompose(exact_generator_dense(s).generator)), 1e-12);
  try {
    build_ansatz(compute_eta(s), s.h0, 1);
    FAIL() << "expected ClosureNotReached";
  } catch (const ClosureNotReached& e) {
    EXPECT_EQ(e.depth(), 1u);
    EXPECT_GT(e.frontier_size(), 0u);
  }
}

TEST(Ansatz, ChainContainsStringTails) {
  const PauliSum h = jordan_wigner(siam_chain({3, 4.0, 0.3, {0.1, 0.7, -0.4, 1.3}, {0.2, 0.15, 0.1}}));
  const SplitHamiltonian s = split(h);
  const AnsatzBasis b = build_ansatz(compute_eta(s), s.h0, 4);
  std::set<std::string> dirs;
  for (const auto& d : b.directions) dirs.insert(d.str());
  EXPECT_TRUE(dirs.count("YZZXIIII"));
  EXPECT_TRUE(dirs.count("YZZXZIII"));
  EXPECT_TRUE(dirs.count("ZIIIYZZX"));
}

TEST(Solve, GenericMatchesDenseGenerator) {
  const SplitHamiltonian s = split(two_site(4, 1, 0.5, 0.2));
  const GeneratorFit fit = solve_generator(build_ansatz(compute_eta(s), s.h0, 4), s);
  EXPECT_LE(fit.residual, 1e-10);
  EXPECT_TRUE(has_imaginary_coefficients(fit.generator));
  EXPECT_LE(distance(fit.generator, pauli_decompose(exact_generator_dense(s).generator)), 1e-10);
  EXPECT_LE(norm(commutator(fit.generator, s.h0) + s.hv), 1e-9);
}

TEST(Solve, ParticleHoleSymmetricPoint) {
  // mu = U/2, eps2 = 0: only Z-dressed directions survive, each of size V/U.
  const double U = 4, V = 0.2;
  const SplitHamiltonian s = split(two_site(U, U / 2, 0.0, V));
  const GeneratorFit fit = solve_generator(build_ansatz(compute_eta(s), s.h0, 4), s);
  EXPECT_EQ(fit.generator.size(), 4u);
  EXPECT_NEAR(fit.generator.coefficient(ps("YXZI")).imag(), V / U, 1e-12);
  EXPECT_NEAR(fit.generator.coefficient(ps("XYZI")).imag(), -V / U, 1e-12);
  EXPECT_EQ(fit.generator.coefficient(ps("YXII")), Complex(0.0));
  EXPECT_LE(distance(fit.generator, pauli_decompose(exact_generator_dense(s).generator)), 1e-12);
}

TEST(Solve, DegeneratePointIsInfeasible) {
  // mu = eps2 = 0: the empty-impurity channel has a zero denominator.
  const double U = 4, V = 0.2;
  const SplitHamiltonian s = split(two_site(U, 0.0, 0.0, V));
  const AnsatzBasis b = build_ansatz(compute_eta(s), s.h0, 4);
  const GeneratorFit fit = fit_generator(b, s, 1e-10);
  EXPECT_GT(fit.residual, 1e-3);
  EXPECT_NEAR(std::abs(fit.generator.coefficient(ps("YXII"))), V / (4 * U), 1e-12);
  EXPECT_EQ(strings(fit.unmatched), (std::set<std::string>{"XXII", "YYII", "XXZI", "YYZI",
                                                           "IIXX", "IIYY", "ZIXX", "ZIYY"}));
  for (const auto& t : fit.unmatched) EXPECT_NEAR(t.coeff.real(), V / 4, 1e-12);
  try {
    solve_generator(b, s);
    FAIL() << "expected EliminationInfeasible";
  } catch (const EliminationInfeasible& e) {
    EXPECT_EQ(e.fit().unmatched, fit.unmatched);
  }
}

TEST(Solve, EmptyHvGivesZeroGenerator) {
  const SplitHamiltonian s = split(two_site(4, 1, 0.5, 0.0));
  const GeneratorFit fit = solve_generator(build_ansatz(compute_eta(s), s.h0, 4), s);
  EXPECT_TRUE(fit.generator.empty());
  EXPECT_EQ(fit.residual, 0.0);
}

TEST(Solve, LinearInHybridization) {
  const SplitHamiltonian s = split(two_site(4, 1, 0.5, 0.2));
  const SplitHamiltonian s3{s.h0, scale(s.hv, 3.0)};
  const PauliSum g = solve_generator(build_ansatz(compute_eta(s), s.h0, 4), s).generator;
  const PauliSum g3 = solve_generator(build_ansatz(compute_eta(s3), s3.h0, 4), s3).generator;
  EXPECT_LE(distance(g3, scale(g, 3.0)), 1e-10);
  EXPECT_LE(distance(effective_hamiltonian(s3, g3) - s.h0, scale(effective_hamiltonian(s, g) - s.h0, 9.0)), 1e-10);
}

TEST(EffectiveHamiltonian, MatchesDenseSecondOrder) {
  const SplitHamiltonian s = split(two_site(4, 1, 0.5, 0.2));
  const PauliSum g = solve_generator(build_ansatz(compute_eta(s), s.h0, 4), s).generator;
  const PauliSum h_eff = effective_hamiltonian(s, g);
  const Eigen::MatrixXcd h0 = to_matrix(s.h0).matrix, hv = to_matrix(s.hv).matrix;
  const Eigen::MatrixXcd se = exact_generator_dense(s).generator.matrix;
  EXPECT_LE(distance(h_eff, pauli_decompose(from_matrix(h0 + 0.5 * (se * hv - hv * se)))), 1e-10);
  EXPECT_TRUE(has_real_coefficients(h_eff));
  EXPECT_EQ(effective_hamiltonian(s, PauliSum(4)), s.h0);
}

TEST(Bch, OrderZeroAndOne) {
  const SplitHamiltonian s = split(two_site(4, 1, 0.5, 0.2));
  const PauliSum h = s.h0 + s.hv;
  const PauliSum g = solve_generator(build_ansatz(compute_eta(s), s.h0, 4), s).generator;
  EXPECT_EQ(bch_conjugate(h, g, 0), h);
  // The first-order term cancels hv string by string.
  const PauliSum first = bch_conjugate(h, g, 1);
  EXPECT_LE(distance(first, s.h0 + commutator(g, s.hv)), 1e-12);
  EXPECT_THROW(bch_conjugate(h, g, -1), std::invalid_argument);
}

TEST(Bch, OrderEightMatchesMatrixExponential) {
  const SplitHamiltonian s = split(two_site(4, 1, 0.5, 0.05));
  const PauliSum h = s.h0 + s.hv;
  const PauliSum g = solve_generator(build_ansatz(compute_eta(s), s.h0, 4), s).generator;
  ASSERT_LE(operator_norm(to_matrix(g).matrix), 0.1);
  EXPECT_LE(max_abs(to_matrix(bch_conjugate(h, g, 8)).matrix - conjugate_by_exp(h, g)), 1e-8);
}

TEST(SchriefferWolff, Pipeline) {
  const SwtReport r = schrieffer_wolff(two_site(4, 1, 0.5, 0.2));
  EXPECT_EQ(r.eta.size(), 8u);
  EXPECT_EQ(r.closure_depth, 1u);
  EXPECT_LE(r.residual, 1e-10);
  EXPECT_THROW(schrieffer_wolff(two_site(4, 0, 0, 0.2)), EliminationInfeasible);
}
