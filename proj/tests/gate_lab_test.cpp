/*
 * Copyright 2026 The fockgate Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fockgate/gate_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"

#include "fockgate/evolution.hpp"

namespace fockgate {
namespace {

constexpr double kEps = 1e-12;
const Complex I{0.0, 1.0};

// index in gate_registry(): q1H q1V q2H q2V loss1 loss2
FockBasisState six(int q1h, int q1v, int q2h, int q2v, int l1 = 0, int l2 = 0)
{
  return FockBasisState{q1h, q1v, q2h, q2v, l1, l2};
}

PureState basis_input(BasisInput b)
{
  return encoded_basis_state(Encoding::PhaseGate, static_cast<int>(b));
}

double max_diff(const GateMatrix &a, const GateMatrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(Encoding, BasisStatesAreUnitNormTwoPhotonStates)
{
  for (auto encoding : {Encoding::PhaseGate, Encoding::Cnot})
    for (int k = 0; k < 4; ++k) {
      const PureState s = encoded_basis_state(encoding, k);
      EXPECT_NEAR(norm_squared(s), 1.0, kEps);
      for (const auto &[basis, a] : s.terms())
        EXPECT_EQ(basis.total(), 2);
    }
  // q1H q1V q2H q2V
  EXPECT_EQ(basis_input(BasisInput::VH).amplitude({0, 1, 1, 0}), Complex(1.0, 0.0));
  const PureState cnot10 = encoded_basis_state(Encoding::Cnot, 2);
  EXPECT_NEAR(std::abs(cnot10.amplitude({1, 0, 0, 1}) - 1.0 / std::sqrt(2.0)), 0.0, kEps);
  EXPECT_NEAR(std::abs(cnot10.amplitude({1, 0, 1, 0}) - 1.0 / std::sqrt(2.0)), 0.0, kEps);
  const PureState cnot11 = encoded_basis_state(Encoding::Cnot, 3);
  EXPECT_NEAR(std::abs(cnot11.amplitude({1, 0, 1, 0}) + 1.0 / std::sqrt(2.0)), 0.0, kEps);
  EXPECT_THROW(encoded_basis_state(Encoding::Cnot, 4), std::out_of_range);
  EXPECT_THROW(parse_encoding("swap"), std::invalid_argument);
}

TEST(BuildGateCircuit, ComposedEntries)
{
  const GateLab lab;
  const ModeUnitary &u = lab.unitary();
  const ModeRegistry reg = gate_registry();
  EXPECT_EQ(lab.circuit().registry, reg);
  EXPECT_NEAR(std::abs(u(reg.index_of("q1H"), reg.index_of("q2H")) + I * std::sqrt(2.0 / 3.0)),
              0.0, kEps);
  EXPECT_NEAR(std::abs(u(reg.index_of("q1V"), reg.index_of("q1V")) - std::sqrt(1.0 / 3.0)), 0.0,
              kEps);
  for (Eigen::Index k = 0; k < 6; ++k) {
    EXPECT_NEAR(u.matrix().col(k).norm(), 1.0, kEps);
    EXPECT_NEAR(u.matrix().row(k).norm(), 1.0, kEps);
  }
  // H rails never couple to V rails or loss modes
  EXPECT_EQ(u(reg.index_of("loss1"), reg.index_of("q1H")), Complex{});
  EXPECT_EQ(u(reg.index_of("q2V"), reg.index_of("q2H")), Complex{});
}

TEST(RunGate, DiagonalAmplitudes)
{
  const GateLab lab;
  const PureState vv = lab.run_gate(basis_input(BasisInput::VV));
  EXPECT_NEAR(std::abs(vv.amplitude(six(0, 1, 0, 1)) - 1.0 / 3.0), 0.0, kEps);
  EXPECT_NEAR(norm_squared(vv), 1.0, kEps);

  const PureState hh = lab.run_gate(basis_input(BasisInput::HH));
  EXPECT_NEAR(std::abs(hh.amplitude(six(1, 0, 1, 0)) + 1.0 / 3.0), 0.0, kEps);
  const double bunched = std::norm(hh.amplitude(six(2, 0, 0, 0))) + std::norm(hh.amplitude(six(0, 0, 2, 0)));
  EXPECT_NEAR(bunched, 8.0 / 9.0, kEps);
}

TEST(RunGate, RejectsWrongPhotonContent)
{
  const GateLab lab;
  const ModeRegistry ports = port_registry();
  EXPECT_THROW(lab.run_gate(make_basis_state(ports, {1, 1, 0, 0})), std::invalid_argument);
  EXPECT_THROW(lab.run_gate(make_basis_state(ports, {0, 0, 0, 1})), std::invalid_argument);
  EXPECT_THROW(lab.run_gate(PureState(ports)), std::invalid_argument);
  EXPECT_THROW(lab.run_gate(vacuum(gate_registry())), std::invalid_argument);
}

TEST(Postselect, FullRule)
{
  const GateLab lab;
  const PostSelection hh = postselect(lab.run_gate(basis_input(BasisInput::HH)), PostSelectionRule::full());
  ASSERT_FALSE(hh.empty());
  EXPECT_NEAR(hh.probability, 1.0 / 9.0, kEps);
  EXPECT_NEAR(std::abs(hh.state->amplitude(six(1, 0, 1, 0)) + 1.0), 0.0, kEps);

  const PostSelection vh = postselect(lab.run_gate(basis_input(BasisInput::VH)), PostSelectionRule::full());
  EXPECT_NEAR(vh.probability, 1.0 / 9.0, kEps);
  EXPECT_NEAR(std::abs(vh.state->amplitude(six(0, 1, 1, 0)) - 1.0), 0.0, kEps);

  const PostSelection none = postselect(vacuum(gate_registry()), PostSelectionRule::full());
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(none.probability, 0.0);
}

TEST(PostSelectionRule, GroupsMustBeDisjoint)
{
  using Kind = PostSelectionRule::Kind;
  EXPECT_THROW(PostSelectionRule(Kind::Custom, {{{"q1H", "q1V"}, 1}, {{"q1V"}, 0}}),
               std::invalid_argument);
  EXPECT_THROW(PostSelectionRule::practical(3), std::invalid_argument);
  EXPECT_TRUE(PostSelectionRule::full().accepts(six(1, 0, 0, 1), gate_registry()));
  EXPECT_FALSE(PostSelectionRule::full().accepts(six(1, 0, 0, 1, 1, 0), gate_registry()));
}

TEST(TruthTable, PhaseGate)
{
  const GateReport report = GateLab().truth_table(Encoding::PhaseGate);
  GateMatrix expected = GateMatrix::Zero();
  expected.diagonal() << 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0;
  EXPECT_LT(max_diff(report.truth_table, expected), kEps);
  for (double p : report.success)
    EXPECT_NEAR(p, 1.0 / 9.0, kEps);
  EXPECT_LT(max_diff(report.conditional_table, ideal_cz()), kEps);
}

TEST(TruthTable, Cnot)
{
  const GateReport report = GateLab().truth_table(Encoding::Cnot);
  EXPECT_LT(max_diff(report.truth_table, ideal_cnot() / 3.0), kEps);
  for (double p : report.success)
    EXPECT_NEAR(p, 1.0 / 9.0, kEps);
}

TEST(TruthTable, NoInteractionAtFullReflection)
{
  const GateReport report = GateLab(1.0).truth_table(Encoding::PhaseGate);
  EXPECT_LT(max_diff(report.truth_table, GateMatrix::Identity()), kEps);
}

TEST(TruthTable, HalfReflectivityKillsTheHHEntry)
{
  // Attenuated V and reflected H both contribute sqrt(R) per photon, while
  // the HH amplitude is 2R - 1 = 0.
  const GateReport report = GateLab(0.5).truth_table(Encoding::PhaseGate);
  GateMatrix expected = GateMatrix::Zero();
  expected.diagonal() << 0.5, 0.5, 0.5, 0.0;
  EXPECT_LT(max_diff(report.truth_table, expected), kEps);
  EXPECT_NEAR(report.success[3], 0.0, kEps);
  EXPECT_NEAR(report.fidelity, 9.0 / 16.0, kEps);
}

TEST(TruthTable, PracticalRuleGivesSameTable)
{
  const GateLab lab;
  const GateReport full = lab.truth_table(Encoding::Cnot);
  const GateReport practical = lab.truth_table(Encoding::Cnot, PostSelectionRule::practical(2));
  EXPECT_LT(max_diff(full.truth_table, practical.truth_table), kEps);
  EXPECT_EQ(practical.rule, "practical");
}

TEST(ErrorBudget, BasisRows)
{
  const GateLab lab;
  struct Row {
    BasisInput input;
    double loss, bunching;
  };
  for (const Row &row : {Row{BasisInput::VV, 8.0 / 9.0, 0.0}, Row{BasisInput::VH, 2.0 / 3.0, 2.0 / 9.0},
                         Row{BasisInput::HV, 2.0 / 3.0, 2.0 / 9.0}, Row{BasisInput::HH, 0.0, 8.0 / 9.0}}) {
    const ErrorBudget b = lab.error_budget(row.input);
    EXPECT_NEAR(b.success, 1.0 / 9.0, kEps);
    EXPECT_NEAR(b.loss, row.loss, kEps);
    EXPECT_NEAR(b.bunching, row.bunching, kEps);
    EXPECT_NEAR(b.total(), 1.0, kEps);
  }
}

TEST(RuleEquivalence, BasisAndRandomInputs)
{
  const GateLab lab;
  Rng rng(31);
  std::vector<PureState> inputs{basis_input(BasisInput::HH)};
  for (int k = 0; k < 50; ++k)
    inputs.push_back(random_product_input(rng));
  const RuleEquivalenceReport report = lab.rule_equivalence(inputs);
  ASSERT_EQ(report.cases.size(), inputs.size());
  EXPECT_TRUE(report.holds());
  for (const auto &c : report.cases) {
    EXPECT_TRUE(c.in_contract);
    EXPECT_LE(c.max_deviation, kEps);
  }
}

TEST(RuleEquivalence, ThreePhotonInputIsFlagged)
{
  const GateLab lab;
  const std::vector<PureState> inputs{make_basis_state(port_registry(), {1, 1, 1, 0})};
  const RuleEquivalenceReport report = lab.rule_equivalence(inputs);
  ASSERT_EQ(report.cases.size(), 1u);
  EXPECT_FALSE(report.cases[0].in_contract);
  EXPECT_FALSE(report.cases[0].equivalent);
  EXPECT_TRUE(report.holds());
}

TEST(RuleEquivalence, TwoPhotonsInOnePortStayEquivalent)
{
  const GateLab lab;
  const std::vector<PureState> inputs{make_basis_state(port_registry(), {1, 1, 0, 0})};
  const RuleEquivalenceReport report = lab.rule_equivalence(inputs);
  EXPECT_TRUE(report.cases[0].in_contract);
  EXPECT_TRUE(report.cases[0].equivalent);
}

TEST(Fidelity, AgainstIdealGates)
{
  const GateLab lab;
  const GateReport phase = lab.truth_table(Encoding::PhaseGate);
  const GateReport cnot = lab.truth_table(Encoding::Cnot);
  EXPECT_NEAR(fidelity(phase, ideal_cz()), 1.0, kEps);
  EXPECT_NEAR(fidelity(cnot, ideal_cnot()), 1.0, kEps);
  EXPECT_NEAR(fidelity(phase, GateMatrix::Identity()), 0.25, kEps);
  EXPECT_THROW(fidelity(phase, GateMatrix::Ones()), std::invalid_argument);
}

TEST(BalancedReflectivity, ClosedForm)
{
  EXPECT_EQ(balanced_reflectivity(), 1.0 / 3.0);
  const double r = balanced_reflectivity();
  EXPECT_NEAR(std::abs(2.0 * r - 1.0), r, 1e-15);
}

TEST(ReflectivityScan, Rows)
{
  const std::vector<double> grid{0.0, 1.0 / 3.0, 0.5, 1.0};
  const auto rows = reflectivity_scan(grid);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto &row : rows) {
    const double r = row.reflectivity;
    EXPECT_NEAR(std::abs(row.vacuum - 1.0), 0.0, kEps);
    EXPECT_NEAR(std::abs(row.single_01 - std::sqrt(r)), 0.0, kEps);
    EXPECT_NEAR(std::abs(row.single_10 - std::sqrt(r)), 0.0, kEps);
    EXPECT_NEAR(std::abs(row.two_photon - (2.0 * r - 1.0)), 0.0, kEps);
  }
  EXPECT_NEAR(std::abs(rows[1].two_photon + 1.0 / 3.0), 0.0, kEps);
  EXPECT_NEAR(rows[1].imbalance, 0.0, kEps);
  EXPECT_NEAR(std::abs(rows[2].two_photon), 0.0, kEps);
  EXPECT_NEAR(std::abs(rows[0].two_photon + 1.0), 0.0, kEps);
}

TEST(GateLabProperty, BudgetCompletenessOnRandomProducts)
{
  const GateLab lab;
  Rng rng(77);
  for (int k = 0; k < 100; ++k)
    EXPECT_NEAR(lab.error_budget(random_product_input(rng)).total(), 1.0, kEps);
}

TEST(GateLabProperty, LinearExtensionOfTheTruthTable)
{
  const GateLab lab;
  const GateReport report = lab.truth_table(Encoding::PhaseGate);
  const PureState loss_vacuum = vacuum(loss_registry());
  Rng rng(78);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Vector4cd alpha;
    std::array<Complex, 4> coefficients;
    for (int k = 0; k < 4; ++k)
      coefficients[static_cast<std::size_t>(k)] = alpha(k) = random_complex(rng);
    const double n = alpha.norm();
    alpha /= n;
    for (auto &c : coefficients)
      c /= n;

    const PostSelection selected =
        postselect(lab.run_gate(encode(Encoding::PhaseGate, coefficients)), PostSelectionRule::full());
    const Eigen::Vector4cd expected = report.truth_table * alpha;
    for (int out = 0; out < 4; ++out) {
      const PureState ket = tensor(encoded_basis_state(Encoding::PhaseGate, out), loss_vacuum);
      const Complex got = inner_product(ket, *selected.state) * std::sqrt(selected.probability);
      EXPECT_NEAR(std::abs(got - expected(out)), 0.0, kEps);
    }
  }
}

TEST(GateLabProperty, UniformEfficiency)
{
  const GateLab lab;
  Rng rng(79);
  for (auto encoding : {Encoding::PhaseGate, Encoding::Cnot}) {
    for (int k = 0; k < 4; ++k)
      EXPECT_NEAR(postselect(lab.run_gate(encoded_basis_state(encoding, k)), PostSelectionRule::full())
                      .probability,
                  1.0 / 9.0, kEps);
    for (int trial = 0; trial < 20; ++trial)
      EXPECT_NEAR(postselect(lab.run_gate(random_encoded_input(encoding, rng)), PostSelectionRule::full())
                      .probability,
                  1.0 / 9.0, kEps);
  }
}

TEST(GateLabProperty, SignStructure)
{
  const GateMatrix t = GateLab().truth_table(Encoding::PhaseGate).truth_table;
  int negatives = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (std::abs(t(r, c)) < kEps)
        continue;
      EXPECT_NEAR(t(r, c).imag(), 0.0, kEps);
      if (t(r, c).real() < 0.0) {
        ++negatives;
        EXPECT_EQ(r, 3);
        EXPECT_EQ(c, 3);
      } else {
        EXPECT_NEAR(t(r, c).real(), 1.0 / 3.0, kEps);
      }
    }
  EXPECT_EQ(negatives, 1);
}

TEST(GateLabProperty, OnlyOneThirdBalancesSuccess)
{
  for (int k = 0; k < 50; ++k) {
    const double r = k / 100.0;
    if (std::abs(r - 1.0 / 3.0) < 1e-9)
      continue;
    const GateReport report = GateLab(r).truth_table(Encoding::PhaseGate);
    const auto [lo, hi] = std::minmax_element(report.success.begin(), report.success.end());
    EXPECT_GT(*hi - *lo, 1e-6) << "R=" << r;
  }
}

TEST(GateLabProperty, RescaledColumnsAreOrthonormal)
{
  for (auto encoding : {Encoding::PhaseGate, Encoding::Cnot}) {
    const GateMatrix scaled = 3.0 * GateLab().truth_table(encoding).truth_table;
    EXPECT_LT(max_diff(scaled.adjoint() * scaled, GateMatrix::Identity()), kEps);
  }
}

} // namespace
} // namespace fockgate
