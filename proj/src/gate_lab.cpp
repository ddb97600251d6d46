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
#include <set>
#include <stdexcept>

#include "fockgate/evolution.hpp"

namespace fockgate {

double balanced_reflectivity()
{
  // On [0, 1/2) the two-photon amplitude is 1 - 2R; setting 1 - 2R = R gives
  // R = 1 / (2 + 1).
  return 1.0 / (2.0 + 1.0);
}

ModeRegistry port_registry() { return ModeRegistry({"q1H", "q1V", "q2H", "q2V"}); }

ModeRegistry loss_registry() { return ModeRegistry({"loss1", "loss2"}); }

std::string_view to_string(Encoding encoding)
{
  return encoding == Encoding::PhaseGate ? "phase" : "cnot";
}

Encoding parse_encoding(std::string_view name)
{
  if (name == "phase")
    return Encoding::PhaseGate;
  if (name == "cnot")
    return Encoding::Cnot;
  throw std::invalid_argument("unknown encoding '" + std::string(name) +
                              "' (expected phase or cnot)");
}

std::array<std::string, 4> basis_labels(Encoding encoding)
{
  if (encoding == Encoding::PhaseGate)
    return {"VV", "VH", "HV", "HH"};
  return {"00", "01", "10", "11"};
}

namespace {

// Single-photon qubit state on one port, modes [pH, pV].
PureState port_qubit(int port, int value, bool diagonal)
{
  const std::string p = "q" + std::to_string(port);
  ModeRegistry registry({p + "H", p + "V"});
  const PureState h = make_basis_state(registry, {1, 0});
  const PureState v = make_basis_state(registry, {0, 1});
  if (!diagonal)
    return value == 1 ? h : v;
  const Complex s{1.0 / std::sqrt(2.0), 0.0};
  return value == 0 ? s * (v + h) : s * (v - h);
}

int port_photons(const FockBasisState &basis, int port)
{
  // port_registry() order: q1H, q1V, q2H, q2V
  const std::size_t first = port == 1 ? 0 : 2;
  return basis[first] + basis[first + 1];
}

} // namespace

PureState encoded_basis_state(Encoding encoding, int index)
{
  if (index < 0 || index > 3)
    throw std::out_of_range("two-qubit basis index must be in [0, 3]");
  const int q1 = index >> 1;
  const int q2 = index & 1;
  return tensor(port_qubit(1, q1, false), port_qubit(2, q2, encoding == Encoding::Cnot));
}

PureState encode(Encoding encoding, const std::array<Complex, 4> &amplitudes)
{
  PureState sum(port_registry());
  for (int k = 0; k < 4; ++k)
    sum = sum + amplitudes[static_cast<std::size_t>(k)] * encoded_basis_state(encoding, k);
  return sum;
}

PureState random_product_input(Rng &rng)
{
  auto port = [&rng](int index) {
    const std::string p = "q" + std::to_string(index);
    ModeRegistry registry({p + "H", p + "V"});
    const Complex h = random_complex(rng);
    const Complex v = random_complex(rng);
    return normalize(PureState(registry, {{FockBasisState{1, 0}, h}, {FockBasisState{0, 1}, v}}))
        .first;
  };
  PureState first = port(1);
  return tensor(first, port(2));
}

PureState random_encoded_input(Encoding encoding, Rng &rng)
{
  std::array<Complex, 4> amplitudes;
  for (auto &a : amplitudes)
    a = random_complex(rng);
  return normalize(encode(encoding, amplitudes)).first;
}

PostSelectionRule::PostSelectionRule(Kind kind, std::vector<PhotonCountConstraint> constraints)
    : kind_(kind), constraints_(std::move(constraints))
{
  std::set<std::string> seen;
  for (const auto &group : constraints_)
    for (const auto &mode : group.modes)
      if (!seen.insert(mode).second)
        throw std::invalid_argument("mode '" + mode + "' appears in two constraint groups");
}

PostSelectionRule PostSelectionRule::full()
{
  return PostSelectionRule(Kind::Full, {{{"q1H", "q1V"}, 1},
                                        {{"q2H", "q2V"}, 1},
                                        {{"loss1"}, 0},
                                        {{"loss2"}, 0}});
}

PostSelectionRule PostSelectionRule::practical(int port)
{
  if (port != 1 && port != 2)
    throw std::invalid_argument("designated output port must be 1 or 2");
  const std::string p = "q" + std::to_string(port);
  return PostSelectionRule(Kind::Practical,
                           {{{"loss1"}, 0}, {{"loss2"}, 0}, {{p + "H", p + "V"}, 1}});
}

std::string PostSelectionRule::name() const
{
  switch (kind_) {
  case Kind::Full:
    return "full";
  case Kind::Practical:
    return "practical";
  case Kind::Custom:
    break;
  }
  return "custom";
}

bool PostSelectionRule::accepts(const FockBasisState &basis, const ModeRegistry &registry) const
{
  for (const auto &group : constraints_) {
    int photons = 0;
    for (const auto &mode : group.modes)
      photons += basis[registry.index_of(mode)];
    if (photons != group.count)
      return false;
  }
  return true;
}

PostSelection postselect(const PureState &raw, const PostSelectionRule &rule)
{
  PureState::Terms kept;
  for (const auto &[basis, amp] : raw.terms())
    if (rule.accepts(basis, raw.registry()))
      kept.emplace(basis, amp);
  PureState projected(raw.registry(), std::move(kept));
  const double probability = norm_squared(projected);
  if (projected.empty() || std::sqrt(probability) < kTolerance)
    return {};
  return {normalize(projected).first, probability};
}

ErrorBudget budget_of(const PureState &raw)
{
  const ModeRegistry &reg = raw.registry();
  const std::size_t q1h = reg.index_of("q1H"), q1v = reg.index_of("q1V");
  const std::size_t q2h = reg.index_of("q2H"), q2v = reg.index_of("q2V");
  const std::size_t l1 = reg.index_of("loss1"), l2 = reg.index_of("loss2");
  const PostSelectionRule full = PostSelectionRule::full();

  ErrorBudget budget;
  for (const auto &[basis, amp] : raw.terms()) {
    const double p = std::norm(amp);
    if (basis[l1] + basis[l2] > 0)
      budget.loss += p;
    else if (basis[q1h] + basis[q1v] >= 2 || basis[q2h] + basis[q2v] >= 2)
      budget.bunching += p;
    if (full.accepts(basis, reg))
      budget.success += p;
  }
  return budget;
}

Circuit build_gate_circuit(double reflectivity)
{
  Circuit circuit{gate_registry(), {}};
  auto &e = circuit.elements;
  e.emplace_back(PolarizingBS{"q1", std::nullopt});
  e.emplace_back(PolarizingBS{"q2", std::nullopt});
  e.emplace_back(BeamSplitter{reflectivity, "q1H", "q2H"});
  e.emplace_back(Attenuator{reflectivity, "q1V", "loss1"});
  e.emplace_back(Attenuator{reflectivity, "q2V", "loss2"});
  e.emplace_back(PolarizingBS{"q1", std::nullopt});
  e.emplace_back(PolarizingBS{"q2", std::nullopt});
  return circuit;
}

GateMatrix ideal_cz()
{
  GateMatrix cz = GateMatrix::Identity();
  cz(3, 3) = -1.0;
  return cz;
}

GateMatrix ideal_cnot()
{
  GateMatrix cnot = GateMatrix::Zero();
  cnot(0, 0) = 1.0;
  cnot(1, 1) = 1.0;
  cnot(3, 2) = 1.0;
  cnot(2, 3) = 1.0;
  return cnot;
}

GateMatrix ideal_for(Encoding encoding)
{
  return encoding == Encoding::PhaseGate ? ideal_cz() : ideal_cnot();
}

double fidelity(const GateReport &report, const GateMatrix &ideal)
{
  if (!is_unitary(ideal))
    throw std::invalid_argument("ideal gate is not unitary");
  const Complex overlap = (ideal.adjoint() * report.conditional_table).trace();
  return std::norm(overlap) / 16.0;
}

bool RuleEquivalenceReport::holds() const
{
  return std::all_of(cases.begin(), cases.end(),
                     [](const RuleEquivalenceCase &c) { return !c.in_contract || c.equivalent; });
}

std::vector<ScanRow> reflectivity_scan(std::span<const double> grid)
{
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (double r : grid) {
    const ModeUnitary bs = beam_splitter_matrix(r);
    auto diagonal = [&](FockBasisState basis) {
      return transition_amplitude({bs, basis, basis});
    };
    rows.push_back({r, diagonal({0, 0}), diagonal({0, 1}), diagonal({1, 0}), diagonal({1, 1}),
                    std::abs(2.0 * r - 1.0) - r});
  }
  return rows;
}

GateLab::GateLab(double reflectivity)
    : reflectivity_(reflectivity), circuit_(build_gate_circuit(reflectivity)),
      unitary_(compose(circuit_))
{
}

PureState GateLab::propagate(const PureState &ports_input) const
{
  if (ports_input.registry().labels() != port_registry().labels())
    throw std::invalid_argument("gate input must be defined over [q1H, q1V, q2H, q2V]");
  return evolve(tensor(ports_input, vacuum(loss_registry())), unitary_);
}

PureState GateLab::run_gate(const PureState &input) const
{
  if (input.empty())
    throw std::invalid_argument("gate input is the zero state");
  for (const auto &[basis, amp] : input.terms())
    if (port_photons(basis, 1) != 1 || port_photons(basis, 2) != 1)
      throw std::invalid_argument("gate input term " + to_string(basis) +
                                  " does not hold exactly one photon per port");
  return propagate(input);
}

GateReport GateLab::truth_table(Encoding encoding, const PostSelectionRule &rule) const
{
  GateReport report;
  report.encoding = encoding;
  report.reflectivity = reflectivity_;
  report.rule = rule.name();

  std::array<PureState, 4> outputs{PureState(gate_registry()), PureState(gate_registry()),
                                   PureState(gate_registry()), PureState(gate_registry())};
  const PureState loss_vacuum = vacuum(loss_registry());
  for (int k = 0; k < 4; ++k)
    outputs[static_cast<std::size_t>(k)] = tensor(encoded_basis_state(encoding, k), loss_vacuum);

  for (int in = 0; in < 4; ++in) {
    const auto col = static_cast<std::size_t>(in);
    const PureState raw = run_gate(encoded_basis_state(encoding, in));
    const PostSelection selected = postselect(raw, rule);
    report.success[col] = selected.probability;
    report.budgets[col] = budget_of(raw);
    if (selected.empty())
      continue;
    const double scale = std::sqrt(selected.probability);
    for (int out = 0; out < 4; ++out) {
      const Complex conditional = inner_product(outputs[static_cast<std::size_t>(out)], *selected.state);
      report.conditional_table(out, in) = conditional;
      report.truth_table(out, in) = conditional * scale;
    }
  }

  // Global phase: largest entry of the first column is real positive.
  Eigen::Index peak = 0;
  report.truth_table.col(0).cwiseAbs().maxCoeff(&peak);
  const Complex anchor = report.truth_table(peak, 0);
  if (std::abs(anchor) > kTolerance) {
    const Complex phase = std::conj(anchor) / std::abs(anchor);
    report.truth_table *= phase;
    report.conditional_table *= phase;
  }

  for (int in = 0; in < 4; ++in) {
    const double n = report.conditional_table.col(in).norm();
    if (n > kTolerance)
      report.conditional_table.col(in) /= n;
  }
  report.fidelity = fidelity(report, ideal_for(encoding));
  return report;
}

ErrorBudget GateLab::error_budget(BasisInput input) const
{
  return budget_of(run_gate(encoded_basis_state(Encoding::PhaseGate, static_cast<int>(input))));
}

ErrorBudget GateLab::error_budget(const PureState &input) const
{
  return budget_of(run_gate(input));
}

RuleEquivalenceReport GateLab::rule_equivalence(std::span<const PureState> inputs) const
{
  const PostSelectionRule full = PostSelectionRule::full();
  const std::array<PostSelectionRule, 2> practical{PostSelectionRule::practical(1),
                                                   PostSelectionRule::practical(2)};
  RuleEquivalenceReport report;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    RuleEquivalenceCase c;
    c.label = "input " + std::to_string(i);
    for (const auto &[basis, amp] : inputs[i].terms())
      if (basis.total() != 2)
        c.in_contract = false;

    const PureState raw = propagate(inputs[i]);
    const PostSelection reference = postselect(raw, full);
    for (const auto &rule : practical) {
      const PostSelection other = postselect(raw, rule);
      double deviation = std::abs(reference.probability - other.probability);
      if (reference.empty() != other.empty())
        deviation = std::max({deviation, reference.probability, other.probability, 1.0});
      else if (!reference.empty())
        deviation = std::max(deviation, max_amplitude_difference(*reference.state, *other.state));
      c.max_deviation = std::max(c.max_deviation, deviation);
    }
    c.equivalent = c.max_deviation <= kTolerance;
    report.cases.push_back(std::move(c));
  }
  return report;
}

} // namespace fockgate
