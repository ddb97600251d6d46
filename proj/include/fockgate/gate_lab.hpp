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

#ifndef FOCKGATE_GATE_LAB_HPP
#define FOCKGATE_GATE_LAB_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fockgate/fock_state.hpp"
#include "fockgate/optics.hpp"
#include "fockgate/random.hpp"

namespace fockgate {

using GateMatrix = Eigen::Matrix4cd;

/// Reflectivity at which the two-photon amplitude |2R-1| equals R.
double balanced_reflectivity();

inline constexpr double kBalancedReflectivity = 1.0 / 3.0;

/// The four input modes [q1H, q1V, q2H, q2V] carrying the qubits.
ModeRegistry port_registry();

/// The two ancilla modes [loss1, loss2] that absorb attenuated photons.
ModeRegistry loss_registry();

/**
 * Qubit encodings on the two input ports. Basis index is 2*q1 + q2.
 *
 * PhaseGate: |0> = V, |1> = H on both ports.
 * Cnot: port 1 as PhaseGate, port 2 uses |0> = (V+H)/sqrt(2), |1> = (V-H)/sqrt(2).
 */
enum class Encoding { PhaseGate, Cnot };

std::string_view to_string(Encoding encoding);

/// Accepts "phase" and "cnot". Throws std::invalid_argument otherwise.
Encoding parse_encoding(std::string_view name);

/// "VV", "VH", "HV", "HH" or "00", "01", "10", "11".
std::array<std::string, 4> basis_labels(Encoding encoding);

/// Unit-norm two-photon state over port_registry().
PureState encoded_basis_state(Encoding encoding, int index);

/// Linear combination of the encoded basis states.
PureState encode(Encoding encoding, const std::array<Complex, 4> &amplitudes);

/// Independent random polarization qubit on each port.
PureState random_product_input(Rng &rng);

/// Random unit-norm superposition of the four encoded basis states.
PureState random_encoded_input(Encoding encoding, Rng &rng);

enum class BasisInput { VV = 0, VH = 1, HV = 2, HH = 3 };

struct PhotonCountConstraint {
  std::vector<std::string> modes;
  int count;
};

/// Accepts basis states whose photon counts match every constraint.
class PostSelectionRule {
public:
  enum class Kind { Full, Practical, Custom };

  /// Throws std::invalid_argument if two groups share a mode.
  PostSelectionRule(Kind kind, std::vector<PhotonCountConstraint> constraints);

  /// One photon in each output port, nothing in the loss modes.
  static PostSelectionRule full();
  /// Nothing in the loss modes and one photon in the designated port (1 or 2).
  static PostSelectionRule practical(int port = 1);

  Kind kind() const noexcept { return kind_; }
  const std::vector<PhotonCountConstraint> &constraints() const noexcept { return constraints_; }
  std::string name() const;

  /// Throws std::out_of_range if a constrained mode is missing from @p registry.
  bool accepts(const FockBasisState &basis, const ModeRegistry &registry) const;

private:
  Kind kind_;
  std::vector<PhotonCountConstraint> constraints_;
};

/// Outcome of a projection; an empty outcome has no state and probability 0.
struct PostSelection {
  std::optional<PureState> state; ///< normalized conditional state
  double probability = 0.0;

  bool empty() const noexcept { return !state.has_value(); }
};

PostSelection postselect(const PureState &raw, const PostSelectionRule &rule);

struct ErrorBudget {
  double success = 0.0;  ///< full post-selection accepts
  double loss = 0.0;     ///< some loss mode is occupied
  double bunching = 0.0; ///< no loss, but two or more photons share an output port

  double total() const noexcept { return success + loss + bunching; }
};

/// Budget of a raw six-mode gate output.
ErrorBudget budget_of(const PureState &raw);

/**
 * Six-mode phase gate: PBS split per port, BS(R) between q1H and q2H, an
 * attenuating BS(R) from each V rail into its loss mode, PBS recombination.
 */
Circuit build_gate_circuit(double reflectivity = kBalancedReflectivity);

GateMatrix ideal_cz();
GateMatrix ideal_cnot();
GateMatrix ideal_for(Encoding encoding);

struct GateReport {
  Encoding encoding = Encoding::PhaseGate;
  double reflectivity = kBalancedReflectivity;
  std::string rule;
  /// Entry (out, in): amplitude including the attenuation, i.e. the
  /// conditional amplitude times sqrt(success probability).
  GateMatrix truth_table = GateMatrix::Zero();
  /// Per-column normalized view of truth_table (zero columns stay zero).
  GateMatrix conditional_table = GateMatrix::Zero();
  std::array<double, 4> success{};
  std::array<ErrorBudget, 4> budgets{};
  double fidelity = 0.0; ///< against ideal_for(encoding)
};

/// |Tr(ideal^dagger T)|^2 / 16 with T the per-column normalized table.
/// Throws std::invalid_argument if @p ideal is not unitary.
double fidelity(const GateReport &report, const GateMatrix &ideal);

struct RuleEquivalenceCase {
  std::string label;
  bool in_contract = true; ///< every term carries exactly two photons
  bool equivalent = true;
  double max_deviation = 0.0;
};

struct RuleEquivalenceReport {
  std::vector<RuleEquivalenceCase> cases;

  /// True when every in-contract case is equivalent.
  bool holds() const;
};

struct ScanRow {
  double reflectivity;
  Complex vacuum;     ///< <0;0|U|0;0>
  Complex single_01;  ///< <0;1|U|0;1>
  Complex single_10;  ///< <1;0|U|1;0>
  Complex two_photon; ///< <1;1|U|1;1>
  double imbalance;   ///< |2R-1| - R
};

/// Number-conserving beam splitter amplitudes for each reflectivity in @p grid.
std::vector<ScanRow> reflectivity_scan(std::span<const double> grid);

class GateLab {
public:
  explicit GateLab(double reflectivity = kBalancedReflectivity);

  double reflectivity() const noexcept { return reflectivity_; }
  const Circuit &circuit() const noexcept { return circuit_; }
  const ModeUnitary &unitary() const noexcept { return unitary_; }

  /// Raw six-mode output for any state over port_registry(); loss modes start empty.
  PureState propagate(const PureState &ports_input) const;

  /// Like propagate(), but requires exactly one photon per input port.
  PureState run_gate(const PureState &input) const;

  GateReport truth_table(Encoding encoding,
                         const PostSelectionRule &rule = PostSelectionRule::full()) const;

  ErrorBudget error_budget(BasisInput input) const;
  ErrorBudget error_budget(const PureState &input) const;

  /// Compares the full rule against the practical rule on both ports.
  RuleEquivalenceReport rule_equivalence(std::span<const PureState> inputs) const;

private:
  double reflectivity_;
  Circuit circuit_;
  ModeUnitary unitary_;
};

} // namespace fockgate

#endif // FOCKGATE_GATE_LAB_HPP
