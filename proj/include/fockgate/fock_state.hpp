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

#ifndef FOCKGATE_FOCK_STATE_HPP
#define FOCKGATE_FOCK_STATE_HPP

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fockgate {

using Complex = std::complex<double>;

/// Global comparison tolerance for amplitudes and probabilities.
inline constexpr double kTolerance = 1e-12;

/// Amplitudes with magnitude below this are dropped from a PureState.
inline constexpr double kPruneThreshold = 1e-14;

/// Default per-mode photon cap of a registry.
inline constexpr int kDefaultPhotonCap = 4;

/**
 * @brief Ordered, immutable set of optical mode labels.
 *
 * A label names one spatial port plus a polarization tag (e.g. "q1H",
 * "loss1"). The index of a label never changes. The registry also carries
 * the photon-number cap that bounds every state defined over it.
 */
class ModeRegistry {
public:
  explicit ModeRegistry(std::vector<std::string> labels,
                        int photon_cap = kDefaultPhotonCap);

  std::size_t count() const noexcept { return labels_.size(); }
  int photon_cap() const noexcept { return photon_cap_; }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  const std::string &label(std::size_t index) const { return labels_.at(index); }

  /// Throws std::out_of_range for an unknown label.
  std::size_t index_of(const std::string &label) const;
  bool contains(const std::string &label) const;

  /// Concatenation; label sets must be disjoint. The larger cap is kept.
  ModeRegistry concat(const ModeRegistry &other) const;

  /// Equality is on labels and cap.
  bool operator==(const ModeRegistry &other) const = default;

private:
  std::vector<std::string> labels_;
  int photon_cap_;
};

/// The six-mode registry of the phase gate: [q1H, q1V, q2H, q2V, loss1, loss2].
ModeRegistry gate_registry();

/// Occupation-number vector, one entry per registry mode.
class FockBasisState {
public:
  FockBasisState() = default;
  explicit FockBasisState(std::vector<int> occupations);
  FockBasisState(std::initializer_list<int> occupations)
      : FockBasisState(std::vector<int>(occupations)) {}

  std::size_t size() const noexcept { return occupations_.size(); }
  int operator[](std::size_t mode) const { return occupations_[mode]; }
  std::span<const int> occupations() const noexcept { return occupations_; }
  int total() const noexcept;

  /// Concatenated occupations (this first).
  FockBasisState concat(const FockBasisState &other) const;

  auto operator<=>(const FockBasisState &) const = default;

private:
  std::vector<int> occupations_;
};

std::string to_string(const FockBasisState &state);

/**
 * @brief Sparse superposition of Fock basis states over one registry.
 *
 * Values are immutable once built. Every stored amplitude has magnitude at
 * least kPruneThreshold; anything smaller is dropped during construction.
 */
class PureState {
public:
  using Terms = std::map<FockBasisState, Complex>;

  /// The zero vector (no terms) over @p registry.
  explicit PureState(ModeRegistry registry);

  /// Validates every basis state against the registry and prunes.
  PureState(ModeRegistry registry, Terms terms);

  const ModeRegistry &registry() const noexcept { return registry_; }
  const Terms &terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Zero for basis states that are not stored.
  Complex amplitude(const FockBasisState &basis) const;
  Complex amplitude(std::initializer_list<int> occupations) const {
    return amplitude(FockBasisState(occupations));
  }

  /// Largest total photon number over the support (0 for the empty state).
  int max_photon_number() const;

private:
  ModeRegistry registry_;
  Terms terms_;
};

/// Single-term state with amplitude 1. Throws on length mismatch or cap violation.
PureState make_basis_state(const ModeRegistry &registry, std::vector<int> occupations);

PureState vacuum(const ModeRegistry &registry);

/// <a|b>, conjugate-linear in @p a. Throws std::invalid_argument on registry mismatch.
Complex inner_product(const PureState &a, const PureState &b);

/// Product state over the concatenated registry. Labels must be disjoint.
PureState tensor(const PureState &a, const PureState &b);

double norm_squared(const PureState &state);

/// Returns the unit-norm state and the original squared norm.
/// Throws std::domain_error for a numerically zero state.
std::pair<PureState, double> normalize(const PureState &state);

PureState operator+(const PureState &a, const PureState &b);
PureState operator-(const PureState &a, const PureState &b);
PureState operator*(Complex factor, const PureState &state);

/// Largest |a_k - b_k| over the union of supports.
double max_amplitude_difference(const PureState &a, const PureState &b);

std::string to_string(const PureState &state);

} // namespace fockgate

#endif // FOCKGATE_FOCK_STATE_HPP
