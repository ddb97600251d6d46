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

#ifndef FOCKGATE_OPTICS_HPP
#define FOCKGATE_OPTICS_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "fockgate/fock_state.hpp"

namespace fockgate {

using ComplexMatrix = Eigen::MatrixXcd;

/// Maximum deviation of U^dagger U from the identity accepted as unitary.
inline constexpr double kUnitarityTolerance = 1e-10;

bool is_unitary(const ComplexMatrix &matrix, double tolerance = kUnitarityTolerance);

/**
 * @brief Unitary acting on mode creation operators.
 *
 * Column j is the image of mode j: a_j^dagger -> sum_i U(i, j) a_i^dagger.
 * Construction rejects non-square and non-unitary matrices.
 */
class ModeUnitary {
public:
  explicit ModeUnitary(ComplexMatrix matrix);

  static ModeUnitary identity(std::size_t dimension);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix &matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t out_mode, std::size_t in_mode) const
  {
    return matrix_(static_cast<Eigen::Index>(out_mode), static_cast<Eigen::Index>(in_mode));
  }

  ModeUnitary adjoint() const;

  /// Apply @p first, then this.
  ModeUnitary after(const ModeUnitary &first) const;

private:
  ComplexMatrix matrix_;
};

/// Matrix product: (a * b) applies b first.
ModeUnitary operator*(const ModeUnitary &a, const ModeUnitary &b);

// Phase convention: the reflected amplitude keeps the input phase, the
// transmitted amplitude picks up -i. Every golden value in the tests relies
// on it.
/// [[sqrt(R), -i sqrt(1-R)], [-i sqrt(1-R), sqrt(R)]]. Throws for R outside [0, 1].
ModeUnitary beam_splitter_matrix(double reflectivity);

/// Identity on every mode except @p targets, where the block equals @p small.
ModeUnitary embed(const ModeUnitary &small, std::span<const std::string> targets,
                  const ModeRegistry &registry);

/**
 * @brief Polarizing beam splitter routing for one port or a port pair.
 *
 * A port named "q1" owns the modes "q1H" and "q1V". H is transmitted and
 * keeps its rail. V is reflected: with two ports the V modes of the two
 * ports are exchanged, with a single port V is routed onto the port's own V
 * rail. No phase is added on any routed mode.
 */
ModeUnitary pbs_routing(std::span<const std::string> ports, const ModeRegistry &registry);

struct BeamSplitter {
  double reflectivity;
  std::string mode_a;
  std::string mode_b;
};

struct PolarizingBS {
  std::string port_a;
  std::optional<std::string> port_b;
};

struct PhaseShift {
  std::string mode;
  double angle;
};

/// Beam splitter coupling @p signal to a vacuum @p loss mode; the signal
/// keeps amplitude sqrt(R).
struct Attenuator {
  double reflectivity;
  std::string signal;
  std::string loss;
};

using ElementSpec = std::variant<BeamSplitter, PolarizingBS, PhaseShift, Attenuator>;

/// Registry-wide unitary of a single element.
ModeUnitary element_unitary(const ElementSpec &element, const ModeRegistry &registry);

std::string describe(const ElementSpec &element);

struct Circuit {
  ModeRegistry registry;
  std::vector<ElementSpec> elements; ///< applied in list order
};

/// U_n ... U_2 U_1 for elements [1, ..., n]; checked unitary.
ModeUnitary compose(const Circuit &circuit);

} // namespace fockgate

#endif // FOCKGATE_OPTICS_HPP
