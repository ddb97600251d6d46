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

#ifndef FOCKGATE_EVOLUTION_HPP
#define FOCKGATE_EVOLUTION_HPP

#include "fockgate/fock_state.hpp"
#include "fockgate/optics.hpp"

namespace fockgate {

/// Largest matrix dimension accepted by permanent().
inline constexpr int kMaxPermanentDimension = 12;

/**
 * @brief Permanent of a square complex matrix.
 *
 * Ryser's inclusion-exclusion formula with the subsets visited in Gray-code
 * order, so each step updates the row sums with a single column. The 0x0
 * permanent is 1.
 *
 * Throws std::invalid_argument for non-square input and std::out_of_range
 * above kMaxPermanentDimension.
 */
Complex permanent(const ComplexMatrix &matrix);

struct TransitionQuery {
  ModeUnitary mode_unitary;
  FockBasisState input;
  FockBasisState output;
};

/**
 * @brief <output| U |input> for the Fock-space lift of a mode unitary.
 *
 * Per(U[out, in]) / sqrt(prod out_j! prod in_i!), where the submatrix repeats
 * row j out_j times and column i in_i times. Zero when the photon numbers
 * differ. Throws std::out_of_range if the photon number exceeds the
 * permanent cap.
 */
Complex transition_amplitude(const TransitionQuery &query);

/// Fock-space image of @p state under @p u; norm and photon number are conserved.
PureState evolve(const PureState &state, const ModeUnitary &u);

} // namespace fockgate

#endif // FOCKGATE_EVOLUTION_HPP
