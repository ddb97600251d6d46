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

#ifndef FOCKGATE_ORACLE_HPP
#define FOCKGATE_ORACLE_HPP

// Reference routes used to cross-check the permanent-based engine. Nothing
// in here calls permanent() or evolve().

#include "fockgate/fock_state.hpp"
#include "fockgate/optics.hpp"

namespace fockgate {

/**
 * @brief Fock evolution by symbolic expansion of creation operators.
 *
 * Each input ket is written as prod_j (a_j^dagger)^{n_j} / sqrt(n_j!) |0>,
 * every a_j^dagger is replaced by sum_i U(i, j) a_i^dagger, and the resulting
 * polynomial is expanded monomial by monomial. Same contract and errors as
 * evolve().
 */
PureState oracle_evolve(const PureState &state, const ModeUnitary &u);

/// Permanent as the plain sum over all n! permutations. Intended for n <= 8.
Complex permanent_by_permutations(const ComplexMatrix &matrix);

} // namespace fockgate

#endif // FOCKGATE_ORACLE_HPP
