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

#ifndef FOCKGATE_RANDOM_HPP
#define FOCKGATE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "fockgate/fock_state.hpp"
#include "fockgate/optics.hpp"

namespace fockgate {

using Rng = std::mt19937_64;

/// Standard complex Gaussian sample.
Complex random_complex(Rng &rng);

/// Haar-random unitary (QR of a complex Gaussian matrix with phase fix).
ModeUnitary random_unitary(std::size_t dimension, Rng &rng);

/// Random unit-norm superposition of up to @p terms basis states, each
/// holding exactly @p photons photons.
PureState random_state(const ModeRegistry &registry, int photons, int terms, Rng &rng);

} // namespace fockgate

#endif // FOCKGATE_RANDOM_HPP
