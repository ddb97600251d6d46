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

#include "fockgate/random.hpp"

#include <cmath>

namespace fockgate {

Complex random_complex(Rng &rng)
{
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double re = gauss(rng);
  const double im = gauss(rng);
  return {re, im};
}

ModeUnitary random_unitary(std::size_t dimension, Rng &rng)
{
  const auto n = static_cast<Eigen::Index>(dimension);
  ComplexMatrix z(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      z(r, c) = random_complex(rng);

  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    if (std::abs(d) > 0.0)
      q.col(c) *= d / std::abs(d);
  }
  return ModeUnitary(std::move(q));
}

PureState random_state(const ModeRegistry &registry, int photons, int terms, Rng &rng)
{
  std::uniform_int_distribution<std::size_t> pick_mode(0, registry.count() - 1);
  PureState::Terms map;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> occupation(registry.count(), 0);
    for (int p = 0; p < photons; ++p) {
      std::size_t mode = pick_mode(rng);
      // respect the per-mode cap
      while (occupation[mode] >= registry.photon_cap())
        mode = pick_mode(rng);
      ++occupation[mode];
    }
    map[FockBasisState(std::move(occupation))] += random_complex(rng);
  }
  return normalize(PureState(registry, std::move(map))).first;
}

} // namespace fockgate
