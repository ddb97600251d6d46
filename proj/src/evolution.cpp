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

#include "fockgate/evolution.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fockgate {

namespace {

double factorial(int n)
{
  double f = 1.0;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

// mode index repeated once per photon
std::vector<Eigen::Index> expand_occupations(const FockBasisState &basis)
{
  std::vector<Eigen::Index> modes;
  for (std::size_t m = 0; m < basis.size(); ++m)
    for (int k = 0; k < basis[m]; ++k)
      modes.push_back(static_cast<Eigen::Index>(m));
  return modes;
}

Complex amplitude(const ModeUnitary &u, const FockBasisState &input, const FockBasisState &output)
{
  if (input.size() != u.dimension() || output.size() != u.dimension())
    throw std::invalid_argument("occupation vector length does not match the mode unitary");
  const int photons = input.total();
  if (output.total() != photons)
    return {};
  if (photons > kMaxPermanentDimension)
    throw std::out_of_range("photon number " + std::to_string(photons) +
                            " exceeds the permanent cap");

  const auto rows = expand_occupations(output);
  const auto cols = expand_occupations(input);
  ComplexMatrix sub(photons, photons);
  for (int r = 0; r < photons; ++r)
    for (int c = 0; c < photons; ++c)
      sub(r, c) = u.matrix()(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);

  double weight = 1.0;
  for (std::size_t m = 0; m < input.size(); ++m)
    weight *= factorial(input[m]) * factorial(output[m]);
  return permanent(sub) / std::sqrt(weight);
}

// Every occupation vector with `photons` photons spread over `support`.
void for_each_output(std::size_t modes, const std::vector<std::size_t> &support, int photons,
                     const std::function<void(const FockBasisState &)> &visit)
{
  std::vector<int> occupation(modes, 0);
  std::function<void(std::size_t, int)> place = [&](std::size_t slot, int remaining) {
    if (slot + 1 == support.size()) {
      occupation[support[slot]] = remaining;
      visit(FockBasisState(occupation));
      occupation[support[slot]] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      occupation[support[slot]] = k;
      place(slot + 1, remaining - k);
    }
    occupation[support[slot]] = 0;
  };
  if (support.empty()) {
    if (photons == 0)
      visit(FockBasisState(occupation));
    return;
  }
  place(0, photons);
}

} // namespace

Complex transition_amplitude(const TransitionQuery &query)
{
  return amplitude(query.mode_unitary, query.input, query.output);
}

PureState evolve(const PureState &state, const ModeUnitary &u)
{
  const ModeRegistry &registry = state.registry();
  if (registry.count() != u.dimension())
    throw std::invalid_argument("state has " + std::to_string(registry.count()) +
                                " modes, unitary acts on " + std::to_string(u.dimension()));

  PureState::Terms out;
  for (const auto &[input, coefficient] : state.terms()) {
    const int photons = input.total();
    if (photons > registry.photon_cap())
      throw std::out_of_range("input " + to_string(input) + " exceeds the photon cap");

    // output modes reachable from an occupied input mode
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < u.dimension(); ++i)
      for (std::size_t j = 0; j < u.dimension(); ++j)
        if (input[j] > 0 && u(i, j) != Complex{}) {
          support.push_back(i);
          break;
        }

    for_each_output(u.dimension(), support, photons, [&](const FockBasisState &output) {
      out[output] += coefficient * amplitude(u, input, output);
    });
  }
  return PureState(registry, std::move(out));
}

} // namespace fockgate
