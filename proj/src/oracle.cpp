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

#include "fockgate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fockgate {

namespace {

// monomial exponent vector -> coefficient
using Polynomial = std::map<std::vector<int>, Complex>;

// Multiply by the linear form sum_i column[i] a_i^dagger.
Polynomial multiply_linear(const Polynomial &poly, const ComplexMatrix &u, Eigen::Index column)
{
  Polynomial result;
  for (const auto &[exponents, coefficient] : poly) {
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      const Complex weight = u(i, column);
      if (weight == Complex{})
        continue;
      std::vector<int> next = exponents;
      ++next[static_cast<std::size_t>(i)];
      result[next] += coefficient * weight;
    }
  }
  return result;
}

double sqrt_factorial(int n)
{
  double f = 1.0;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return std::sqrt(f);
}

} // namespace

PureState oracle_evolve(const PureState &state, const ModeUnitary &u)
{
  const ModeRegistry &registry = state.registry();
  if (registry.count() != u.dimension())
    throw std::invalid_argument("state and mode unitary dimensions differ");

  const std::size_t modes = registry.count();
  PureState::Terms out;
  for (const auto &[input, coefficient] : state.terms()) {
    if (input.total() > registry.photon_cap())
      throw std::out_of_range("input " + to_string(input) + " exceeds the photon cap");

    Polynomial poly{{std::vector<int>(modes, 0), Complex{1.0, 0.0}}};
    double input_norm = 1.0;
    for (std::size_t j = 0; j < modes; ++j) {
      for (int k = 0; k < input[j]; ++k)
        poly = multiply_linear(poly, u.matrix(), static_cast<Eigen::Index>(j));
      input_norm *= sqrt_factorial(input[j]);
    }

    // (a^dagger)^m |0> = sqrt(m!) |m>
    for (const auto &[exponents, c] : poly) {
      double output_norm = 1.0;
      for (int m : exponents)
        output_norm *= sqrt_factorial(m);
      out[FockBasisState(exponents)] += coefficient * c * output_norm / input_norm;
    }
  }
  return PureState(registry, std::move(out));
}

Complex permanent_by_permutations(const ComplexMatrix &matrix)
{
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("permanent needs a square matrix");
  const auto n = static_cast<int>(matrix.rows());
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total{};
  do {
    Complex product{1.0, 0.0};
    for (int i = 0; i < n; ++i)
      product *= matrix(i, sigma[static_cast<std::size_t>(i)]);
    total += product;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

} // namespace fockgate
