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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fockgate {

// Per(A) = (-1)^n sum_{S subset of columns} (-1)^{|S|} prod_i sum_{j in S} a_ij
Complex permanent(const ComplexMatrix &matrix)
{
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("permanent needs a square matrix");
  const auto n = static_cast<int>(matrix.rows());
  if (n > kMaxPermanentDimension)
    throw std::out_of_range("permanent dimension " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxPermanentDimension));
  if (n == 0)
    return {1.0, 0.0};

  std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex{});
  Complex total{};
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    // consecutive Gray codes differ in exactly bit ctz(k)
    const int column = std::countr_zero(k);
    const std::uint32_t gray = k ^ (k >> 1);
    const double direction = ((gray >> column) & 1U) ? 1.0 : -1.0;

    Complex product{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
      auto &sum = row_sums[static_cast<std::size_t>(i)];
      sum += direction * matrix(i, column);
      product *= sum;
    }
    total += (std::popcount(gray) % 2 == 0) ? product : -product;
  }
  return (n % 2 == 0) ? total : -total;
}

} // namespace fockgate
