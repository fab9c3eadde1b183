// Copyright 2026 The gatelab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gatelab/permanent.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace gatelab {

Complex permanent(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("permanent: matrix must be square");
  }
  const int n = static_cast<int>(m.rows());
  if (n == 0) {
    return Complex(1.0, 0.0);
  }
  if (n > 30) {
    throw std::invalid_argument("permanent: dimension too large for Ryser");
  }

  // Gray-code walk over column subsets; row sums are updated incrementally.
  std::vector<Complex> rowsum(n, Complex(0.0, 0.0));
  Complex total(0.0, 0.0);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t gray_prev = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ gray_prev;
    const int j = std::countr_zero(diff);
    const double sign = (gray & diff) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) {
      rowsum[i] += sign * m(i, j);
    }
    gray_prev = gray;

    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
      prod *= rowsum[i];
    }
    total += (std::popcount(gray) % 2 == 0) ? -prod : prod;
  }
  return (n % 2 == 0) ? -total : total;
}

}  // namespace gatelab
