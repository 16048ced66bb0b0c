/* Copyright 2026 The wildgraph Authors
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

#pragma once

// Data-parallel kernels. Each has an OpenMP version used by the library and a
// serial reference used by the tests and the benchmark.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wildgraph/diagram.hpp"

namespace wildgraph::kernels {

/// Matrix of loop (diagonal) and edge multiplicities.
IntMatrix multiplicity_matrix_serial(const std::vector<StokesCircle>& circles);
IntMatrix multiplicity_matrix_omp(const std::vector<StokesCircle>& circles);

using Triple = std::array<int, 3>;

/// True when the two largest of a, b, c are equal.
template <typename T>
bool two_largest_equal(const T& a, const T& b, const T& c) {
  const T& m = a < b ? (b < c ? c : b) : (a < c ? c : a);
  return (a == m) + (b == m) + (c == m) >= 2;
}

/// First triple i < j < k (lexicographic) whose off-diagonal values violate
/// the two-largest-equal rule.
std::optional<Triple> first_non_ultrametric_serial(const IntMatrix& m);
std::optional<Triple> first_non_ultrametric_omp(const IntMatrix& m);
std::optional<Triple> first_non_ultrametric(const RatMatrix& m);

/// True when the decoration r makes the rescaled diagram of B satisfy the
/// ultrametric and loop conditions. Integer arithmetic only.
bool decoration_ok(const IntMatrix& B, const std::vector<std::int64_t>& r);

/// Lexicographically least r in {1..r_max}^N with decoration_ok, if any.
/// The serial version enumerates every vector; the OpenMP version
/// backtracks with partial checks and splits on r_0.
std::optional<std::vector<std::int64_t>> bounded_decoration_search_serial(const IntMatrix& B, std::int64_t r_max);
std::optional<std::vector<std::int64_t>> bounded_decoration_search_omp(const IntMatrix& B, std::int64_t r_max);

}  // namespace wildgraph::kernels
