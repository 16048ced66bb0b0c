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

#include "doctest.h"
#include "generators.hpp"
#include "wildgraph/classify.hpp"
#include "wildgraph/kernels.hpp"

using namespace wildgraph;
using wildgraph::testing::Gen;

TEST_CASE("two largest equal") {
  CHECK(kernels::two_largest_equal(2, 2, 1));
  CHECK(kernels::two_largest_equal(1, 2, 2));
  CHECK(kernels::two_largest_equal(3, 3, 3));
  CHECK(!kernels::two_largest_equal(6, 4, 3));
  CHECK(!kernels::two_largest_equal(1, 1, 2));
}

TEST_CASE("property: serial and parallel multiplicity matrices agree") {
  Gen g(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto theta = g.irregular_class(static_cast<std::size_t>(g.uniform(1, 9)));
    auto circles = theta.circles();
    CHECK(kernels::multiplicity_matrix_serial(circles) == kernels::multiplicity_matrix_omp(circles));
  }
}

TEST_CASE("property: serial and parallel triangle scans agree") {
  Gen g(23);
  for (int trial = 0; trial < 400; ++trial) {
    auto B = g.matrix(static_cast<std::size_t>(g.uniform(0, 9)), 0, 3);
    auto s = kernels::first_non_ultrametric_serial(B);
    CHECK(s == kernels::first_non_ultrametric_omp(B));
    RatMatrix R(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      for (auto x : B[i]) R[i].push_back(Rational(x));
    }
    CHECK(s == kernels::first_non_ultrametric(R));
  }
}

TEST_CASE("property: serial and parallel bounded searches agree") {
  Gen g(29);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = static_cast<std::size_t>(g.uniform(1, 4));
    auto B = g.matrix(n, 0, 5, g.coin(2));
    auto s = kernels::bounded_decoration_search_serial(B, 6);
    CHECK(s == kernels::bounded_decoration_search_omp(B, 6));
    if (s) CHECK(!check_decorated({Diagram::from_matrix(B), *s}));
  }
}

TEST_CASE("decoration check on reference decorations") {
  CHECK(kernels::decoration_ok({{0, 6, 4}, {6, 0, 3}, {4, 3, 0}}, {1, 3, 2}));
  CHECK(!kernels::decoration_ok({{0, 6, 4}, {6, 0, 3}, {4, 3, 0}}, {1, 1, 1}));
  CHECK(!kernels::decoration_ok({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}, {1, 1, 1}));
  // Example class in the order 3/2, 5/3, 7/3 with its ramification orders.
  CHECK(kernels::decoration_ok({{0, 4, 8}, {4, 2, 12}, {8, 12, 6}}, {2, 3, 3}));
}
