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

// Exact feasibility of homogeneous linear systems over positive rationals.

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace wildgraph {

enum class Relation { Eq, Le, Lt };

/// sum_i coeffs[i] * r_i  (= | <= | <)  0
struct LinearConstraint {
  std::vector<mpz_class> coeffs;
  Relation rel = Relation::Le;
};

/// Constraints on r_1..r_N; r_i > 0 is implicit.
struct FeasibilitySystem {
  std::size_t variables = 0;
  std::vector<LinearConstraint> constraints;
};

bool satisfies(const FeasibilitySystem& system, const std::vector<mpz_class>& r);

/// A solution with every r_i > 0, scaled to a primitive integer vector, or
/// nullopt when none exists. Equalities are substituted away first, then the
/// remaining inequalities are eliminated one variable at a time, keeping
/// track of which combinations are strict.
std::optional<std::vector<mpz_class>> solve_homogeneous(const FeasibilitySystem& system);

}  // namespace wildgraph
