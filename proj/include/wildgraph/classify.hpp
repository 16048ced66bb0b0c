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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wildgraph/diagram.hpp"
#include "wildgraph/feasibility.hpp"
#include "wildgraph/fission_tree.hpp"
#include "wildgraph/kernels.hpp"

namespace wildgraph {

using kernels::Triple;

struct UltrametricCheck {
  bool ok = true;
  /// First triple (lexicographic) whose two largest edges differ.
  std::optional<Triple> violation;
};

/// Every triangle has its two largest edge multiplicities equal. Throws
/// Error(NotAGraph) when the diagram is not a graph.
UltrametricCheck is_acute_isosceles(const Diagram& graph);

/// Untwisted fission tree whose diagram is `graph`, built level by level:
/// vertex classes at level l (height l + 1) merge when their leaves are at
/// edge multiplicity l. Throws Error(UltrametricViolation) when the merge
/// relation is ill-defined or not transitive, which happens exactly when
/// some triangle is not acute isosceles.
FissionTree fission_forest(const Diagram& graph);

/// One factor per leaf, in leaf order, with the leaf multiplicities. Each
/// branch vertex gives its children coefficients 1, 2, ... at z^(child
/// height). Throws Error(TwistedTree) on fractional heights or mandatory
/// vertices.
std::vector<std::pair<std::int64_t, ExponentialFactor>> realize_untwisted_factors(const FissionTree& tree);
IrregularClass realize_untwisted(const FissionTree& tree);

struct DecorationViolation {
  enum class Kind { Triangle, Loop } kind = Kind::Triangle;
  /// Triangle: the three vertices. Loop: (i, j, j) for the pair i, j.
  Triple where{};
  std::string detail;
};

/// Rescaled two-largest-equal condition on every triangle and the loop
/// inequality on every ordered pair, evaluated in exact rationals.
std::optional<DecorationViolation> check_decorated(const DecoratedDiagram& d);

struct PatternChoice {
  Triple triple{};
  /// Vertex of `triple` at which the two equal maximal sides meet.
  int apex = 0;
};

struct DeadEnd {
  std::vector<PatternChoice> path;
  /// A triple none of whose three patterns is compatible with `path`.
  Triple blocking{};
};

struct FeasibilityCertificate {
  std::vector<DeadEnd> dead_ends;
  std::size_t nodes_explored = 0;
  /// More dead ends were found than are stored.
  bool truncated = false;
};

struct FeasibilityOptions {
  std::size_t max_vertices = 8;
  std::int64_t r_max = 16;
  std::size_t max_recorded_dead_ends = 256;
};

enum class FeasibilityStatus { Feasible, Infeasible, Unknown };

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::Unknown;
  /// Positive integer decoration when Feasible.
  std::vector<std::int64_t> r;
  /// The pattern search ran to completion (false after the size fallback).
  bool exhaustive = true;
  FeasibilityCertificate certificate;
  /// Pattern choices on the search path that produced the witness.
  std::vector<PatternChoice> patterns;
};

/// Linear constraints of one pattern on r.
std::vector<LinearConstraint> pattern_constraints(const IntMatrix& B, const PatternChoice& p);
/// (B_ii - 1) r_j - B_ij r_i <= 0 for every ordered pair i != j.
std::vector<LinearConstraint> loop_constraints(const IntMatrix& B);

/// Decides whether some positive decoration satisfies check_decorated. Up
/// to `max_vertices` vertices the answer is exact; beyond it a bounded
/// integer search up to `r_max` runs instead and may return Unknown.
FeasibilityResult decoration_feasibility(const Diagram& diagram, const FeasibilityOptions& options = {});

enum class VerdictTag { FissionGraph, NotNAH, Candidate, NotApplicable };
const char* to_string(VerdictTag tag);

struct Verdict {
  VerdictTag tag = VerdictTag::NotApplicable;
  /// FissionGraph: witness class, factors in vertex order, and its tree.
  std::optional<IrregularClass> witness;
  std::vector<std::pair<std::int64_t, ExponentialFactor>> witness_factors;
  std::optional<FissionTree> tree;
  /// Candidate: decoration satisfying every rescaled condition.
  std::vector<std::int64_t> decoration;
  /// NotNAH: exhausted pattern search.
  std::optional<FeasibilityCertificate> certificate;
  /// Graphs that are not acute isosceles: the first bad triangle.
  std::optional<Triple> violation;
  /// False when the search was cut off by the size limit.
  bool complete = true;
};

Verdict classify(const Diagram& diagram, const FeasibilityOptions& options = {});

struct MultipartiteCheck {
  bool ok = false;
  std::vector<std::vector<int>> parts;
};

/// Non-adjacency is an equivalence relation. Throws Error(NotSimplyLaced)
/// unless the diagram is a graph with entries in {0, 1}.
MultipartiteCheck is_complete_multipartite(const Diagram& graph);

}  // namespace wildgraph
