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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wildgraph/puiseux.hpp"
#include "wildgraph/rational.hpp"

namespace wildgraph {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Rational>>;

struct ClassEntry {
  StokesCircle circle;
  std::int64_t multiplicity = 1;
};

/// A finite multiset of pairwise distinct Stokes circles. Entries are merged
/// (multiplicities summed) and sorted by canonical representative on
/// construction.
class IrregularClass {
 public:
  IrregularClass() = default;
  explicit IrregularClass(std::vector<ClassEntry> entries);

  static IrregularClass from_factors(const std::vector<std::pair<std::int64_t, ExponentialFactor>>& items);

  const std::vector<ClassEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::vector<StokesCircle> circles() const;
  std::vector<std::int64_t> multiplicities() const;

  /// Position of `c` among the entries, if present.
  std::optional<std::size_t> index_of(const StokesCircle& c) const;

  friend bool operator==(const IrregularClass& a, const IrregularClass& b);

 private:
  std::vector<ClassEntry> entries_;
};

struct CommonPartData {
  StokesCircle common;
  Rational fission_exponent;
  /// Smallest grid point l in (1/lcm(r, r'))Z with <tau_l q> = <tau_l q'>.
  Rational cut;
};

/// Throws Error(EqualCircles) when I == J.
CommonPartData common_part(const StokesCircle& I, const StokesCircle& J);

std::int64_t loop_multiplicity(const StokesCircle& I);
Rational rescaled_loop(const StokesCircle& I);
Rational rescaled_edge(const StokesCircle& I, const StokesCircle& J);
/// r r' times rescaled_edge; always an integer.
std::int64_t edge_multiplicity(const StokesCircle& I, const StokesCircle& J);
/// The unscaled gcd form of the edge multiplicity, with gcd(r', m'_0) in the
/// leading term. Kept as an independent route for cross-checks.
std::int64_t edge_multiplicity_gcd(const StokesCircle& I, const StokesCircle& J);

/// Vertices with a symmetric integer matrix B (B_ii even). For a core
/// diagram, `circles` holds the Stokes circle of each vertex; it is empty for
/// abstract graphs read from files.
struct Diagram {
  std::vector<std::string> vertices;
  IntMatrix B;
  std::optional<std::vector<std::int64_t>> multiplicities;
  std::vector<StokesCircle> circles;

  std::size_t size() const { return vertices.size(); }
  /// Zero diagonal and nonnegative off-diagonal entries.
  bool is_graph() const;
  /// Entries in {0, 1} and a graph.
  bool is_simply_laced() const;
  /// Throws Error(DimensionMismatch / NotAGraph) on a malformed matrix.
  void validate() const;

  /// Abstract diagram with vertices "0".."n-1".
  static Diagram from_matrix(IntMatrix B);

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct DecoratedDiagram {
  Diagram diagram;
  std::vector<std::int64_t> r;

  friend bool operator==(const DecoratedDiagram&, const DecoratedDiagram&) = default;
};

struct RescaledDiagram {
  std::vector<std::string> vertices;
  RatMatrix Bt;
};

/// Core diagram of a nonempty class, decorated by ramification orders.
/// Pairwise entries are computed in parallel.
DecoratedDiagram build_diagram(const IrregularClass& theta);
/// Same result, computed in a single thread.
DecoratedDiagram build_diagram_serial(const IrregularClass& theta);

RescaledDiagram rescale(const DecoratedDiagram& d);

/// 2 - d^T (2 Id - B) d, the core contribution to the dimension.
std::int64_t cartan_dimension(const Diagram& diagram, std::span<const std::int64_t> d);

}  // namespace wildgraph
