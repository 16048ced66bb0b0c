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
#include <string_view>
#include <vector>

#include "wildgraph/diagram.hpp"
#include "wildgraph/puiseux.hpp"
#include "wildgraph/rational.hpp"

namespace wildgraph {

enum class NodeKind { Leaf, Internal, TrunkPoint };
enum class Decoration { Mandatory, Admissible, Empty };

const char* to_string(NodeKind kind);
const char* to_string(Decoration d);

struct TreeNode {
  int id = 0;
  Rational height;
  NodeKind kind = NodeKind::Leaf;
  Decoration decoration = Decoration::Empty;
  std::optional<int> parent;
  /// Sorted by id.
  std::vector<int> children;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct TreeLeaf {
  int node = 0;
  std::string label;
  /// Absent for trees built from an abstract graph.
  std::optional<StokesCircle> circle;
  std::int64_t multiplicity = 1;

  friend bool operator==(const TreeLeaf&, const TreeLeaf&) = default;
};

/// Rooted tree with heights. Leaves are nodes 0..n-1 (leaf i is node i);
/// the remaining ids are ordered by (height, smallest descendant leaf). The
/// trunk is cut at `trunk_top`, the unique node without a parent.
struct FissionTree {
  std::vector<TreeNode> nodes;
  std::vector<TreeLeaf> leaves;
  int trunk_top = 0;

  const TreeNode& node(int id) const { return nodes.at(static_cast<std::size_t>(id)); }
  /// Node ids from leaf i up to the trunk top.
  std::vector<int> branch(std::size_t leaf) const;
  int closest_common_ancestor(std::size_t a, std::size_t b) const;

  friend bool operator==(const FissionTree&, const FissionTree&) = default;
};

/// Incremental construction followed by canonical renumbering.
class TreeBuilder {
 public:
  int add_leaf(std::string label, std::optional<StokesCircle> circle, std::int64_t multiplicity);
  int add_node(Rational height, Decoration decoration);
  void attach(int child, int parent);
  /// Renumbers nodes, sets kinds and sorts children. `top` must be the only
  /// parentless node.
  FissionTree finish(int top) const;

 private:
  struct Raw {
    Rational height;
    Decoration decoration;
    std::optional<int> parent;
  };
  std::vector<Raw> raw_;
  std::vector<TreeLeaf> leaves_;
};

/// Fission tree of a nonempty class. Leaf i is entry i of `theta`.
FissionTree build_tree(const IrregularClass& theta);

struct TreeCheck {
  std::string name;
  bool passed = true;
  /// First counter-example when the check fails.
  std::string detail;
};

struct TreeReport {
  std::vector<TreeCheck> checks;
  bool ok() const;
};

/// Structural invariants plus, per leaf and per pair of leaves, the level,
/// exponent, common-part and fission-exponent properties. Throws
/// Error(TreeClassMismatch) when the leaves are not the circles of `theta`.
TreeReport verify_tree_properties(const FissionTree& tree, const IrregularClass& theta);

enum class TreeFormat { Ascii, Dot, Json };

/// "ascii", "dot" or "json"; Error(UnknownFormat) otherwise.
TreeFormat parse_tree_format(std::string_view name);
std::string render_tree(const FissionTree& tree, TreeFormat format);
/// Reads the json rendering back. Throws Error(Parse) on malformed input.
FissionTree tree_from_json(std::string_view text);

}  // namespace wildgraph
