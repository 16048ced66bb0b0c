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

#include "wildgraph/fission_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wildgraph/errors.hpp"
#include "wildgraph/text.hpp"

namespace wildgraph {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Internal: return "internal";
    case NodeKind::TrunkPoint: return "trunk-point";
  }
  return "?";
}

const char* to_string(Decoration d) {
  switch (d) {
    case Decoration::Mandatory: return "mandatory";
    case Decoration::Admissible: return "admissible";
    case Decoration::Empty: return "empty";
  }
  return "?";
}

std::vector<int> FissionTree::branch(std::size_t leaf) const {
  std::vector<int> out;
  std::optional<int> cur = leaves.at(leaf).node;
  while (cur) {
    out.push_back(*cur);
    cur = node(*cur).parent;
  }
  return out;
}

int FissionTree::closest_common_ancestor(std::size_t a, std::size_t b) const {
  auto ba = branch(a);
  std::set<int> on_a(ba.begin(), ba.end());
  for (int v : branch(b)) {
    if (on_a.count(v)) return v;
  }
  throw std::logic_error("leaves have no common ancestor");
}

int TreeBuilder::add_leaf(std::string label, std::optional<StokesCircle> circle, std::int64_t multiplicity) {
  int id = static_cast<int>(raw_.size());
  if (id != static_cast<int>(leaves_.size())) throw std::logic_error("leaves must be added first");
  raw_.push_back({Rational(0), Decoration::Empty, std::nullopt});
  leaves_.push_back({id, std::move(label), std::move(circle), multiplicity});
  return id;
}

int TreeBuilder::add_node(Rational height, Decoration decoration) {
  raw_.push_back({std::move(height), decoration, std::nullopt});
  return static_cast<int>(raw_.size()) - 1;
}

void TreeBuilder::attach(int child, int parent) {
  raw_.at(static_cast<std::size_t>(child)).parent = parent;
}

FissionTree TreeBuilder::finish(int top) const {
  const int total = static_cast<int>(raw_.size());
  const int n = static_cast<int>(leaves_.size());

  // Smallest descendant leaf of every node.
  std::vector<int> min_leaf(static_cast<std::size_t>(total), total);
  for (int leaf = 0; leaf < n; ++leaf) {
    std::optional<int> cur = leaf;
    while (cur) {
      auto& m = min_leaf[static_cast<std::size_t>(*cur)];
      m = std::min(m, leaf);
      cur = raw_[static_cast<std::size_t>(*cur)].parent;
    }
  }
  std::vector<int> order;
  for (int v = n; v < total; ++v) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ra = raw_[static_cast<std::size_t>(a)];
    const auto& rb = raw_[static_cast<std::size_t>(b)];
    if (ra.height != rb.height) return ra.height < rb.height;
    return min_leaf[static_cast<std::size_t>(a)] < min_leaf[static_cast<std::size_t>(b)];
  });
  std::vector<int> new_id(static_cast<std::size_t>(total));
  for (int v = 0; v < n; ++v) new_id[static_cast<std::size_t>(v)] = v;
  for (std::size_t k = 0; k < order.size(); ++k) new_id[static_cast<std::size_t>(order[k])] = n + static_cast<int>(k);

  FissionTree t;
  t.nodes.resize(static_cast<std::size_t>(total));
  for (int v = 0; v < total; ++v) {
    const auto& r = raw_[static_cast<std::size_t>(v)];
    auto& node = t.nodes[static_cast<std::size_t>(new_id[static_cast<std::size_t>(v)])];
    node.id = new_id[static_cast<std::size_t>(v)];
    node.height = r.height;
    node.decoration = r.decoration;
    if (r.parent) node.parent = new_id[static_cast<std::size_t>(*r.parent)];
    else if (v != top) throw std::logic_error("tree has more than one root");
  }
  for (auto& node : t.nodes) {
    if (node.parent) t.nodes[static_cast<std::size_t>(*node.parent)].children.push_back(node.id);
  }
  for (auto& node : t.nodes) {
    std::sort(node.children.begin(), node.children.end());
    node.kind = node.id < n ? NodeKind::Leaf
                            : (node.children.size() >= 2 ? NodeKind::Internal : NodeKind::TrunkPoint);
  }
  t.leaves = leaves_;
  t.trunk_top = new_id[static_cast<std::size_t>(top)];
  return t;
}

namespace {

bool on_grid(const Rational& x, std::int64_t r) { return (x * Rational(r)).is_integer(); }

Rational next_grid_above(const Rational& x, std::int64_t r) {
  mpz_class k = (x * Rational(r)).floor() + 1;
  return Rational(mpq_class(k, r));
}

Decoration decoration_for(const StokesCircle& q, const Rational& h) {
  const auto& levels = q.levels();
  if (std::find(levels.begin(), levels.end(), h) != levels.end()) return Decoration::Mandatory;
  return on_grid(h, q.ram()) ? Decoration::Admissible : Decoration::Empty;
}

struct Cluster {
  std::vector<std::size_t> members;
  StokesCircle q;
  std::vector<std::size_t> children;
  Rational merge_f;
  std::optional<Rational> parent_f;
  int bottom = -1;
  int top = -1;
};

}  // namespace

FissionTree build_tree(const IrregularClass& theta) {
  if (theta.empty()) throw Error(ErrorKind::EmptyClass, "irregular class is empty");
  const std::size_t n = theta.size();
  const auto circles = theta.circles();

  std::vector<std::vector<Rational>> F(n, std::vector<Rational>(n));
  std::vector<std::vector<StokesCircle>> common(n, std::vector<StokesCircle>(n));
  std::set<Rational> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto cp = common_part(circles[i], circles[j]);
      F[i][j] = F[j][i] = cp.fission_exponent;
      common[i][j] = common[j][i] = cp.common;
      values.insert(cp.fission_exponent);
    }
  }

  // Single linkage: at each fission exponent, merge every group of active
  // clusters linked by a pair at that value.
  std::vector<Cluster> clusters;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) {
    clusters.push_back({{i}, circles[i], {}, Rational(0), std::nullopt, -1, -1});
    active.push_back(i);
  }
  for (const auto& v : values) {
    std::vector<std::size_t> group(active.size());
    std::iota(group.begin(), group.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return group[x] == x ? x : group[x] = find(group[x]);
    };
    for (std::size_t a = 0; a < active.size(); ++a) {
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        std::size_t la = clusters[active[a]].members[0];
        std::size_t lb = clusters[active[b]].members[0];
        if (F[la][lb] == v) group[find(a)] = find(b);
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < active.size(); ++a) groups[find(a)].push_back(active[a]);
    std::vector<std::size_t> next;
    for (const auto& [root, ids] : groups) {
      if (ids.size() == 1) {
        next.push_back(ids[0]);
        continue;
      }
      Cluster merged;
      merged.merge_f = v;
      merged.q = common[clusters[ids[0]].members[0]][clusters[ids[1]].members[0]];
      for (auto id : ids) {
        merged.children.push_back(id);
        clusters[id].parent_f = v;
        const auto& m = clusters[id].members;
        merged.members.insert(merged.members.end(), m.begin(), m.end());
      }
      std::sort(merged.members.begin(), merged.members.end());
      next.push_back(clusters.size());
      clusters.push_back(std::move(merged));
    }
    std::sort(next.begin(), next.end(), [&](std::size_t a, std::size_t b) {
      return clusters[a].members[0] < clusters[b].members[0];
    });
    active = std::move(next);
  }
  if (active.size() != 1) throw std::logic_error("build_tree: clusters did not merge into one tree");

  TreeBuilder tb;
  const auto mult = theta.multiplicities();
  for (std::size_t i = 0; i < n; ++i) {
    tb.add_leaf(std::to_string(i), circles[i], mult[i]);
    clusters[i].bottom = static_cast<int>(i);
  }
  Rational trunk_top_height;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    auto& cl = clusters[c];
    const std::int64_t r = cl.q.ram();
    Rational bottom_h(0);
    if (!cl.children.empty()) {
      bottom_h = next_grid_above(cl.merge_f, r);
      if (cl.parent_f && *cl.parent_f < bottom_h) bottom_h = *cl.parent_f;
      cl.bottom = tb.add_node(bottom_h, decoration_for(cl.q, bottom_h));
      for (auto child : cl.children) tb.attach(clusters[child].top, cl.bottom);
    }
    Rational target;
    if (cl.parent_f) {
      target = *cl.parent_f;
    } else {
      target = std::max(bottom_h + Rational(1, r), cl.q.slope());
      trunk_top_height = target;
    }
    int cur = cl.bottom;
    for (Rational h = next_grid_above(bottom_h, r); h < target; h += Rational(1, r)) {
      int node = tb.add_node(h, decoration_for(cl.q, h));
      tb.attach(cur, node);
      cur = node;
    }
    if (target > bottom_h) {
      int node = tb.add_node(target, decoration_for(cl.q, target));
      tb.attach(cur, node);
      cur = node;
    }
    cl.top = cur;
  }
  return tb.finish(clusters[active[0]].top);
}

bool TreeReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const TreeCheck& c) { return c.passed; });
}

namespace {

std::string join_rationals(const std::vector<Rational>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "}";
}

void fail(TreeCheck& c, const std::string& detail) {
  if (c.passed) {
    c.passed = false;
    c.detail = detail;
  }
}

std::string leaf_name(const FissionTree& t, std::size_t i) {
  std::string s = "leaf " + t.leaves[i].label;
  if (t.leaves[i].circle) s += " " + format_circle(*t.leaves[i].circle);
  return s;
}

}  // namespace

TreeReport verify_tree_properties(const FissionTree& tree, const IrregularClass& theta) {
  const std::size_t n = tree.leaves.size();
  if (n != theta.size()) {
    throw Error(ErrorKind::TreeClassMismatch, "tree has " + std::to_string(n) + " leaves, class has " +
                                                  std::to_string(theta.size()) + " circles");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& leaf = tree.leaves[i];
    if (!leaf.circle || !(*leaf.circle == theta.entries()[i].circle) ||
        leaf.multiplicity != theta.entries()[i].multiplicity) {
      throw Error(ErrorKind::TreeClassMismatch, "leaf " + leaf.label + " does not match circle " +
                                                    format_circle(theta.entries()[i].circle));
    }
  }

  TreeCheck structure{"structure", true, {}};
  TreeCheck levels{"mandatory heights are the levels", true, {}};
  TreeCheck exponents{"exponents are admissible heights", true, {}};
  TreeCheck ancestor{"common part lies above the closest common ancestor", true, {}};
  TreeCheck children{"children of the closest common ancestor sit at the fission exponent", true, {}};

  for (const auto& node : tree.nodes) {
    bool is_leaf = node.id < static_cast<int>(n);
    if (is_leaf != (node.height == Rational(0))) {
      fail(structure, "node " + std::to_string(node.id) + " at height " + node.height.str() +
                          (is_leaf ? " is a leaf" : " is not a leaf"));
    }
    if (!is_leaf && node.children.empty()) fail(structure, "node " + std::to_string(node.id) + " has no children");
    if (node.parent && !(tree.node(*node.parent).height > node.height)) {
      fail(structure, "node " + std::to_string(node.id) + " is not below its parent " + std::to_string(*node.parent));
    }
    if (!node.parent && node.id != tree.trunk_top) {
      fail(structure, "node " + std::to_string(node.id) + " has no parent but is not the trunk top");
    }
    for (int c : node.children) {
      if (tree.node(c).height != tree.node(node.children[0]).height) {
        fail(structure, "children of node " + std::to_string(node.id) + " sit at different heights");
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& I = *tree.leaves[i].circle;
    std::vector<Rational> mandatory;
    std::set<Rational> admissible;
    for (int v : tree.branch(i)) {
      const auto& node = tree.node(v);
      if (node.decoration == Decoration::Mandatory) mandatory.push_back(node.height);
      if (node.decoration != Decoration::Empty) admissible.insert(node.height);
    }
    std::sort(mandatory.begin(), mandatory.end(), std::greater<>());
    if (mandatory != I.levels()) {
      fail(levels, leaf_name(tree, i) + ": mandatory heights " + join_rationals(mandatory) + " but levels " +
                       join_rationals(I.levels()));
    }
    for (const auto& e : I.exponents()) {
      if (!admissible.count(e)) {
        fail(exponents, leaf_name(tree, i) + ": exponent " + e.str() + " is not an admissible height");
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& I = *tree.leaves[i].circle;
      const auto& J = *tree.leaves[j].circle;
      auto cp = common_part(I, J);
      int v = tree.closest_common_ancestor(i, j);
      const auto& node = tree.node(v);
      std::string pair = "leaves " + tree.leaves[i].label + ", " + tree.leaves[j].label;
      if (!cp.common.is_tame() && cp.common.exponents().back() < node.height) {
        fail(ancestor, pair + ": common-part exponent " + cp.common.exponents().back().str() +
                           " is below the ancestor height " + node.height.str());
      }
      for (int c : node.children) {
        if (tree.node(c).height != cp.fission_exponent) {
          fail(children, pair + ": child " + std::to_string(c) + " at height " + tree.node(c).height.str() +
                             ", fission exponent " + cp.fission_exponent.str());
        }
      }
    }
  }
  return {{structure, levels, exponents, ancestor, children}};
}

TreeFormat parse_tree_format(std::string_view name) {
  if (name == "ascii") return TreeFormat::Ascii;
  if (name == "dot") return TreeFormat::Dot;
  if (name == "json") return TreeFormat::Json;
  throw Error(ErrorKind::UnknownFormat, "unknown tree format '" + std::string(name) + "'");
}

namespace {

char symbol(Decoration d) {
  switch (d) {
    case Decoration::Mandatory: return '*';
    case Decoration::Admissible: return 'o';
    case Decoration::Empty: return '.';
  }
  return '?';
}

std::string leaf_text(const TreeLeaf& leaf) {
  if (!leaf.circle) return {};
  std::string s = format_circle(*leaf.circle);
  if (leaf.multiplicity != 1) s = std::to_string(leaf.multiplicity) + "*" + s;
  return s;
}

std::string render_ascii(const FissionTree& t) {
  const std::size_t n = t.leaves.size();
  // Leaves in depth-first order, children by smallest descendant leaf.
  std::vector<int> min_leaf(t.nodes.size(), static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (int v : t.branch(i)) min_leaf[static_cast<std::size_t>(v)] = std::min(min_leaf[static_cast<std::size_t>(v)], static_cast<int>(i));
  }
  std::vector<int> leaf_order;
  std::function<void(int)> dfs = [&](int v) {
    const auto& node = t.node(v);
    if (node.kind == NodeKind::Leaf) {
      leaf_order.push_back(v);
      return;
    }
    auto kids = node.children;
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      return min_leaf[static_cast<std::size_t>(a)] < min_leaf[static_cast<std::size_t>(b)];
    });
    for (int c : kids) dfs(c);
  };
  dfs(t.trunk_top);

  std::size_t spacing = 4;
  for (const auto& leaf : t.leaves) spacing = std::max(spacing, leaf.label.size() + 2);
  std::vector<std::size_t> leaf_col(n);
  for (std::size_t p = 0; p < leaf_order.size(); ++p) leaf_col[static_cast<std::size_t>(leaf_order[p])] = p * spacing;
  std::vector<std::size_t> col(t.nodes.size(), 0);
  for (const auto& node : t.nodes) {
    std::size_t c = std::string::npos;
    std::function<void(int)> leftmost = [&](int v) {
      const auto& x = t.node(v);
      if (x.kind == NodeKind::Leaf) c = std::min(c, leaf_col[static_cast<std::size_t>(v)]);
      for (int k : x.children) leftmost(k);
    };
    leftmost(node.id);
    col[static_cast<std::size_t>(node.id)] = c;
  }
  const std::size_t width = (n - 1) * spacing + 1;

  std::set<Rational, std::greater<>> heights;
  for (const auto& node : t.nodes) {
    if (node.height > Rational(0)) heights.insert(node.height);
  }
  std::size_t gutter = 0;
  for (const auto& h : heights) gutter = std::max(gutter, h.str().size());

  std::ostringstream out;
  for (const auto& h : heights) {
    std::string row(width, ' ');
    for (const auto& node : t.nodes) {
      if (node.parent && node.height < h && h < t.node(*node.parent).height) row[col[static_cast<std::size_t>(node.id)]] = '|';
    }
    for (const auto& node : t.nodes) {
      if (node.height != h) continue;
      std::size_t c = col[static_cast<std::size_t>(node.id)];
      if (node.kind == NodeKind::Internal) {
        std::size_t right = c;
        for (int k : node.children) right = std::max(right, col[static_cast<std::size_t>(k)]);
        for (std::size_t x = c + 1; x < right; ++x) {
          if (row[x] == ' ') row[x] = '-';
        }
        for (int k : node.children) {
          if (col[static_cast<std::size_t>(k)] != c) row[col[static_cast<std::size_t>(k)]] = '+';
        }
      }
      row[c] = symbol(node.decoration);
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    std::string label = h.str();
    out << std::string(gutter - label.size(), ' ') << label << " | " << row << '\n';
  }
  std::string labels(width, ' ');
  for (std::size_t i = 0; i < n; ++i) {
    const auto& l = t.leaves[i].label;
    std::size_t c = leaf_col[i];
    if (labels.size() < c + l.size()) labels.resize(c + l.size(), ' ');
    labels.replace(c, l.size(), l);
  }
  while (!labels.empty() && labels.back() == ' ') labels.pop_back();
  out << std::string(gutter, ' ') << " | " << labels << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    std::string text = leaf_text(t.leaves[i]);
    if (!text.empty()) out << t.leaves[i].label << " = " << text << '\n';
  }
  return out.str();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string render_dot(const FissionTree& t) {
  std::ostringstream out;
  out << "graph fission_tree {\n  rankdir=BT;\n  node [fontsize=10];\n";
  for (const auto& node : t.nodes) {
    out << "  n" << node.id << " [";
    if (node.kind == NodeKind::Leaf) {
      const auto& leaf = t.leaves[static_cast<std::size_t>(node.id)];
      std::string text = leaf_text(leaf);
      out << "shape=plaintext, label=\"" << dot_escape(text.empty() ? leaf.label : leaf.label + ": " + text) << "\"";
    } else {
      switch (node.decoration) {
        case Decoration::Mandatory:
          out << "shape=circle, style=filled, fillcolor=black, width=0.12, label=\"\"";
          break;
        case Decoration::Admissible:
          out << "shape=circle, width=0.12, label=\"\"";
          break;
        case Decoration::Empty:
          out << "shape=point";
          break;
      }
      out << ", xlabel=\"" << node.height.str() << "\"";
    }
    out << "];\n";
  }
  for (const auto& node : t.nodes) {
    if (node.parent) out << "  n" << node.id << " -- n" << *node.parent << ";\n";
  }
  std::map<Rational, std::vector<int>> by_height;
  for (const auto& node : t.nodes) by_height[node.height].push_back(node.id);
  for (const auto& [h, ids] : by_height) {
    out << "  { rank=same;";
    for (int id : ids) out << " n" << id << ";";
    out << " }  // height " << h.str() << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_json(const FissionTree& t) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["leaves"] = ordered_json::array();
  for (const auto& leaf : t.leaves) {
    ordered_json l;
    l["id"] = leaf.node;
    l["label"] = leaf.label;
    l["circle"] = leaf.circle ? ordered_json(format_circle(*leaf.circle)) : ordered_json(nullptr);
    l["mult"] = leaf.multiplicity;
    j["leaves"].push_back(l);
  }
  j["nodes"] = ordered_json::array();
  for (const auto& node : t.nodes) {
    j["nodes"].push_back({{"id", node.id},
                          {"height", node.height.str()},
                          {"decoration", to_string(node.decoration)},
                          {"kind", to_string(node.kind)}});
  }
  j["parent"] = ordered_json::object();
  for (const auto& node : t.nodes) {
    if (node.parent) j["parent"][std::to_string(node.id)] = *node.parent;
  }
  j["trunk_top"] = t.trunk_top;
  j["trunk_extensible"] = true;
  return j.dump(2) + "\n";
}

template <typename E>
E enum_from(const std::string& s, std::initializer_list<E> all) {
  for (E e : all) {
    if (s == to_string(e)) return e;
  }
  throw Error(ErrorKind::Parse, "unknown value '" + s + "' in tree json");
}

}  // namespace

std::string render_tree(const FissionTree& tree, TreeFormat format) {
  switch (format) {
    case TreeFormat::Ascii: return render_ascii(tree);
    case TreeFormat::Dot: return render_dot(tree);
    case TreeFormat::Json: return render_json(tree);
  }
  throw Error(ErrorKind::UnknownFormat, "unknown tree format");
}

FissionTree tree_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    FissionTree t;
    const auto& nodes = j.at("nodes");
    t.nodes.resize(nodes.size());
    std::vector<bool> seen(nodes.size(), false);
    for (const auto& jn : nodes) {
      int id = jn.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(nodes.size()) || seen[static_cast<std::size_t>(id)]) {
        throw Error(ErrorKind::Parse, "bad node id " + std::to_string(id) + " in tree json");
      }
      seen[static_cast<std::size_t>(id)] = true;
      auto& node = t.nodes[static_cast<std::size_t>(id)];
      node.id = id;
      node.height = Rational::parse(jn.at("height").get<std::string>());
      node.decoration = enum_from<Decoration>(jn.at("decoration").get<std::string>(),
                                              {Decoration::Mandatory, Decoration::Admissible, Decoration::Empty});
      node.kind = enum_from<NodeKind>(jn.at("kind").get<std::string>(),
                                      {NodeKind::Leaf, NodeKind::Internal, NodeKind::TrunkPoint});
    }
    for (const auto& [child, parent] : j.at("parent").items()) {
      int c = std::stoi(child);
      int p = parent.get<int>();
      if (c < 0 || c >= static_cast<int>(nodes.size()) || p < 0 || p >= static_cast<int>(nodes.size())) {
        throw Error(ErrorKind::Parse, "bad parent entry in tree json");
      }
      t.nodes[static_cast<std::size_t>(c)].parent = p;
      t.nodes[static_cast<std::size_t>(p)].children.push_back(c);
    }
    for (auto& node : t.nodes) std::sort(node.children.begin(), node.children.end());
    for (const auto& jl : j.at("leaves")) {
      TreeLeaf leaf;
      leaf.node = jl.at("id").get<int>();
      if (leaf.node != static_cast<int>(t.leaves.size())) throw Error(ErrorKind::Parse, "leaf ids must be 0..n-1 in order");
      leaf.label = jl.at("label").get<std::string>();
      if (!jl.at("circle").is_null()) leaf.circle = circle_of(parse_factor(jl.at("circle").get<std::string>()));
      leaf.multiplicity = jl.at("mult").get<std::int64_t>();
      t.leaves.push_back(std::move(leaf));
    }
    t.trunk_top = j.at("trunk_top").get<int>();
    if (t.trunk_top < 0 || t.trunk_top >= static_cast<int>(nodes.size())) throw Error(ErrorKind::Parse, "bad trunk_top in tree json");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed tree json: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed tree json: ") + e.what());
  }
}

}  // namespace wildgraph
