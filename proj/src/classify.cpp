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

#include "wildgraph/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wildgraph/errors.hpp"
#include "wildgraph/kernels.hpp"

namespace wildgraph {

namespace {

void require_graph(const Diagram& g) {
  g.validate();
  if (!g.is_graph()) throw Error(ErrorKind::NotAGraph, "diagram has loops or negative edges");
}

std::int64_t max_edge(const IntMatrix& B) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i != j) m = std::max(m, B[i][j]);
    }
  }
  return m;
}

std::string triple_text(const std::vector<std::string>& names, const Triple& t) {
  return "(" + names[static_cast<std::size_t>(t[0])] + ", " + names[static_cast<std::size_t>(t[1])] + ", " +
         names[static_cast<std::size_t>(t[2])] + ")";
}

}  // namespace

UltrametricCheck is_acute_isosceles(const Diagram& graph) {
  require_graph(graph);
  auto bad = kernels::first_non_ultrametric_omp(graph.B);
  return {!bad.has_value(), bad};
}

FissionTree fission_forest(const Diagram& graph) {
  require_graph(graph);
  const std::size_t n = graph.size();
  if (n == 0) throw Error(ErrorKind::EmptyClass, "graph has no vertices");
  const auto& B = graph.B;

  TreeBuilder tb;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t mult = graph.multiplicities ? (*graph.multiplicities)[i] : 1;
    tb.add_leaf(graph.vertices[i], std::nullopt, mult);
  }
  struct Class {
    int node;
    std::vector<std::size_t> leaves;
  };
  std::vector<Class> current;
  for (std::size_t i = 0; i < n; ++i) {
    int v = tb.add_node(Rational(1), Decoration::Admissible);
    tb.attach(static_cast<int>(i), v);
    current.push_back({v, {i}});
  }
  if (n == 1) return tb.finish(current[0].node);

  const std::int64_t K = 1 + max_edge(B);
  for (std::int64_t h = 1; h <= K; ++h) {
    const std::int64_t target = h - 1;
    const std::size_t m = current.size();
    // related[a][b]: every leaf pair across a, b sits at `target`; a mixed
    // answer means "some" and "any" disagree.
    std::vector<std::vector<char>> related(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        std::size_t hits = 0, total = 0;
        for (auto x : current[a].leaves) {
          for (auto y : current[b].leaves) {
            hits += B[x][y] == target;
            ++total;
          }
        }
        if (hits != 0 && hits != total) {
          throw Error(ErrorKind::UltrametricViolation,
                      "vertices " + graph.vertices[current[a].leaves[0]] + " and " + graph.vertices[current[b].leaves[0]] +
                          " are joined at multiplicity " + std::to_string(target) + " by some but not all descendants");
        }
        related[a][b] = related[b][a] = hits == total;
      }
    }
    std::vector<std::size_t> group(m);
    std::iota(group.begin(), group.end(), 0);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (related[a][b] && group[b] == b) group[b] = group[a];
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (related[a][b] != (group[a] == group[b])) {
          throw Error(ErrorKind::UltrametricViolation,
                      "relation at multiplicity " + std::to_string(target) + " is not transitive at vertex " +
                          graph.vertices[current[b].leaves[0]]);
        }
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t a = 0; a < m; ++a) classes[group[a]].push_back(a);
    std::vector<Class> next;
    for (const auto& [root, members] : classes) {
      int v = tb.add_node(Rational(h + 1), Decoration::Admissible);
      Class merged{v, {}};
      for (auto a : members) {
        tb.attach(current[a].node, v);
        merged.leaves.insert(merged.leaves.end(), current[a].leaves.begin(), current[a].leaves.end());
      }
      next.push_back(std::move(merged));
    }
    current = std::move(next);
  }
  if (current.size() != 1) throw Error(ErrorKind::UltrametricViolation, "forest did not connect");
  int top = tb.add_node(Rational(K + 2), Decoration::Admissible);
  tb.attach(current[0].node, top);
  return tb.finish(top);
}

std::vector<std::pair<std::int64_t, ExponentialFactor>> realize_untwisted_factors(const FissionTree& tree) {
  for (const auto& node : tree.nodes) {
    if (!node.height.is_integer()) {
      throw Error(ErrorKind::TwistedTree, "node " + std::to_string(node.id) + " has fractional height " + node.height.str());
    }
    if (node.decoration == Decoration::Mandatory) {
      throw Error(ErrorKind::TwistedTree, "node " + std::to_string(node.id) + " is mandatory");
    }
  }
  // Coefficient of each child of a branch vertex.
  std::map<int, std::int64_t> coeff;
  for (const auto& node : tree.nodes) {
    if (node.children.size() < 2) continue;
    std::int64_t c = 1;
    for (int child : node.children) {
      if (tree.node(child).height <= Rational(0)) {
        throw Error(ErrorKind::TwistedTree, "branch vertex " + std::to_string(node.id) + " has a child at height 0");
      }
      coeff[child] = c++;
    }
  }
  std::vector<std::pair<std::int64_t, ExponentialFactor>> out;
  for (std::size_t i = 0; i < tree.leaves.size(); ++i) {
    std::vector<Term> terms;
    for (int v : tree.branch(i)) {
      auto it = coeff.find(v);
      if (it != coeff.end()) terms.push_back({tree.node(v).height, Cyclotomic(it->second)});
    }
    if (tree.leaves.size() == 1) terms.push_back({Rational(1), Cyclotomic(1)});
    out.emplace_back(tree.leaves[i].multiplicity, ExponentialFactor::from_terms(std::move(terms)));
  }
  return out;
}

IrregularClass realize_untwisted(const FissionTree& tree) {
  return IrregularClass::from_factors(realize_untwisted_factors(tree));
}

std::optional<DecorationViolation> check_decorated(const DecoratedDiagram& d) {
  const auto rd = rescale(d);
  const auto& Bt = rd.Bt;
  const int n = static_cast<int>(Bt.size());
  const auto& names = d.diagram.vertices;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (!kernels::two_largest_equal(Bt[a][b], Bt[a][c], Bt[b][c])) {
          Triple t{a, b, c};
          return DecorationViolation{DecorationViolation::Kind::Triangle, t,
                                     "rescaled triangle " + triple_text(names, t) + " has values " +
                                         Bt[a][b].str() + ", " + Bt[a][c].str() + ", " + Bt[b][c].str()};
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && Bt[i][i] > Bt[i][j]) {
        return DecorationViolation{DecorationViolation::Kind::Loop, Triple{i, j, j},
                                   "rescaled loop at " + names[static_cast<std::size_t>(i)] + " (" + Bt[i][i].str() +
                                       ") exceeds the edge to " + names[static_cast<std::size_t>(j)] + " (" +
                                       Bt[i][j].str() + ")"};
      }
    }
  }
  return std::nullopt;
}

std::vector<LinearConstraint> pattern_constraints(const IntMatrix& B, const PatternChoice& p) {
  const std::size_t n = B.size();
  const auto& t = p.triple;
  std::size_t a = static_cast<std::size_t>(p.apex), b = 0, c = 0;
  bool first = true;
  for (int v : t) {
    if (v == p.apex) continue;
    (first ? b : c) = static_cast<std::size_t>(v);
    first = false;
  }
  // With x_ab = B_ab r_c, x_ac = B_ac r_b, x_bc = B_bc r_a: x_ab = x_ac >= x_bc.
  LinearConstraint eq{std::vector<mpz_class>(n, 0), Relation::Eq};
  eq.coeffs[c] += B[a][b];
  eq.coeffs[b] -= B[a][c];
  LinearConstraint le{std::vector<mpz_class>(n, 0), Relation::Le};
  le.coeffs[a] += B[b][c];
  le.coeffs[c] -= B[a][b];
  return {eq, le};
}

std::vector<LinearConstraint> loop_constraints(const IntMatrix& B) {
  const std::size_t n = B.size();
  std::vector<LinearConstraint> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      LinearConstraint c{std::vector<mpz_class>(n, 0), Relation::Le};
      c.coeffs[j] += B[i][i] - 1;
      c.coeffs[i] -= B[i][j];
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

std::vector<std::int64_t> to_int64(const std::vector<mpz_class>& r) {
  std::vector<std::int64_t> out;
  for (const auto& x : r) out.push_back(checked_int64(x));
  return out;
}

class PatternSearch {
 public:
  PatternSearch(const IntMatrix& B, const FeasibilityOptions& options) : B_(B), options_(options) {
    const int n = static_cast<int>(B.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) triples_.push_back({i, j, k});
      }
    }
    auto top = [&](const Triple& t) {
      return std::max({B[t[0]][t[1]], B[t[0]][t[2]], B[t[1]][t[2]]});
    };
    std::stable_sort(triples_.begin(), triples_.end(),
                     [&](const Triple& x, const Triple& y) { return top(x) > top(y); });
  }

  FeasibilityResult run() {
    FeasibilityResult result;
    auto base = loop_constraints(B_);
    std::vector<std::vector<int>> remaining(triples_.size(), std::vector<int>{0, 1, 2});
    std::vector<PatternChoice> path;
    std::vector<char> assigned(triples_.size(), 0);
    if (dfs(base, remaining, assigned, path, result)) {
      result.status = FeasibilityStatus::Feasible;
    } else {
      result.status = FeasibilityStatus::Infeasible;
    }
    result.certificate = std::move(certificate_);
    return result;
  }

 private:
  bool feasible(const std::vector<LinearConstraint>& cons) const {
    return solve_homogeneous({B_.size(), cons}).has_value();
  }

  bool dfs(const std::vector<LinearConstraint>& cons, std::vector<std::vector<int>> remaining,
           std::vector<char>& assigned, std::vector<PatternChoice>& path, FeasibilityResult& result) {
    ++certificate_.nodes_explored;
    std::optional<std::size_t> choice;
    for (std::size_t t = 0; t < triples_.size(); ++t) {
      if (assigned[t]) continue;
      std::vector<int> kept;
      for (int p : remaining[t]) {
        auto extended = cons;
        for (auto& c : pattern_constraints(B_, {triples_[t], triples_[t][static_cast<std::size_t>(p)]})) {
          extended.push_back(std::move(c));
        }
        if (feasible(extended)) kept.push_back(p);
      }
      remaining[t] = std::move(kept);
      if (remaining[t].empty()) {
        if (certificate_.dead_ends.size() < options_.max_recorded_dead_ends) {
          certificate_.dead_ends.push_back({path, triples_[t]});
        } else {
          certificate_.truncated = true;
        }
        return false;
      }
      if (!choice || remaining[t].size() < remaining[*choice].size()) choice = t;
    }
    if (!choice) {
      auto r = solve_homogeneous({B_.size(), cons});
      if (!r) {
        certificate_.dead_ends.push_back({path, Triple{-1, -1, -1}});
        return false;
      }
      result.r = to_int64(*r);
      result.patterns = path;
      return true;
    }
    const std::size_t t = *choice;
    assigned[t] = 1;
    for (int p : remaining[t]) {
      PatternChoice pc{triples_[t], triples_[t][static_cast<std::size_t>(p)]};
      auto extended = cons;
      for (auto& c : pattern_constraints(B_, pc)) extended.push_back(std::move(c));
      path.push_back(pc);
      auto sub = remaining;
      if (dfs(extended, sub, assigned, path, result)) return true;
      path.pop_back();
    }
    assigned[t] = 0;
    return false;
  }

  const IntMatrix& B_;
  const FeasibilityOptions& options_;
  std::vector<Triple> triples_;
  FeasibilityCertificate certificate_;
};

}  // namespace

FeasibilityResult decoration_feasibility(const Diagram& diagram, const FeasibilityOptions& options) {
  diagram.validate();
  const auto& B = diagram.B;
  FeasibilityResult result;
  if (diagram.size() > options.max_vertices) {
    result.exhaustive = false;
    auto r = kernels::bounded_decoration_search_omp(B, options.r_max);
    if (r) {
      result.status = FeasibilityStatus::Feasible;
      result.r = *r;
    } else {
      result.status = FeasibilityStatus::Unknown;
    }
  } else {
    result = PatternSearch(B, options).run();
  }
  if (result.status == FeasibilityStatus::Feasible) {
    DecoratedDiagram d{diagram, result.r};
    if (check_decorated(d) || !kernels::decoration_ok(B, result.r)) {
      throw std::logic_error("decoration_feasibility: witness fails verification");
    }
  }
  return result;
}

const char* to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::FissionGraph: return "FissionGraph";
    case VerdictTag::NotNAH: return "NotNAH";
    case VerdictTag::Candidate: return "Candidate";
    case VerdictTag::NotApplicable: return "NotApplicable";
  }
  return "?";
}

Verdict classify(const Diagram& diagram, const FeasibilityOptions& options) {
  diagram.validate();
  if (diagram.size() == 0) throw Error(ErrorKind::EmptyClass, "diagram has no vertices");
  Verdict v;
  if (diagram.is_graph()) {
    auto acute = is_acute_isosceles(diagram);
    if (acute.ok) {
      v.tag = VerdictTag::FissionGraph;
      v.tree = fission_forest(diagram);
      v.witness_factors = realize_untwisted_factors(*v.tree);
      v.witness = IrregularClass::from_factors(v.witness_factors);
      auto built = build_diagram(*v.witness);
      const std::size_t n = diagram.size();
      std::vector<std::size_t> pos(n);
      for (std::size_t i = 0; i < n; ++i) {
        pos[i] = *v.witness->index_of(circle_of(v.witness_factors[i].second));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (built.diagram.B[pos[i]][pos[j]] != diagram.B[i][j]) {
            throw std::logic_error("classify: witness class does not reproduce the graph");
          }
        }
      }
      if (diagram.is_simply_laced() && !is_complete_multipartite(diagram).ok) {
        throw std::logic_error("classify: simply-laced fission graph is not complete multipartite");
      }
      return v;
    }
    v.violation = acute.violation;
  }
  auto feas = decoration_feasibility(diagram, options);
  switch (feas.status) {
    case FeasibilityStatus::Infeasible:
      v.tag = VerdictTag::NotNAH;
      v.certificate = std::move(feas.certificate);
      break;
    case FeasibilityStatus::Feasible:
      v.tag = VerdictTag::Candidate;
      v.decoration = std::move(feas.r);
      break;
    case FeasibilityStatus::Unknown:
      v.tag = VerdictTag::NotApplicable;
      v.complete = false;
      break;
  }
  if (diagram.is_simply_laced() && v.tag != VerdictTag::NotNAH && v.complete) {
    throw std::logic_error("classify: simply-laced graph that is not a fission graph has a decoration");
  }
  return v;
}

MultipartiteCheck is_complete_multipartite(const Diagram& graph) {
  graph.validate();
  if (!graph.is_simply_laced()) throw Error(ErrorKind::NotSimplyLaced, "graph has entries outside {0, 1}");
  const int n = static_cast<int>(graph.size());
  const auto& B = graph.B;
  MultipartiteCheck out;
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < out.parts.size(); ++p) {
      if (B[i][out.parts[p][0]] == 0) {
        part_of[static_cast<std::size_t>(i)] = static_cast<int>(p);
        out.parts[p].push_back(i);
        break;
      }
    }
    if (part_of[static_cast<std::size_t>(i)] < 0) {
      part_of[static_cast<std::size_t>(i)] = static_cast<int>(out.parts.size());
      out.parts.push_back({i});
    }
  }
  out.ok = true;
  for (int i = 0; i < n && out.ok; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool same = part_of[static_cast<std::size_t>(i)] == part_of[static_cast<std::size_t>(j)];
      if (same != (B[i][j] == 0)) {
        out.ok = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace wildgraph
