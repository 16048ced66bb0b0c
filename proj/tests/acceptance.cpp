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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "wildgraph/classify.hpp"
#include "wildgraph/fission_tree.hpp"
#include "wildgraph/kernels.hpp"
#include "wildgraph/text.hpp"

using namespace wildgraph;
using namespace wildgraph::testing;

namespace {

// Collects the first few mismatches of a criterion.
class Failures {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (count_++ < 5) os_ << (count_ > 1 ? "; " : "") << what;
  }
  std::string str() const {
    if (count_ == 0) return {};
    return os_.str() + (count_ > 5 ? " (+" + std::to_string(count_ - 5) + " more)" : "");
  }

 private:
  int count_ = 0;
  std::ostringstream os_;
};

RatMatrix rationals(std::initializer_list<std::initializer_list<const char*>> rows) {
  RatMatrix out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const char* x : row) out.back().push_back(Rational::parse(x));
  }
  return out;
}

std::vector<StokesCircle> example_one() {
  return {circle({{"5/3", 1}}), circle({{"3/2", 1}}), circle({{"7/3", 1}})};
}

std::vector<StokesCircle> triple_a() {
  return {circle({{"5/2", 1}, {"7/3", 1}}), circle({{"5/2", 1}, {"5/4", 1}}), circle({{"5/2", 1}})};
}

std::vector<StokesCircle> triple_b() {
  return {circle({{"5/2", 1}, {"7/3", 1}}), circle({{"5/2", 1}, {"3/2", 1}, {"5/4", 1}}),
          circle({{"5/2", 1}, {"3/2", 1}})};
}

std::string matrix_matches(const IntMatrix& got, const IntMatrix& want) {
  if (got == want) return {};
  std::ostringstream os;
  os << "got";
  for (const auto& row : got) {
    for (auto x : row) os << ' ' << x;
    os << " /";
  }
  return os.str();
}

std::string criterion_1() {
  auto cs = example_one();
  return matrix_matches(matrix_in_order(build_diagram(class_of(cs)).diagram, cs), {{2, 4, 12}, {4, 0, 8}, {12, 8, 6}});
}

std::string criterion_2() {
  IntMatrix want{{38, 34, 17}, {34, 10, 7}, {17, 7, 2}};
  Failures f;
  for (const auto& cs : {triple_a(), triple_b()}) {
    auto why = matrix_matches(matrix_in_order(build_diagram(class_of(cs)).diagram, cs), want);
    f.check(why.empty(), why);
  }
  return f.str();
}

std::string criterion_3() {
  Failures f;
  auto one = example_one();
  f.check(rescaled_in_order(build_diagram(class_of(one)), one) ==
              rationals({{"1/9", "2/3", "4/3"}, {"2/3", "-1/4", "4/3"}, {"4/3", "4/3", "5/9"}}),
          "first rescaled matrix differs");
  auto want = rationals({{"37/36", "17/12", "17/12"}, {"17/12", "9/16", "7/8"}, {"17/12", "7/8", "1/4"}});
  for (const auto& cs : {triple_a(), triple_b()}) {
    f.check(rescaled_in_order(build_diagram(class_of(cs)), cs) == want, "second rescaled matrix differs");
  }
  return f.str();
}

std::string criterion_4() {
  Failures f;
  std::vector<StokesCircle> cs{circle({{"3", 1}}), circle({{"4/3", 1}}), circle({{"3/2", 1}})};
  auto d = build_diagram(class_of(cs));
  f.check(d.diagram.is_graph(), "triangle has loops");
  auto why = matrix_matches(matrix_in_order(d.diagram, cs), {{0, 6, 4}, {6, 0, 3}, {4, 3, 0}});
  f.check(why.empty(), why);
  f.check(!is_acute_isosceles(d.diagram).ok, "triangle reported acute isosceles");
  std::vector<std::int64_t> ones(3, 1);
  auto dim = cartan_dimension(d.diagram, ones);
  f.check(dim == 22, "dimension " + std::to_string(dim));
  return f.str();
}

IntMatrix pentagon() {
  IntMatrix B(5, std::vector<std::int64_t>(5, 0));
  for (int i = 0; i < 5; ++i) B[i][(i + 1) % 5] = B[(i + 1) % 5][i] = 1;
  return B;
}

std::string criterion_5() {
  Failures f;
  IntMatrix triangle{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  // a, b, c, d with sides 2, 3, 5, 7 and diagonals ac = 11, bd = 13.
  IntMatrix quad{{0, 2, 11, 7}, {2, 0, 3, 13}, {11, 3, 0, 5}, {7, 13, 5, 0}};
  for (const auto& [name, B] : {std::pair{"triangle (0,0,1)", triangle}, std::pair{"prime quadrilateral", quad}}) {
    auto res = decoration_feasibility(Diagram::from_matrix(B));
    f.check(res.status == FeasibilityStatus::Infeasible && res.exhaustive, std::string(name) + " not Infeasible");
    f.check(!res.certificate.dead_ends.empty(), std::string(name) + " has an empty certificate");
    f.check(!kernels::bounded_decoration_search_serial(B, 8), std::string(name) + " has a decoration up to 8");
  }
  auto v = classify(Diagram::from_matrix(pentagon()));
  f.check(v.tag == VerdictTag::NotNAH, std::string("pentagon is ") + to_string(v.tag));
  f.check(!kernels::bounded_decoration_search_serial(pentagon(), 8), "pentagon has a decoration up to 8");
  return f.str();
}

std::string criterion_6() {
  Failures f;
  Gen g(20260601);
  int count = 0;
  std::int64_t max_entry = 0;
  std::size_t max_size = 0;
  while (count < 500) {
    auto theta = g.untwisted_class(static_cast<std::size_t>(g.uniform(1, 7)), 10);
    auto B = build_diagram(theta).diagram.B;
    auto G = Diagram::from_matrix(B);
    if (!is_acute_isosceles(G).ok) {
      f.check(false, "class " + format_class(theta) + " gave a graph that is not acute isosceles");
      continue;
    }
    ++count;
    max_size = std::max(max_size, B.size());
    for (const auto& row : B) max_entry = std::max(max_entry, *std::max_element(row.begin(), row.end()));
    auto factors = realize_untwisted_factors(fission_forest(G));
    std::vector<StokesCircle> order;
    for (const auto& [m, q] : factors) order.push_back(circle_of(q));
    auto back = matrix_in_order(build_diagram(IrregularClass::from_factors(factors)).diagram, order);
    f.check(back == B, "round trip failed for " + format_class(theta));
  }
  f.check(max_entry <= 9 && max_size <= 7, "generator left the size range");

  IntMatrix four{{0, 0, 2, 2}, {0, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}};
  auto witness = parse_class("<-z^3-z>+<-z^3+z>+<z^3-z^2>+<z^3+z^2>");
  std::vector<StokesCircle> order;
  for (const auto& [m, q] : witness.entries) order.push_back(circle_of(q));
  f.check(matrix_in_order(build_diagram(witness.to_class()).diagram, order) == four, "known witness mismatch");
  auto ours = realize_untwisted_factors(fission_forest(Diagram::from_matrix(four)));
  order.clear();
  for (const auto& [m, q] : ours) order.push_back(circle_of(q));
  f.check(matrix_in_order(build_diagram(IrregularClass::from_factors(ours)).diagram, order) == four,
          "four-vertex round trip failed");
  return f.str();
}

// Shared by criteria 7 and 8.
std::vector<IrregularClass> random_classes() {
  Gen g(7000);
  std::vector<IrregularClass> out;
  for (int i = 0; i < 1000; ++i) {
    out.push_back(g.irregular_class(static_cast<std::size_t>(g.uniform(1, 5)), 2, true, 6, 5));
  }
  return out;
}

std::string criterion_7(const std::vector<IrregularClass>& classes) {
  Failures f;
  int applicable = 0;
  for (const auto& theta : classes) {
    const std::string name = format_class(theta);
    auto d = build_diagram(theta);
    auto v = check_decorated(d);
    f.check(!v, "(a) " + name + ": " + (v ? v->detail : ""));

    const auto cs = theta.circles();
    const std::size_t n = cs.size();
    std::vector<std::vector<Rational>> fe(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      f.check(d.diagram.B[i][i] % 2 == 0, "(c) odd loop entry in " + name);
      f.check(Rational(d.diagram.B[i][i] - 1) == rescaled_loop(cs[i]) * Rational(cs[i].ram() * cs[i].ram()),
              "(c) loop rescaling in " + name);
      for (std::size_t j = i + 1; j < n; ++j) {
        fe[i][j] = fe[j][i] = common_part(cs[i], cs[j]).fission_exponent;
        Rational scaled = rescaled_edge(cs[i], cs[j]) * Rational(cs[i].ram() * cs[j].ram());
        f.check(scaled.is_integer() && scaled == Rational(d.diagram.B[i][j]), "(c) edge integrality in " + name);
        f.check(special_formula_failures(cs[i], cs[j], applicable) == 0, "(d) special formula in " + name);
      }
    }
    f.check(!kernels::first_non_ultrametric(fe), "(b) fission exponents of " + name);
  }
  f.check(applicable > 100, "(d) too few applicable instances");
  return f.str();
}

std::string criterion_8(const std::vector<IrregularClass>& classes) {
  Failures f;
  auto cs = example_one();
  auto theta = class_of(cs);
  auto t = build_tree(theta);
  auto leaf = [&](const StokesCircle& c) { return *theta.index_of(c); };
  const std::size_t I = leaf(cs[0]), J = leaf(cs[1]), K = leaf(cs[2]);
  const auto& vij = t.node(t.closest_common_ancestor(I, J));
  f.check(vij.height == Rational(2), "v_IJ at " + vij.height.str());
  for (int c : vij.children) {
    f.check(t.node(c).height == Rational(5, 3), "child of v_IJ at " + t.node(c).height.str());
  }
  const auto& top = t.node(t.closest_common_ancestor(I, K));
  f.check(t.closest_common_ancestor(J, K) == top.id, "J and K join elsewhere");
  f.check(top.height == Rational(3), "top join at " + top.height.str());
  for (int c : top.children) {
    f.check(t.node(c).height == Rational(7, 3), "child of the top join at " + t.node(c).height.str());
  }
  auto mandatory = [&](std::size_t l) {
    std::vector<Rational> hs;
    for (int id : t.branch(l)) {
      if (t.node(id).decoration == Decoration::Mandatory) hs.push_back(t.node(id).height);
    }
    return hs;
  };
  f.check(mandatory(I) == std::vector<Rational>{Rational(5, 3)}, "mandatory heights on I");
  f.check(mandatory(J) == std::vector<Rational>{Rational(3, 2)}, "mandatory heights on J");
  f.check(mandatory(K) == std::vector<Rational>{Rational(7, 3)}, "mandatory heights on K");

  for (const auto& c : classes) {
    auto report = verify_tree_properties(build_tree(c), c);
    for (const auto& check : report.checks) {
      f.check(check.passed, format_class(c) + ": " + check.name + " " + check.detail);
    }
  }
  return f.str();
}

// Canonical code of a graph on n vertices: the least edge bitmask over all
// relabelings.
std::uint32_t canonical_code(int n, const std::vector<std::vector<bool>>& adj) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (adj[perm[i]][perm[j]]) code |= 1u << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string criterion_9() {
  Failures f;
  std::size_t total = 0;
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) adj[i][j] = adj[j][i] = (mask >> bit) & 1u;
      }
      if (!seen.insert(canonical_code(n, adj)).second) continue;
      IntMatrix B(n, std::vector<std::int64_t>(n, 0));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) B[i][j] = adj[i][j];
      }
      auto G = Diagram::from_matrix(B);
      auto v = classify(G);
      bool multipartite = is_complete_multipartite(G).ok;
      f.check(v.tag != VerdictTag::Candidate, "Candidate verdict on n=" + std::to_string(n));
      f.check((v.tag == VerdictTag::FissionGraph) == multipartite, "FissionGraph mismatch on n=" + std::to_string(n));
      f.check(v.complete, "incomplete verdict on n=" + std::to_string(n));
    }
    // Numbers of unlabeled graphs on 1..6 vertices.
    static const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
    f.check(seen.size() == expected[n - 1],
            std::to_string(seen.size()) + " graphs on " + std::to_string(n) + " vertices");
    total += seen.size();
  }
  f.check(total == 208, "total " + std::to_string(total));
  return f.str();
}

}  // namespace

int main() {
  std::vector<IrregularClass> classes;
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "matrix of three pure powers", 1, criterion_1},
      {2, "both triples give the same matrix", 1, criterion_2},
      {3, "rescaled matrices", 1, criterion_3},
      {4, "triangle 6, 4, 3 is not acute isosceles and has dimension 22", 1, criterion_4},
      {5, "triangle (0,0,1), prime quadrilateral and pentagon admit no decoration", 5, criterion_5},
      {6, "fission round trip on 500 acute isosceles graphs", 0, criterion_6},
      {7, "rescaled conditions on 1000 random classes", 0,
       [&] {
         classes = random_classes();
         return criterion_7(classes);
       }},
      {8, "fission tree of the three pure powers and tree checks", 0, [&] { return criterion_8(classes); }},
      {9, "simply-laced graphs on up to 6 vertices", 60, criterion_9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && c.limit_seconds > 0 && secs > c.limit_seconds) {
      why = "took " + std::to_string(secs) + " s";
    }
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << (why.empty() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << time.str() << " s)";
    if (!why.empty()) std::cout << ": " << why;
    std::cout << "\n";
    failed += !why.empty();
  }
  return failed == 0 ? 0 : 1;
}
