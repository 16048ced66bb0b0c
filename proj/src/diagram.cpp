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

#include "wildgraph/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wildgraph/errors.hpp"
#include "wildgraph/kernels.hpp"

namespace wildgraph {

IrregularClass::IrregularClass(std::vector<ClassEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ClassEntry& a, const ClassEntry& b) { return a.circle < b.circle; });
  for (auto& e : entries) {
    if (e.multiplicity < 1) {
      throw Error(ErrorKind::ZeroMultiplicity, "class multiplicities must be positive");
    }
    if (!entries_.empty() && entries_.back().circle == e.circle) {
      entries_.back().multiplicity += e.multiplicity;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

IrregularClass IrregularClass::from_factors(
    const std::vector<std::pair<std::int64_t, ExponentialFactor>>& items) {
  std::vector<ClassEntry> entries;
  entries.reserve(items.size());
  for (const auto& [n, q] : items) entries.push_back({circle_of(q), n});
  return IrregularClass(std::move(entries));
}

std::vector<StokesCircle> IrregularClass::circles() const {
  std::vector<StokesCircle> out;
  for (const auto& e : entries_) out.push_back(e.circle);
  return out;
}

std::vector<std::int64_t> IrregularClass::multiplicities() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries_) out.push_back(e.multiplicity);
  return out;
}

std::optional<std::size_t> IrregularClass::index_of(const StokesCircle& c) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].circle == c) return i;
  }
  return std::nullopt;
}

bool operator==(const IrregularClass& a, const IrregularClass& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.entries_[i].circle == b.entries_[i].circle) ||
        a.entries_[i].multiplicity != b.entries_[i].multiplicity) {
      return false;
    }
  }
  return true;
}

CommonPartData common_part(const StokesCircle& I, const StokesCircle& J) {
  if (I == J) throw Error(ErrorKind::EqualCircles, "common part of a circle with itself");
  const auto& q = I.rep();
  const auto& q2 = J.rep();
  Rational step(1, std::lcm(I.ram(), J.ram()));

  // The truncations only change just above an exponent of q or q', so the
  // least grid point with equal circles is 1/L or some exponent + 1/L.
  std::set<Rational> candidates{step};
  for (const auto& t : q.terms()) candidates.insert(t.exponent + step);
  for (const auto& t : q2.terms()) candidates.insert(t.exponent + step);

  // Truncation commutes with conjugation, so <tau_l q> = <tau_l q'> iff
  // tau_l q' is the truncation of some conjugate of q.
  const auto conjugates = galois_conjugates(q);
  auto same_above = [](const ExponentialFactor& a, const ExponentialFactor& b, const Rational& l) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (;; ++ia, ++ib) {
      bool ea = ia == a.terms().end() || ia->exponent < l;
      bool eb = ib == b.terms().end() || ib->exponent < l;
      if (ea || eb) return ea && eb;
      if (!(*ia == *ib)) return false;
    }
  };
  for (const auto& l : candidates) {
    bool equal = false;
    for (const auto& c : conjugates) {
      if ((equal = same_above(c, q2, l))) break;
    }
    if (!equal) continue;
    Rational f(0);
    for (const auto* side : {&q, &q2}) {
      for (const auto& t : side->terms()) {
        if (t.exponent < l) { f = std::max(f, t.exponent); break; }
      }
    }
    return {circle_of(truncate(q2, l)), f, l};
  }
  throw std::logic_error("common_part: no cut found");
}

namespace {

// sum_j k_j (1/lcm(d_0..d_{j-1}) - 1/lcm(d_0..d_j)) with 1/lcm() = 1 for the
// empty prefix; returns the sum and the final lcm.
std::pair<Rational, std::int64_t> level_sum(const std::vector<Rational>& exponents) {
  Rational sum(0);
  std::int64_t l = 1;
  for (const auto& k : exponents) {
    std::int64_t next = std::lcm(l, k.denominator_int64());
    sum += k * (Rational(1, l) - Rational(1, next));
    l = next;
  }
  return {sum, l};
}

}  // namespace

Rational rescaled_loop(const StokesCircle& I) {
  return level_sum(I.exponents()).first - Rational(1);
}

Rational rescaled_edge(const StokesCircle& I, const StokesCircle& J) {
  auto cp = common_part(I, J);
  auto [sum, l] = level_sum(cp.common.exponents());
  return sum + cp.fission_exponent / Rational(l) - Rational(1);
}

std::int64_t loop_multiplicity(const StokesCircle& I) {
  if (I.is_tame()) return 0;
  const std::int64_t r = I.ram();
  auto m = I.numerators_over_ram();
  std::int64_t g = std::gcd(r, m[0]);
  std::int64_t b = m[0] * (r - g);
  for (std::size_t j = 1; j < m.size(); ++j) {
    std::int64_t next = std::gcd(g, m[j]);
    b += m[j] * (g - next);
    g = next;
  }
  b += 1 - r * r;
#ifndef NDEBUG
  assert(Rational(b) == Rational(r * r) * rescaled_loop(I) + Rational(1));
#endif
  return b;
}

std::int64_t edge_multiplicity(const StokesCircle& I, const StokesCircle& J) {
  Rational b = Rational(I.ram() * J.ram()) * rescaled_edge(I, J);
  if (!b.is_integer()) throw std::logic_error("edge multiplicity " + b.str() + " is not an integer");
  return b.to_int64();
}

std::int64_t edge_multiplicity_gcd(const StokesCircle& I, const StokesCircle& J) {
  auto cp = common_part(I, J);
  // Orient so that the fission exponent is the slope of I's different part.
  auto different_slope = [&](const StokesCircle& c) {
    for (const auto& t : c.rep().terms()) {
      if (t.exponent < cp.cut) return t.exponent;
    }
    return Rational(0);
  };
  const StokesCircle* a = &I;
  const StokesCircle* b = &J;
  if (different_slope(J) > different_slope(I)) std::swap(a, b);
  const std::int64_t r = a->ram(), r2 = b->ram();
  const std::int64_t s_d = (cp.fission_exponent * Rational(r)).to_int64();

  std::int64_t total = 0;
  std::int64_t g = r2;
  const auto& ks = cp.common.exponents();
  for (std::size_t j = 0; j < ks.size(); ++j) {
    std::int64_t m = (ks[j] * Rational(r)).to_int64();
    std::int64_t m2 = (ks[j] * Rational(r2)).to_int64();
    std::int64_t next = std::gcd(g, m2);
    total += m * (g - next);
    g = next;
  }
  return total + s_d * g - r * r2;
}

bool Diagram::is_graph() const {
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j ? B[i][j] != 0 : B[i][j] < 0) return false;
    }
  }
  return true;
}

bool Diagram::is_simply_laced() const {
  if (!is_graph()) return false;
  for (const auto& row : B) {
    for (auto v : row) {
      if (v > 1) return false;
    }
  }
  return true;
}

void Diagram::validate() const {
  const std::size_t n = vertices.size();
  if (B.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix size does not match vertex count");
  for (std::size_t i = 0; i < n; ++i) {
    if (B[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (B[i][i] % 2 != 0) {
      throw Error(ErrorKind::NotAGraph, "diagonal entry of vertex " + vertices[i] + " is odd");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (B[i][j] != B[j][i]) {
        throw Error(ErrorKind::NotAGraph, "matrix is not symmetric at (" + vertices[i] + ", " + vertices[j] + ")");
      }
    }
  }
  if (multiplicities && multiplicities->size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "multiplicity vector has the wrong length");
  }
  if (!circles.empty() && circles.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "circle list has the wrong length");
  }
}

Diagram Diagram::from_matrix(IntMatrix B) {
  Diagram d;
  for (std::size_t i = 0; i < B.size(); ++i) d.vertices.push_back(std::to_string(i));
  d.B = std::move(B);
  d.validate();
  return d;
}

namespace {

DecoratedDiagram assemble(const IrregularClass& theta, IntMatrix B) {
  DecoratedDiagram out;
  auto& d = out.diagram;
  d.circles = theta.circles();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    d.vertices.push_back("v" + std::to_string(i));
    out.r.push_back(d.circles[i].ram());
  }
  d.B = std::move(B);
  d.multiplicities = theta.multiplicities();
  return out;
}

}  // namespace

DecoratedDiagram build_diagram(const IrregularClass& theta) {
  if (theta.empty()) throw Error(ErrorKind::EmptyClass, "irregular class is empty");
  return assemble(theta, kernels::multiplicity_matrix_omp(theta.circles()));
}

DecoratedDiagram build_diagram_serial(const IrregularClass& theta) {
  if (theta.empty()) throw Error(ErrorKind::EmptyClass, "irregular class is empty");
  return assemble(theta, kernels::multiplicity_matrix_serial(theta.circles()));
}

RescaledDiagram rescale(const DecoratedDiagram& d) {
  const auto& B = d.diagram.B;
  const std::size_t n = B.size();
  if (d.r.size() != n) throw Error(ErrorKind::DimensionMismatch, "decoration has the wrong length");
  RescaledDiagram out;
  out.vertices = d.diagram.vertices;
  out.Bt.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.Bt[i][j] = i == j ? Rational(B[i][i] - 1, d.r[i] * d.r[i])
                            : Rational(B[i][j], d.r[i] * d.r[j]);
    }
  }
  return out;
}

std::int64_t cartan_dimension(const Diagram& diagram, std::span<const std::int64_t> d) {
  const std::size_t n = diagram.size();
  if (d.size() != n) throw Error(ErrorKind::DimensionMismatch, "dimension vector has the wrong length");
  std::int64_t quad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t c = (i == j ? 2 : 0) - diagram.B[i][j];
      quad += d[i] * c * d[j];
    }
  }
  return 2 - quad;
}

}  // namespace wildgraph
