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

#include "wildgraph/feasibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wildgraph {

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& r) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * r[i];
  return s;
}

mpq_class dot_q(const std::vector<mpz_class>& a, const std::vector<mpq_class>& r) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += mpq_class(a[i]) * r[i];
  }
  return s;
}

struct Row {
  std::vector<mpz_class> c;
  bool strict = false;

  bool operator<(const Row& o) const {
    if (c != o.c) return c < o.c;
    return strict < o.strict;
  }
};

void normalize(std::vector<mpz_class>& c) {
  mpz_class g = 0;
  for (const auto& x : c) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : c) x /= g;
  }
}

bool all_zero(const std::vector<mpz_class>& c) {
  return std::all_of(c.begin(), c.end(), [](const mpz_class& x) { return x == 0; });
}

// Keeps one row per coefficient vector, strict when any copy is strict.
std::vector<Row> dedupe(std::vector<Row> rows) {
  std::sort(rows.begin(), rows.end());
  std::vector<Row> out;
  for (auto& r : rows) {
    if (!out.empty() && out.back().c == r.c) {
      out.back().strict = out.back().strict || r.strict;
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

struct Substitution {
  std::size_t var;
  std::vector<mpz_class> eq;  // eq . r = 0 with eq[var] != 0
};

struct Elimination {
  std::size_t var;
  std::vector<Row> rows;  // rows involving var at the time it was eliminated
};

}  // namespace

bool satisfies(const FeasibilitySystem& system, const std::vector<mpz_class>& r) {
  if (r.size() != system.variables) return false;
  for (const auto& x : r) {
    if (x <= 0) return false;
  }
  for (const auto& c : system.constraints) {
    mpz_class v = dot(c.coeffs, r);
    switch (c.rel) {
      case Relation::Eq: if (v != 0) return false; break;
      case Relation::Le: if (v > 0) return false; break;
      case Relation::Lt: if (v >= 0) return false; break;
    }
  }
  return true;
}

std::optional<std::vector<mpz_class>> solve_homogeneous(const FeasibilitySystem& system) {
  const std::size_t n = system.variables;
  if (n == 0) return std::vector<mpz_class>{};

  std::vector<std::vector<mpz_class>> eqs;
  std::vector<Row> rows;
  for (const auto& c : system.constraints) {
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint has the wrong number of coefficients");
    if (c.rel == Relation::Eq) eqs.push_back(c.coeffs);
    else rows.push_back({c.coeffs, c.rel == Relation::Lt});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> c(n, 0);
    c[i] = -1;
    rows.push_back({c, true});
  }

  // Substitute equalities away.
  std::vector<Substitution> subs;
  std::vector<bool> free_var(n, true);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    auto& a = eqs[e];
    normalize(a);
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != 0 && (k == n || abs(a[i]) < abs(a[k]))) k = i;
    }
    if (k == n) continue;
    mpz_class ak = a[k];
    int s = sgn(ak);
    mpz_class abs_ak = abs(ak);
    auto eliminate = [&](std::vector<mpz_class>& c) {
      if (c[k] == 0) return;
      mpz_class ck = c[k];
      for (std::size_t i = 0; i < n; ++i) c[i] = abs_ak * c[i] - s * ck * a[i];
      normalize(c);
    };
    for (std::size_t f = e + 1; f < eqs.size(); ++f) eliminate(eqs[f]);
    for (auto& r : rows) eliminate(r.c);
    subs.push_back({k, a});
    free_var[k] = false;
  }

  // Fourier-Motzkin on the remaining variables.
  std::vector<Elimination> elims;
  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < n; ++i) {
    if (free_var[i]) remaining.push_back(i);
  }
  auto settle = [&](std::vector<Row>& rs) -> bool {
    std::vector<Row> kept;
    for (auto& r : rs) {
      normalize(r.c);
      if (all_zero(r.c)) {
        if (r.strict) return false;
        continue;
      }
      kept.push_back(std::move(r));
    }
    rs = dedupe(std::move(kept));
    return true;
  };
  if (!settle(rows)) return std::nullopt;
  while (!remaining.empty()) {
    // Eliminate the variable producing the fewest new rows.
    std::size_t best = 0;
    long best_cost = -1;
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        int s = sgn(r.c[remaining[idx]]);
        pos += s > 0;
        neg += s < 0;
      }
      long cost = pos * neg - pos - neg;
      if (best_cost == -1 || cost < best_cost) {
        best_cost = cost;
        best = idx;
      }
    }
    std::size_t k = remaining[best];
    remaining.erase(remaining.begin() + static_cast<long>(best));
    std::vector<Row> upper, lower, next;
    for (auto& r : rows) {
      int s = sgn(r.c[k]);
      if (s > 0) upper.push_back(r);
      else if (s < 0) lower.push_back(r);
      else next.push_back(std::move(r));
    }
    for (const auto& u : upper) {
      for (const auto& l : lower) {
        Row combined;
        combined.c.resize(n);
        mpz_class a = -l.c[k], b = u.c[k];
        for (std::size_t i = 0; i < n; ++i) combined.c[i] = a * u.c[i] + b * l.c[i];
        combined.strict = u.strict || l.strict;
        next.push_back(std::move(combined));
      }
    }
    Elimination el{k, {}};
    el.rows.insert(el.rows.end(), upper.begin(), upper.end());
    el.rows.insert(el.rows.end(), lower.begin(), lower.end());
    elims.push_back(std::move(el));
    rows = std::move(next);
    if (!settle(rows)) return std::nullopt;
  }

  // Back-substitute in reverse elimination order.
  std::vector<mpq_class> r(n, 0);
  for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
    const std::size_t k = it->var;
    std::optional<mpq_class> lo, hi;
    bool hi_strict = false;
    for (const auto& row : it->rows) {
      // c_k x_k + rest (<|<=) 0
      mpq_class rest = dot_q(row.c, r) - mpq_class(row.c[k]) * r[k];
      mpq_class bound = -rest / mpq_class(row.c[k]);
      if (row.c[k] > 0) {
        if (!hi || bound < *hi || (bound == *hi && row.strict)) {
          hi = bound;
          hi_strict = row.strict;
        }
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    mpq_class v;
    if (lo && hi) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      mpq_class candidate(f + 1);
      bool fits = hi_strict ? candidate < *hi : candidate <= *hi;
      if (*lo == *hi) v = *lo;
      else if (fits) v = candidate;
      else v = (*lo + *hi) / 2;
    } else if (lo) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      v = mpq_class(f + 1);
    } else if (hi) {
      mpz_class c;
      mpz_cdiv_q(c.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      v = mpq_class(c - 1);
    } else {
      v = 1;
    }
    r[k] = v;
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    const std::size_t k = it->var;
    mpq_class rest = dot_q(it->eq, r) - mpq_class(it->eq[k]) * r[k];
    r[k] = -rest / mpq_class(it->eq[k]);
  }

  // Clear denominators and make the vector primitive.
  mpz_class l = 1;
  for (const auto& x : r) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> out(n);
  mpz_class g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class scaled = r[i] * l;
    out[i] = scaled.get_num();
    g = gcd(g, out[i]);
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  if (!satisfies(system, out)) throw std::logic_error("solve_homogeneous: back-substitution produced an invalid point");
  return out;
}

}  // namespace wildgraph
