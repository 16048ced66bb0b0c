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

#include "wildgraph/puiseux.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "wildgraph/errors.hpp"

namespace wildgraph {

ExponentialFactor ExponentialFactor::from_terms(std::vector<Term> terms) {
  std::map<Rational, Cyclotomic, std::greater<>> merged;
  for (auto& t : terms) {
    if (t.exponent.sign() <= 0) {
      throw Error(ErrorKind::NonPositiveExponent,
                  "exponent " + t.exponent.str() + " is not positive");
    }
    auto [it, inserted] = merged.try_emplace(t.exponent, t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }
  ExponentialFactor out;
  for (auto& [e, c] : merged) {
    if (!c.is_zero()) out.terms_.push_back({e, std::move(c)});
  }
  return out;
}

ExponentialFactor factor_canonicalize(std::vector<Term> terms) {
  return ExponentialFactor::from_terms(std::move(terms));
}

std::int64_t ExponentialFactor::ramification() const {
  std::int64_t r = 1;
  for (const auto& t : terms_) r = std::lcm(r, t.exponent.denominator_int64());
  return r;
}

Rational ExponentialFactor::slope() const {
  return terms_.empty() ? Rational(0) : terms_.front().exponent;
}

ExponentialFactor ExponentialFactor::conjugate(std::int64_t k) const {
  std::int64_t r = ramification();
  if (r == 1 || k % r == 0) return *this;
  ExponentialFactor out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::int64_t m = (t.exponent * Rational(r)).to_int64();
    std::int64_t e = ((k * m) % r + r) % r;
    if (e == 0) {
      out.terms_.push_back(t);
    } else if (2 * e == r) {
      out.terms_.push_back({t.exponent, -t.coeff});
    } else {
      out.terms_.push_back({t.exponent, t.coeff * Cyclotomic::root_of_unity(e, r)});
    }
  }
  return out;
}

ExponentialFactor operator+(const ExponentialFactor& a, const ExponentialFactor& b) {
  std::vector<Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return ExponentialFactor::from_terms(std::move(all));
}

ExponentialFactor operator-(const ExponentialFactor& a) {
  ExponentialFactor out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

ExponentialFactor operator-(const ExponentialFactor& a, const ExponentialFactor& b) { return a + (-b); }

std::strong_ordering operator<=>(const ExponentialFactor& a, const ExponentialFactor& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::vector<ExponentialFactor> galois_conjugates(const ExponentialFactor& q) {
  std::int64_t r = q.ramification();
  std::vector<ExponentialFactor> out;
  out.reserve(static_cast<std::size_t>(r));
  for (std::int64_t k = 0; k < r; ++k) out.push_back(q.conjugate(k));
#ifndef NDEBUG
  // With the minimal ramification no two conjugates coincide.
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  assert(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
#endif
  return out;
}

ExponentialFactor truncate(const ExponentialFactor& q, const Rational& k) {
  std::vector<Term> kept;
  for (const auto& t : q.terms()) {
    if (t.exponent >= k) kept.push_back(t);
  }
  return ExponentialFactor::from_terms(std::move(kept));
}

ExponentialFactor truncate_above(const ExponentialFactor& q, const Rational& k) {
  std::vector<Term> kept;
  for (const auto& t : q.terms()) {
    if (t.exponent > k) kept.push_back(t);
  }
  return ExponentialFactor::from_terms(std::move(kept));
}

StokesCircle::StokesCircle() = default;

StokesCircle circle_of(const ExponentialFactor& q) {
  StokesCircle c;
  auto conj = galois_conjugates(q);
  c.rep_ = *std::min_element(conj.begin(), conj.end());
  c.ram_ = q.ramification();
  c.slope_ = q.slope();
  c.irr_ = (c.slope_ * Rational(c.ram_)).to_int64();

  std::int64_t g = c.ram_;
  for (const auto& t : c.rep_.terms()) {
    c.exponents_.push_back(t.exponent);
    std::int64_t m = (t.exponent * Rational(c.ram_)).to_int64();
    std::int64_t next = std::gcd(g, m);
    if (next < g) c.levels_.push_back(t.exponent);
    g = next;
  }
  return c;
}

std::vector<std::int64_t> StokesCircle::numerators_over_ram() const {
  std::vector<std::int64_t> out;
  for (const auto& k : exponents_) out.push_back((k * Rational(ram_)).to_int64());
  return out;
}

std::vector<std::int64_t> StokesCircle::denominators() const {
  std::vector<std::int64_t> out;
  for (const auto& k : exponents_) out.push_back(k.denominator_int64());
  return out;
}

bool circles_equal(const ExponentialFactor& q, const ExponentialFactor& q2) {
  if (q.ramification() != q2.ramification()) return false;
  if (q.terms().size() != q2.terms().size()) return false;
  return circle_of(q) == circle_of(q2);
}

namespace {

// Lower is nicer: 1, then positive rationals, negative rationals, then
// Gaussian values.
int display_rank(const Cyclotomic& c) {
  if (auto q = c.as_rational()) {
    if (*q == Rational(1)) return 0;
    return q->sign() > 0 ? 1 : 2;
  }
  return 3;
}

std::vector<int> display_key(const ExponentialFactor& f) {
  std::vector<int> key;
  for (const auto& t : f.terms()) key.push_back(display_rank(t.coeff));
  return key;
}

}  // namespace

ExponentialFactor display_factor(const StokesCircle& c) {
  auto gaussian = [](const ExponentialFactor& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const Term& t) { return t.coeff.as_gaussian().has_value(); });
  };
  std::optional<ExponentialFactor> best;
  std::vector<int> best_key;
  for (auto& f : galois_conjugates(c.rep())) {
    if (!gaussian(f)) continue;
    auto key = display_key(f);
    if (!best || key < best_key || (key == best_key && f < *best)) {
      best = std::move(f);
      best_key = std::move(key);
    }
  }
  return best ? *best : c.rep();
}

}  // namespace wildgraph
