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

#include "wildgraph/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace wildgraph {

namespace detail {

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (auto p : prime_divisors(n)) phi = phi / p * (p - 1);
  return phi;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  // Per-thread cache; Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  thread_local std::map<std::int64_t, std::vector<std::int64_t>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    // exact division by a monic polynomial
    std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      std::int64_t c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
    }
    num = std::move(quot);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace detail

namespace {

using Dense = std::vector<Rational>;

// Remainder of sum v[e] x^e modulo Phi_n, as phi(n) coefficients.
Dense reduce_mod_phi(std::int64_t n, Dense v) {
  const auto& phi = detail::cyclotomic_polynomial(n);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i].is_zero()) continue;
    Rational c = v[i];
    for (std::size_t t = 0; t <= deg; ++t) {
      if (phi[t] != 0) v[i - deg + t] -= c * Rational(phi[t]);
    }
  }
  v.resize(deg);
  return v;
}

// Projection of Q(zeta_n) onto Q(zeta_{n/p}) (relative trace divided by the
// degree), evaluated monomial by monomial on an unreduced representative.
Dense descend(std::int64_t n, std::int64_t p, const Dense& v) {
  std::int64_t m = n / p;
  Dense out(static_cast<std::size_t>(m));
  if (m % p == 0) {
    // zeta_n^e averages to zeta_m^(e/p) when p | e, else to 0.
    for (std::int64_t e = 0; e < n; e += p) out[e / p] += v[e];
    return out;
  }
  // p coprime to m: zeta_n = zeta_p^u zeta_m^w with u*m + w*p = 1.
  std::int64_t w = 0;
  for (std::int64_t t = 0; t < m; ++t) {
    if ((t * p) % m == 1 % m) { w = t; break; }
  }
  Rational minus_share(-1, p - 1);
  for (std::int64_t e = 0; e < n; ++e) {
    if (v[e].is_zero()) continue;
    std::int64_t target = (e * w) % m;
    if (e % p == 0) out[target] += v[e];
    else out[target] += v[e] * minus_share;
  }
  return out;
}

// Image of sum y[e] zeta_m^e in Q(zeta_n), m | n.
Dense embed(std::int64_t m, const Dense& y, std::int64_t n) {
  Dense out(static_cast<std::size_t>(n));
  std::int64_t step = n / m;
  for (std::size_t e = 0; e < y.size(); ++e) {
    if (!y[e].is_zero()) out[(static_cast<std::int64_t>(e) * step) % n] += y[e];
  }
  return out;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& q) {
  if (!q.is_zero()) terms_.emplace_back(0, q);
}

Cyclotomic Cyclotomic::from_dense(std::int64_t n, std::vector<Rational> v) {
  if (n < 1 || static_cast<std::int64_t>(v.size()) != n) {
    throw std::invalid_argument("Cyclotomic::from_dense: bad conductor/size");
  }
  // Support on multiples of g means the value is a polynomial in zeta_{n/g}.
  std::int64_t g = n;
  for (std::int64_t e = 0; e < n; ++e) {
    if (!v[e].is_zero()) g = std::gcd(g, e);
  }
  if (g == n) {
    // only the constant term (or nothing) survives
    return Cyclotomic(v[0]);
  }
  if (g > 1) {
    Dense w(static_cast<std::size_t>(n / g));
    for (std::int64_t e = 0; e < n; e += g) w[e / g] = std::move(v[e]);
    n /= g;
    v = std::move(w);
  }

  Dense reduced = reduce_mod_phi(n, v);
  for (bool descended = true; descended;) {
    descended = false;
    for (auto p : detail::prime_divisors(n)) {
      std::int64_t m = n / p;
      Dense y = descend(n, p, v);
      Dense y_red = reduce_mod_phi(m, y);
      Dense y_dense(static_cast<std::size_t>(m));
      std::copy(y_red.begin(), y_red.end(), y_dense.begin());
      if (reduce_mod_phi(n, embed(m, y_dense, n)) == reduced) {
        n = m;
        v = std::move(y_dense);
        reduced = std::move(y_red);
        descended = true;
        break;
      }
    }
  }

  Cyclotomic out;
  out.conductor_ = n;
  for (std::size_t e = 0; e < reduced.size(); ++e) {
    if (!reduced[e].is_zero()) out.terms_.emplace_back(static_cast<std::int64_t>(e), reduced[e]);
  }
  if (out.terms_.empty()) out.conductor_ = 1;
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t k, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
  std::int64_t e = ((k % n) + n) % n;
  // Conjugation asks for the same few roots over and over.
  thread_local std::map<std::pair<std::int64_t, std::int64_t>, Cyclotomic> cache;
  auto it = cache.find({e, n});
  if (it != cache.end()) return it->second;
  Dense v(static_cast<std::size_t>(n));
  v[e] = Rational(1);
  auto z = from_dense(n, std::move(v));
  if (cache.size() < 4096) cache.emplace(std::pair{e, n}, z);
  return z;
}

Cyclotomic Cyclotomic::gaussian(const Rational& re, const Rational& im) {
  return from_dense(4, {re, im, Rational(0), Rational(0)});
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.front().second;
}

std::optional<std::pair<Rational, Rational>> Cyclotomic::as_gaussian() const {
  if (conductor_ == 1) return std::pair{as_rational().value(), Rational(0)};
  if (conductor_ != 4) return std::nullopt;
  Rational re, im;
  for (const auto& [e, c] : terms_) (e == 0 ? re : im) = c;
  return std::pair{re, im};
}

namespace {

Dense to_dense(const Cyclotomic& x, std::int64_t n) {
  Dense out(static_cast<std::size_t>(n));
  std::int64_t step = n / x.conductor();
  for (const auto& [e, c] : x.terms()) out[(e * step) % n] += c;
  return out;
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  std::int64_t n = std::lcm(a.conductor_, b.conductor_);
  Dense v = to_dense(a, n);
  std::int64_t step = n / b.conductor_;
  for (const auto& [e, c] : b.terms_) v[(e * step) % n] += c;
  return Cyclotomic::from_dense(n, std::move(v));
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  if (a.conductor_ == 1) {
    Cyclotomic out = b;
    for (auto& t : out.terms_) t.second *= a.terms_.front().second;
    return out;
  }
  if (b.conductor_ == 1) return b * a;
  std::int64_t n = std::lcm(a.conductor_, b.conductor_);
  std::int64_t sa = n / a.conductor_, sb = n / b.conductor_;
  Dense v(static_cast<std::size_t>(n));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) v[(ea * sa + eb * sb) % n] += ca * cb;
  }
  return Cyclotomic::from_dense(n, std::move(v));
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    if (auto c = a.terms_[i].second <=> b.terms_[i].second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string Cyclotomic::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.str();
    std::string atom;
    if (e != 0) {
      atom = "E(" + std::to_string(conductor_) + ")";
      if (e != 1) atom += "^" + std::to_string(e);
    }
    std::string piece;
    if (atom.empty()) piece = coeff;
    else if (c == Rational(1)) piece = atom;
    else if (c == Rational(-1)) piece = "-" + atom;
    else piece = coeff + "*" + atom;
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

Cyclotomic cyclo_root_of_unity(std::int64_t k, std::int64_t n) {
  return Cyclotomic::root_of_unity(k, n);
}

Cyclotomic cyclo_arith(CycloOp op, const Cyclotomic& x, const Cyclotomic& y) {
  switch (op) {
    case CycloOp::Add: return x + y;
    case CycloOp::Mul: return x * y;
    case CycloOp::Neg: return -x;
  }
  throw std::invalid_argument("cyclo_arith: unknown op");
}

}  // namespace wildgraph
