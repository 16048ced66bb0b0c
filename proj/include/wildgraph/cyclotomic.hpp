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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wildgraph/rational.hpp"

namespace wildgraph {

/// An element of Q(zeta_n) for some n: a finite Q-linear combination of roots
/// of unity.
///
/// Values are kept in a canonical form. The conductor n is the smallest
/// integer with the value in Q(zeta_n) (rationals have conductor 1), and the
/// coefficients are those of the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1)
/// after reduction modulo the n-th cyclotomic polynomial. Two values are equal
/// exactly when their (conductor, terms) data coincide.
class Cyclotomic {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  Cyclotomic() = default;
  Cyclotomic(const Rational& q);     // NOLINT(implicit)
  Cyclotomic(std::int64_t q) : Cyclotomic(Rational(q)) {}  // NOLINT(implicit)

  /// exp(2 pi i k / n); depends only on k mod n.
  static Cyclotomic root_of_unity(std::int64_t k, std::int64_t n);
  /// re + im * i
  static Cyclotomic gaussian(const Rational& re, const Rational& im);
  /// Sum of c_e * zeta_n^e over e = 0..n-1, canonicalized.
  static Cyclotomic from_dense(std::int64_t n, std::vector<Rational> coeffs);

  std::int64_t conductor() const { return conductor_; }
  /// Nonzero power-basis coefficients, ascending by basis exponent.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rational> as_rational() const;
  /// (re, im) when the value lies in Q(i).
  std::optional<std::pair<Rational, Rational>> as_gaussian() const;

  /// Sum-of-roots text such as "1/2+E(3)" (E(n) = zeta_n); "0" for zero.
  std::string str() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) = default;
  /// Total order on canonical data: conductor first, then terms.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::int64_t conductor_ = 1;
  std::vector<Term> terms_;
};

enum class CycloOp { Add, Mul, Neg };

Cyclotomic cyclo_root_of_unity(std::int64_t k, std::int64_t n);
/// `y` is ignored for Neg.
Cyclotomic cyclo_arith(CycloOp op, const Cyclotomic& x, const Cyclotomic& y);

namespace detail {
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
}  // namespace detail

}  // namespace wildgraph
