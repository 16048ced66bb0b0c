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
#include <string>
#include <vector>

#include "wildgraph/cyclotomic.hpp"
#include "wildgraph/rational.hpp"

namespace wildgraph {

/// One monomial c * z^e of an exponential factor.
struct Term {
  Rational exponent;
  Cyclotomic coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A Puiseux polynomial sum_j c_j z^(e_j) with positive rational exponents
/// e_j and nonzero coefficients. Terms are kept sorted by decreasing
/// exponent; the zero factor has no terms.
class ExponentialFactor {
 public:
  ExponentialFactor() = default;

  /// Merges repeated exponents, drops zero coefficients. Throws
  /// Error(NonPositiveExponent) on an exponent <= 0.
  static ExponentialFactor from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// lcm of the exponent denominators (1 for the zero factor).
  std::int64_t ramification() const;
  /// Leading exponent; 0 for the zero factor.
  Rational slope() const;

  /// Image under z^(1/r) -> zeta_r^k z^(1/r), r = ramification().
  ExponentialFactor conjugate(std::int64_t k) const;

  friend ExponentialFactor operator+(const ExponentialFactor& a, const ExponentialFactor& b);
  friend ExponentialFactor operator-(const ExponentialFactor& a, const ExponentialFactor& b);
  friend ExponentialFactor operator-(const ExponentialFactor& a);

  friend bool operator==(const ExponentialFactor&, const ExponentialFactor&) = default;
  /// Lexicographic on the term list (decreasing exponent), comparing
  /// (exponent, coefficient) pairs; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const ExponentialFactor& a, const ExponentialFactor& b);

 private:
  std::vector<Term> terms_;
};

ExponentialFactor factor_canonicalize(std::vector<Term> terms);

/// All r = Ram(q) Galois images of q, k = 0..r-1.
std::vector<ExponentialFactor> galois_conjugates(const ExponentialFactor& q);

/// Keeps the terms with exponent >= k.
ExponentialFactor truncate(const ExponentialFactor& q, const Rational& k);
/// Keeps the terms with exponent > k.
ExponentialFactor truncate_above(const ExponentialFactor& q, const Rational& k);

/// A Galois orbit of exponential factors together with its invariants.
class StokesCircle {
 public:
  /// The tame circle <0>.
  StokesCircle();

  const ExponentialFactor& rep() const { return rep_; }
  std::int64_t ram() const { return ram_; }
  std::int64_t irr() const { return irr_; }
  const Rational& slope() const { return slope_; }
  /// k_0 > k_1 > ... > k_p
  const std::vector<Rational>& exponents() const { return exponents_; }
  /// Subset of exponents() where the gcd chain gcd(r, m_0, ..., m_j) drops.
  const std::vector<Rational>& levels() const { return levels_; }

  bool is_tame() const { return rep_.is_zero(); }
  bool untwisted() const { return ram_ == 1; }

  /// m_j = k_j * ram
  std::vector<std::int64_t> numerators_over_ram() const;
  /// d_j = reduced denominator of k_j
  std::vector<std::int64_t> denominators() const;

  friend bool operator==(const StokesCircle& a, const StokesCircle& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const StokesCircle& a, const StokesCircle& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  friend StokesCircle circle_of(const ExponentialFactor& q);

  ExponentialFactor rep_;
  std::int64_t ram_ = 1;
  std::int64_t irr_ = 0;
  Rational slope_;
  std::vector<Rational> exponents_;
  std::vector<Rational> levels_;
};

StokesCircle circle_of(const ExponentialFactor& q);
bool circles_equal(const ExponentialFactor& q, const ExponentialFactor& q2);

/// A conjugate suitable for display: among the conjugates whose coefficients
/// all lie in Q(i), the one whose coefficients read most simply (1 first,
/// then positive, negative, non-real), ties broken by canonical order.
/// Falls back to rep() when no conjugate has Gaussian coefficients.
ExponentialFactor display_factor(const StokesCircle& c);

}  // namespace wildgraph
