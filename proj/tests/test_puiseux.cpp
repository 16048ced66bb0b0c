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

#include "doctest.h"
#include "generators.hpp"
#include "wildgraph/errors.hpp"
#include "wildgraph/puiseux.hpp"

using namespace wildgraph;
using wildgraph::testing::circle;
using wildgraph::testing::factor;
using wildgraph::testing::Gen;

TEST_CASE("invariants of a single-term circle") {
  auto c = circle({{"5/2", 1}});
  CHECK(c.ram() == 2);
  CHECK(c.irr() == 5);
  CHECK(c.slope() == Rational(5, 2));
  CHECK(c.exponents() == std::vector<Rational>{Rational(5, 2)});
  CHECK(c.levels() == std::vector<Rational>{Rational(5, 2)});
  CHECK(!c.untwisted());
}

TEST_CASE("levels follow the gcd chain") {
  // r = 4, m = (10, 8, 5): gcd chain 4 -> 2 -> 2 -> 1
  auto c = circle({{"5/2", 1}, {"2", 1}, {"5/4", 1}});
  CHECK(c.ram() == 4);
  CHECK(c.levels() == std::vector<Rational>{Rational(5, 2), Rational(5, 4)});
  // r = 6, m = (15, 14, 12): 6 -> 3 -> 1 -> 1
  c = circle({{"5/2", 1}, {"7/3", 1}, {"2", 1}});
  CHECK(c.ram() == 6);
  CHECK(c.numerators_over_ram() == std::vector<std::int64_t>{15, 14, 12});
  CHECK(c.levels() == std::vector<Rational>{Rational(5, 2), Rational(7, 3)});
  CHECK(c.denominators() == std::vector<std::int64_t>{2, 3, 1});
}

TEST_CASE("untwisted circles have no levels") {
  auto c = circle({{"3", 1}, {"1", 2}});
  CHECK(c.untwisted());
  CHECK(c.levels().empty());
  CHECK(c.exponents().size() == 2);
}

TEST_CASE("tame circle") {
  StokesCircle t;
  CHECK(t.is_tame());
  CHECK(t.ram() == 1);
  CHECK(t.irr() == 0);
  CHECK(t == circle_of(ExponentialFactor{}));
}

TEST_CASE("nonpositive exponents are rejected") {
  CHECK_THROWS_AS(factor({{"0", 1}}), Error);
  CHECK_THROWS_AS(factor({{"-1/2", 1}}), Error);
}

TEST_CASE("terms merge and cancel") {
  auto q = factor({{"3/2", 1}, {"3/2", -1}, {"1", 2}});
  REQUIRE(q.terms().size() == 1);
  CHECK(q.ramification() == 1);
  CHECK(q.slope() == Rational(1));
}

TEST_CASE("sign change is a conjugation for odd numerators over 2") {
  CHECK(circle({{"5/2", 1}}) == circle({{"5/2", -1}}));
  CHECK(circle({{"3", 1}}) != circle({{"3", -1}}));
  // z^(1/2) -> -z^(1/2) flips both odd terms together.
  CHECK(circle({{"5/2", 1}, {"3/2", 1}}) == circle({{"5/2", -1}, {"3/2", -1}}));
  CHECK(circle({{"5/2", 1}, {"3/2", 1}}) != circle({{"5/2", 1}, {"3/2", -1}}));
}

TEST_CASE("conjugation multiplies each coefficient by a root of unity") {
  auto q = factor({{"7/3", 1}, {"2", 5}, {"1/3", 1}});
  auto c1 = q.conjugate(1);
  // coefficient at m/r picks up zeta_3^m
  CHECK(c1.terms()[0].coeff == Cyclotomic::root_of_unity(7, 3));
  CHECK(c1.terms()[1].coeff == Cyclotomic(5));
  CHECK(c1.terms()[2].coeff == Cyclotomic::root_of_unity(1, 3));
}

TEST_CASE("circles are constant on Galois orbits") {
  Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto q = g.factor();
    auto c = circle_of(q);
    auto conj = galois_conjugates(q);
    CHECK(conj.size() == static_cast<std::size_t>(q.ramification()));
    for (std::size_t k = 0; k < conj.size(); ++k) {
      CHECK(circle_of(conj[k]) == c);
      CHECK(c.rep() <= conj[k]);
    }
    // Pairwise distinct conjugates.
    for (std::size_t a = 0; a < conj.size(); ++a) {
      for (std::size_t b = a + 1; b < conj.size(); ++b) CHECK(conj[a] != conj[b]);
    }
    CHECK(c.ram() == q.ramification());
    CHECK(Rational(c.irr()) == c.slope() * Rational(c.ram()));
    CHECK(c.levels().size() <= c.exponents().size());
    CHECK(c.untwisted() == c.levels().empty());
  }
}

TEST_CASE("truncation") {
  auto q = factor({{"5/2", 1}, {"2", 1}, {"5/4", 3}});
  CHECK(truncate(q, Rational(2)).terms().size() == 2);
  CHECK(truncate_above(q, Rational(2)).terms().size() == 1);
  CHECK(truncate(q, Rational(3)).is_zero());
  CHECK(truncate(q, Rational(1, 4)) == q);
}

TEST_CASE("display conjugate prefers Gaussian coefficients") {
  // zeta_3 z^(1/3): the orbit contains z^(1/3) itself.
  std::vector<Term> t{{Rational(1, 3), Cyclotomic::root_of_unity(1, 3)}};
  auto c = circle_of(ExponentialFactor::from_terms(t));
  auto d = display_factor(c);
  CHECK(d.terms()[0].coeff.as_gaussian().has_value());
  CHECK(circle_of(d) == c);
}
