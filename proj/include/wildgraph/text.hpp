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

// Text syntax for factors, circles and classes.
//
//   class  := item ("+" item)*
//   item   := [nat "*"] "<" factor ">"
//   factor := "0" | ["-"] term (("+" | "-") term)*
//   term   := [coeff "*"] "z" ["^" (nat | "(" rat ")")]
//   coeff  := rat | [rat] "i" | "(" sum ")"
//
// A parenthesized sum may mix rationals, "i", and roots of unity written
// E(n) or E(n)^k, each optionally scaled by "rat*". Whitespace is ignored.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wildgraph/diagram.hpp"
#include "wildgraph/puiseux.hpp"

namespace wildgraph {

struct ClassExpression {
  std::string source;
  std::vector<std::pair<std::int64_t, ExponentialFactor>> entries;

  IrregularClass to_class() const { return IrregularClass::from_factors(entries); }
};

/// Factors with a ramification order above this are rejected by the parser.
inline constexpr std::int64_t kMaxParsedRamification = 1024;

/// Accepts a bare factor or one wrapped in "<...>".
ExponentialFactor parse_factor(std::string_view text);
ClassExpression parse_class(std::string_view text);
Cyclotomic parse_coefficient(std::string_view text);

std::string format_factor(const ExponentialFactor& q);
/// "<...>" around the display conjugate.
std::string format_circle(const StokesCircle& c);
/// Entries joined by " + ", multiplicities as "n*<...>".
std::string format_class(const IrregularClass& theta);

}  // namespace wildgraph
