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

#include "wildgraph/text.hpp"

#include <cctype>
#include <gmpxx.h>

#include "wildgraph/errors.hpp"

namespace wildgraph {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::Parse) {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(kind, pos_, what + ", found " + found);
  }
  [[noreturn]] void fail_at(std::size_t at, ErrorKind kind, const std::string& what) {
    throw ParseError(kind, at, what);
  }
  std::size_t pos() {
    skip();
    return pos_;
  }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  mpz_class nat() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::int64_t small_nat() {
    std::size_t at = pos();
    mpz_class n = nat();
    if (!n.fits_slong_p()) fail_at(at, ErrorKind::Parse, "number too large");
    return n.get_si();
  }

  // ["-"] nat ["/" nat]
  Rational rat() {
    bool neg = accept('-');
    mpz_class num = nat();
    mpz_class den = 1;
    if (accept('/')) {
      std::size_t at = pos();
      den = nat();
      if (den == 0) fail_at(at, ErrorKind::Parse, "zero denominator");
    }
    mpq_class q(neg ? mpz_class(-num) : num, den);
    q.canonicalize();
    return Rational(q);
  }

  // A single summand inside a parenthesized coefficient.
  Cyclotomic paren_atom() {
    Rational scale(1);
    bool scaled = false;
    if (digit_next()) {
      scale = rat();
      scaled = true;
      if (!accept('*')) {
        if (accept('i')) return Cyclotomic::gaussian(0, scale);
        return Cyclotomic(scale);
      }
    }
    if (accept('i')) return Cyclotomic::gaussian(0, scale);
    if (accept('E')) {
      expect('(');
      std::size_t at = pos();
      std::int64_t n = small_nat();
      if (n < 1 || n > kMaxParsedRamification * 4) fail_at(at, ErrorKind::Parse, "bad root of unity order");
      expect(')');
      std::int64_t k = 1;
      if (accept('^')) {
        bool neg = accept('-');
        k = small_nat();
        if (neg) k = -k;
      }
      return Cyclotomic(scale) * Cyclotomic::root_of_unity(k, n);
    }
    if (scaled) fail("expected 'i' or 'E(n)' after '*'");
    fail("expected a coefficient");
  }

  Cyclotomic paren_sum() {
    Cyclotomic total;
    bool first = true;
    while (true) {
      bool neg = false;
      if (accept('-')) neg = true;
      else if (!first && !accept('+')) break;
      else if (first && peek() == '+') fail("unexpected '+'");
      Cyclotomic a = paren_atom();
      total = total + (neg ? -a : a);
      first = false;
      if (peek() == ')') break;
    }
    return total;
  }

  // Coefficient followed by '*', or nothing when the next token is 'z'.
  std::optional<Cyclotomic> coeff() {
    char c = peek();
    if (c == 'z') return std::nullopt;
    Cyclotomic v;
    if (c == '(') {
      ++pos_;
      v = paren_sum();
      expect(')');
    } else if (c == 'i') {
      ++pos_;
      v = Cyclotomic::gaussian(0, 1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q = rat();
      v = accept('i') ? Cyclotomic::gaussian(0, q) : Cyclotomic(q);
    } else {
      fail("expected a coefficient or 'z'");
    }
    if (!accept('*')) {
      if (peek() == 'z') fail("expected '*' between coefficient and 'z'");
      fail("a term needs a power of z");
    }
    return v;
  }

  Term term(bool negate) {
    auto c = coeff();
    std::size_t zpos = pos();
    if (!accept('z')) fail("expected 'z'");
    Rational e(1);
    std::size_t epos = zpos;
    if (accept('^')) {
      epos = pos();
      if (accept('(')) {
        epos = pos();
        e = rat();
        expect(')');
      } else if (peek() == '-') {
        e = rat();
      } else {
        e = Rational(mpq_class(nat()));
      }
    }
    if (e.sign() <= 0) fail_at(epos, ErrorKind::NonPositiveExponent, "exponent " + e.str() + " is not positive");
    if (e.denominator() > kMaxParsedRamification) fail_at(epos, ErrorKind::Parse, "exponent denominator too large");
    Cyclotomic v = c ? *c : Cyclotomic(1);
    return {e, negate ? -v : v};
  }

  ExponentialFactor factor() {
    std::size_t start = pos();
    if (peek() == '0') {
      // "0" alone is the zero factor; "0*z" is an ordinary term.
      std::size_t save = pos_;
      ++pos_;
      char next = peek();
      if (next == '>' || next == '\0') return ExponentialFactor{};
      pos_ = save;
    }
    std::vector<Term> terms;
    bool negate = accept('-');
    terms.push_back(term(negate));
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        terms.push_back(term(false));
      } else if (c == '-') {
        ++pos_;
        terms.push_back(term(true));
      } else {
        break;
      }
    }
    auto q = ExponentialFactor::from_terms(std::move(terms));
    if (q.ramification() > kMaxParsedRamification) fail_at(start, ErrorKind::Parse, "ramification order too large");
    return q;
  }

  ClassExpression cls() {
    ClassExpression out;
    out.source = std::string(s_);
    do {
      std::int64_t mult = 1;
      if (digit_next()) {
        std::size_t at = pos();
        mult = small_nat();
        if (mult == 0) fail_at(at, ErrorKind::ZeroMultiplicity, "multiplicity must be positive");
        expect('*');
      }
      expect('<');
      auto q = factor();
      expect('>');
      out.entries.emplace_back(mult, std::move(q));
    } while (accept('+'));
    if (!at_end()) fail("expected '+' or end of input");
    return out;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExponentialFactor parse_factor(std::string_view text) {
  Parser p(text);
  bool wrapped = p.accept('<');
  auto q = p.factor();
  if (wrapped) p.expect('>');
  if (!p.at_end()) p.fail("unexpected trailing input");
  return q;
}

ClassExpression parse_class(std::string_view text) {
  Parser p(text);
  if (p.at_end()) p.fail("empty class expression");
  return p.cls();
}

Cyclotomic parse_coefficient(std::string_view text) {
  Parser p(text);
  Cyclotomic v;
  if (p.accept('(')) {
    v = p.paren_sum();
    p.expect(')');
  } else {
    v = p.paren_sum();
  }
  if (!p.at_end()) p.fail("unexpected trailing input");
  return v;
}

namespace {

// Prefix placed before "z^(...)": "", "-", "3*", "(1+2i)*", ...
std::string coefficient_prefix(const Cyclotomic& c) {
  if (auto q = c.as_rational()) {
    if (*q == Rational(1)) return "";
    if (*q == Rational(-1)) return "-";
    return q->str() + "*";
  }
  if (auto g = c.as_gaussian()) {
    const auto& [re, im] = *g;
    std::string imag = im == Rational(1) ? "i" : im == Rational(-1) ? "-i" : im.str() + "i";
    if (re.is_zero()) return imag + "*";
    return "(" + re.str() + (im.sign() > 0 ? "+" : "") + imag + ")*";
  }
  return "(" + c.str() + ")*";
}

}  // namespace

std::string format_factor(const ExponentialFactor& q) {
  if (q.is_zero()) return "0";
  std::string out;
  for (const auto& t : q.terms()) {
    std::string power = t.exponent == Rational(1) ? "z"
                        : t.exponent.is_integer() ? "z^" + t.exponent.str()
                                                  : "z^(" + t.exponent.str() + ")";
    std::string piece = coefficient_prefix(t.coeff) + power;
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

std::string format_circle(const StokesCircle& c) {
  return "<" + format_factor(display_factor(c)) + ">";
}

std::string format_class(const IrregularClass& theta) {
  std::string out;
  for (const auto& e : theta.entries()) {
    if (!out.empty()) out += " + ";
    if (e.multiplicity != 1) out += std::to_string(e.multiplicity) + "*";
    out += format_circle(e.circle);
  }
  return out;
}

}  // namespace wildgraph
