// Copyright 2026 the charp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARP_PARSE_HPP
#define CHARP_PARSE_HPP

#include <cctype>
#include <string>

#include "charp/errors.hpp"
#include "charp/poly.hpp"
#include "charp/ring.hpp"

namespace charp {

// Polynomial text syntax: +, -, *, ^, integer literals, variable
// identifiers, parentheses. Implicit multiplication is rejected:
// write x*y, not xy (unless "xy" is itself a declared variable).
namespace detail {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, const std::string& text, std::size_t line0 = 1,
             std::size_t col0 = 1)
      : ring_(ring), s_(text), line_(line0), col0_(col0) {}

  Poly parse() {
    Poly f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  Poly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    Poly f = term();
    if (neg) f = -f;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        Poly t = term();
        f = (c == '+') ? f + t : f - t;
      } else {
        return f;
      }
    }
  }

  Poly term() {
    Poly f = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        get();
        f = f * factor();
      } else {
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
          fail("implicit multiplication is not allowed; write '*'");
        return f;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      std::uint32_t e = natural();
      return poly_pow(b, e);
    }
    return b;
  }

  Poly base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Poly f = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
      return f;
    }
    if (c == '-') {
      get();
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(ring_, fp_t(natural()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = ident();
      int idx = ring_->var_index(name);
      if (idx < 0) fail_at(start, "unknown variable '" + name + "'");
      return Poly::variable(ring_, std::size_t(idx));
    }
    if (c == '\0') fail("unexpected end of polynomial");
    fail(std::string("unexpected character '") + c + "'");
    return Poly();  // unreachable
  }

  std::uint32_t natural() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + std::uint64_t(get() - '0');
      if (v > 0xFFFFFFFFull) fail("number too large");
    }
    return std::uint32_t(v);
  }

  std::string ident() {
    std::string r;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      r.push_back(get());
    return r;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) {
    throw parse_error(msg, line_, col0_ + pos);
  }

  RingPtr ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
};

}  // namespace detail

inline Poly parse_poly(const RingPtr& ring, const std::string& text,
                       std::size_t line = 1, std::size_t col = 1) {
  return detail::PolyParser(ring, text, line, col).parse();
}

}  // namespace charp

#endif  // CHARP_PARSE_HPP
