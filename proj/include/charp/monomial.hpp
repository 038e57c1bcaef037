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

#ifndef CHARP_MONOMIAL_HPP
#define CHARP_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "charp/errors.hpp"

namespace charp {

// Exponents are fixed-width; overflow is a hard error, never silent wrap.
// Bracket powers at desk scale stay far below the cap.
using exp_t = std::uint16_t;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

// Inline exponent storage: the basis computations live on monomial
// comparisons, so exponent vectors are fixed arrays, not heap vectors.
inline constexpr std::size_t kMaxVars = 16;

struct Monomial {
  std::array<exp_t, kMaxVars> exps{};
  std::uint8_t n = 0;  // active variable count; tail entries stay zero

  Monomial() = default;
  explicit Monomial(std::size_t nvars) {
    if (nvars > kMaxVars) throw budget_error("too many variables (max 16)");
    n = std::uint8_t(nvars);
  }
  explicit Monomial(const std::vector<exp_t>& e) : Monomial(e.size()) {
    for (std::size_t i = 0; i < e.size(); ++i) exps[i] = e[i];
  }

  std::size_t nvars() const { return n; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < n; ++i) d += exps[i];
    return d;
  }

  bool is_one() const {
    for (std::size_t i = 0; i < n; ++i)
      if (exps[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return exps != o.exps; }
  bool operator<(const Monomial& o) const { return exps < o.exps; }  // storage order
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.n != b.n) throw structure_error("monomial length mismatch");
  Monomial r(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    std::uint32_t s = std::uint32_t(a.exps[i]) + std::uint32_t(b.exps[i]);
    if (s > kMaxExponent) throw budget_error("exponent overflow in monomial product");
    r.exps[i] = exp_t(s);
  }
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // a | b
  for (std::size_t i = 0; i < a.n; ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  // a / b, assuming b | a
  Monomial r(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    if (b.exps[i] > a.exps[i]) throw structure_error("inexact monomial division");
    r.exps[i] = exp_t(a.exps[i] - b.exps[i]);
  }
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  if (a.n != b.n) throw structure_error("monomial length mismatch");
  Monomial r(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    r.exps[i] = a.exps[i] > b.exps[i] ? a.exps[i] : b.exps[i];
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.n; ++i)
    if (a.exps[i] && b.exps[i]) return false;
  return true;
}

inline Monomial mono_pow(const Monomial& a, std::uint32_t k) {
  Monomial r(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    std::uint64_t s = std::uint64_t(a.exps[i]) * k;
    if (s > kMaxExponent) throw budget_error("exponent overflow in monomial power");
    r.exps[i] = exp_t(s);
  }
  return r;
}

struct MonomialOrder {
  enum class Kind { grevlex, lex, block };
  Kind kind = Kind::grevlex;
  // For block orders: the first `block` variables form the eliminated block;
  // both blocks are compared by grevlex.
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elim_block(std::size_t k) { return {Kind::block, k}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::block || block == o.block);
  }
};

namespace detail {

// grevlex on the index range [lo, hi): higher total degree wins; on ties the
// last differing exponent decides, smaller exponent winning.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b,
                             std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) { da += a.exps[i]; db += b.exps[i]; }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.n; ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  return 0;
}

}  // namespace detail

/// Total-order comparison: negative if m1 < m2, zero if equal, positive
/// if m1 > m2.
inline int mono_compare(const MonomialOrder& order, const Monomial& m1,
                        const Monomial& m2) {
  if (m1.n != m2.n) throw structure_error("monomial length mismatch");
  const std::size_t n = m1.n;
  switch (order.kind) {
    case MonomialOrder::Kind::grevlex:
      return detail::cmp_grevlex_range(m1, m2, 0, n);
    case MonomialOrder::Kind::lex:
      return detail::cmp_lex(m1, m2);
    case MonomialOrder::Kind::block: {
      int c = detail::cmp_grevlex_range(m1, m2, 0, order.block);
      if (c) return c;
      return detail::cmp_grevlex_range(m1, m2, order.block, n);
    }
  }
  return 0;
}

}  // namespace charp

#endif  // CHARP_MONOMIAL_HPP
