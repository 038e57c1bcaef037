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

#ifndef CHARP_POLY_HPP
#define CHARP_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charp/fp.hpp"
#include "charp/monomial.hpp"
#include "charp/ring.hpp"

namespace charp {

struct Term {
  Monomial m;
  fp_t c;  // nonzero, reduced into [1, p)
};

/// Sparse multivariate polynomial over F_p. Terms are kept in strictly
/// decreasing monomial order and never carry zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  /// Terms may arrive unsorted / unreduced; they are normalized here.
  Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    const fp_t p = fp_t(ring_->p);
    for (auto& t : terms) {
      if (t.m.nvars() != ring_->nvars())
        throw structure_error("term arity does not match ring");
      t.c = fp_reduce(t.c, p);
    }
    const Ring* r = ring_.get();
    std::sort(terms.begin(), terms.end(), [r](const Term& a, const Term& b) {
      return mono_compare(r->order, a.m, b.m) > 0;
    });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().m == t.m) {
        terms_.back().c = fp_add(terms_.back().c, t.c, p);
        if (terms_.back().c == 0) terms_.pop_back();
      } else if (t.c != 0) {
        terms_.push_back(std::move(t));
      }
    }
  }

  static Poly zero(const RingPtr& ring) { return Poly(ring); }

  static Poly constant(const RingPtr& ring, fp_t c) {
    c = fp_reduce(c, fp_t(ring->p));
    Poly f(ring);
    if (c != 0) f.terms_.push_back({Monomial(ring->nvars()), c});
    return f;
  }

  static Poly one(const RingPtr& ring) { return constant(ring, 1); }

  static Poly variable(const RingPtr& ring, std::size_t i, exp_t e = 1) {
    if (i >= ring->nvars()) throw structure_error("variable index out of range");
    Monomial m(ring->nvars());
    m.exps[i] = e;
    Poly f(ring);
    if (e == 0)
      return one(ring);
    f.terms_.push_back({m, 1});
    return f;
  }

  static Poly monomial(const RingPtr& ring, Monomial m, fp_t c = 1) {
    c = fp_reduce(c, fp_t(ring->p));
    Poly f(ring);
    if (c != 0) f.terms_.push_back({std::move(m), c});
    return f;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw structure_error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().m; }
  fp_t leading_coeff() const { return leading_term().c; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m)
        return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    const fp_t p = fp_t(a.ring_->p);
    Poly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = mono_compare(a.ring_->order, a.terms_[i].m, b.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        fp_t s = fp_add(a.terms_[i].c, b.terms_[j].c, p);
        if (s != 0) r.terms_.push_back({a.terms_[i].m, s});
        ++i, ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  Poly operator-() const {
    const fp_t p = fp_t(ring_->p);
    Poly r(*this);
    for (auto& t : r.terms_) t.c = fp_neg(t.c, p);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  /// Scale by a field element.
  Poly scaled(fp_t c) const {
    const fp_t p = fp_t(ring_->p);
    c = fp_reduce(c, p);
    if (c == 0) return Poly(ring_);
    Poly r(*this);
    for (auto& t : r.terms_) t.c = fp_mul(t.c, c, p);
    return r;
  }

  /// Multiply by a single term c*m (c nonzero).
  Poly term_multiplied(const Monomial& m, fp_t c) const {
    const fp_t p = fp_t(ring_->p);
    c = fp_reduce(c, p);
    if (c == 0) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({mono_mul(t.m, m), fp_mul(t.c, c, p)});
    // Multiplying every monomial by a fixed monomial preserves the order.
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    std::vector<Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    const fp_t p = fp_t(a.ring_->p);
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        prods.push_back({mono_mul(ta.m, tb.m), (ta.c * tb.c) % p});
    return Poly(a.ring_, std::move(prods));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(leading_coeff(), fp_t(ring_->p)));
  }

  /// Convert to another structurally identical ring (possibly a different
  /// monomial order): terms are re-sorted.
  Poly with_ring(const RingPtr& r) const {
    if (r->p != ring_->p || r->nvars() != ring_->nvars())
      throw structure_error("incompatible ring conversion");
    std::vector<Term> ts = terms_;
    return Poly(r, std::move(ts));
  }

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f^(p^e), computed term-wise: the Frobenius is additive, so each term
/// c*m maps to c^(p^e) * m^(p^e). Never expands a product.
inline Poly frobenius_power(const Poly& f, std::uint32_t e) {
  const auto& ring = f.ring();
  const fp_t p = fp_t(ring->p);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= ring->p;
    if (q > kMaxExponent) throw budget_error("p^e too large for exponent width");
  }
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms())
    ts.push_back({mono_pow(t.m, std::uint32_t(q)), fp_pow(t.c, q, p)});
  return Poly(ring, std::move(ts));
}

inline bool is_homogeneous(const Poly& f) {
  if (f.is_zero()) return true;
  std::uint32_t d = f.terms().front().m.degree();
  for (const auto& t : f.terms())
    if (t.m.degree() != d) return false;
  return true;
}

inline Poly poly_pow(const Poly& f, std::uint32_t n) {
  Poly r = Poly::one(f.ring());
  Poly base = f;
  while (n) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

inline std::string mono_str(const Ring& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m.exps[i]) continue;
    if (!first) os << "*";
    os << ring.vars[i];
    if (m.exps[i] > 1) os << "^" << m.exps[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

inline std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    if (t.m.is_one()) {
      os << t.c;
    } else {
      if (t.c != 1) os << t.c << "*";
      os << mono_str(*ring_, t.m);
    }
    first = false;
  }
  return os.str();
}

// ---- ring extension / variable mapping helpers ----

/// New ring with `extra` names prepended (used for elimination tricks).
inline RingPtr prepend_vars(const RingPtr& r, const std::vector<std::string>& extra,
                            MonomialOrder order) {
  std::vector<std::string> vars = extra;
  vars.insert(vars.end(), r->vars.begin(), r->vars.end());
  return make_ring(r->p, std::move(vars), order);
}

/// New ring with `extra` names appended; existing indices are unchanged.
inline RingPtr append_vars(const RingPtr& r, const std::vector<std::string>& extra,
                           MonomialOrder order) {
  std::vector<std::string> vars = r->vars;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(r->p, std::move(vars), order);
}

/// Map a polynomial into a ring that contains the source variables as the
/// index range [offset, offset + nvars).
inline Poly embed_poly(const Poly& f, const RingPtr& big, std::size_t offset) {
  const std::size_t n = f.ring()->nvars();
  if (offset + n > big->nvars()) throw structure_error("embedding out of range");
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(big->nvars());
    for (std::size_t i = 0; i < n; ++i) m.exps[offset + i] = t.m.exps[i];
    ts.push_back({std::move(m), t.c});
  }
  return Poly(big, std::move(ts));
}

/// Inverse of embed_poly: keep only the index range [offset, offset+nvars)
/// of `small`. Throws if f involves variables outside the window.
inline Poly restrict_poly(const Poly& f, const RingPtr& small, std::size_t offset) {
  const std::size_t n = small->nvars();
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
      if (t.m.exps[i] == 0) continue;
      if (i < offset || i >= offset + n)
        throw structure_error("polynomial involves eliminated variables");
      m.exps[i - offset] = t.m.exps[i];
    }
    ts.push_back({std::move(m), t.c});
  }
  return Poly(small, std::move(ts));
}

/// Permute variables: position i in the source becomes perm[i] in the image.
inline Poly permute_vars(const Poly& f, const RingPtr& image,
                         const std::vector<std::size_t>& perm) {
  if (perm.size() != f.ring()->nvars() || image->nvars() != perm.size())
    throw structure_error("bad variable permutation");
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(image->nvars());
    for (std::size_t i = 0; i < perm.size(); ++i) m.exps[perm[i]] = t.m.exps[i];
    ts.push_back({std::move(m), t.c});
  }
  return Poly(image, std::move(ts));
}

/// All monomials of total degree exactly d, listed lex-descending.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<exp_t> stack(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t r) -> void {
    if (i + 1 == nvars) {
      stack[i] = exp_t(r);
      out.push_back(Monomial(std::vector<exp_t>(stack.begin(), stack.end())));
      stack[i] = 0;
      return;
    }
    for (std::uint32_t e = r + 1; e-- > 0;) {
      stack[i] = exp_t(e);
      self(self, i + 1, r - e);
    }
    stack[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace charp

#endif  // CHARP_POLY_HPP
