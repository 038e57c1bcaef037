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

#ifndef CHARP_IDEAL_HPP
#define CHARP_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "charp/groebner.hpp"
#include "charp/poly.hpp"

namespace charp {

/// Ideal of the ambient polynomial ring: a generator list plus a lazily
/// cached reduced Groebner basis (computed once, shared across copies).
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr ring, std::vector<Poly> gens)
      : ring_(std::move(ring)),
        gens_(std::move(gens)),
        cache_(std::make_shared<Cache>()) {
    for (auto& g : gens_) require_same_ring(g.ring(), ring_);
  }

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring) {
    return Ideal(ring, {Poly::one(ring)});
  }
  static Ideal principal(const Poly& f) { return Ideal(f.ring(), {f}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  const GroebnerBasis& gb(const Budget& budget = default_budget()) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) cache_->gb = buchberger(gens_, ring_, budget);
    return *cache_->gb;
  }

  bool contains(const Poly& f, const Budget& budget = default_budget()) const {
    return normal_form(f, gb(budget)).is_zero();
  }

  bool is_unit(const Budget& budget = default_budget()) const {
    return gb(budget).is_unit();
  }
  bool is_zero_ideal(const Budget& budget = default_budget()) const {
    return gb(budget).is_zero_ideal();
  }

 private:
  struct Cache {
    std::mutex mu;
    std::optional<GroebnerBasis> gb;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

inline bool ideal_equal(const Ideal& a, const Ideal& b,
                        const Budget& budget = default_budget()) {
  require_same_ring(a.ring(), b.ring());
  return a.gb(budget).elems == b.gb(budget).elems;
}

/// Every generator of `inner` lies in `outer`.
inline bool ideal_subset(const Ideal& inner, const Ideal& outer,
                         const Budget& budget = default_budget()) {
  for (const auto& g : inner.gens())
    if (!outer.contains(g, budget)) return false;
  return true;
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_sum(const Ideal& a, const std::vector<Poly>& extra) {
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Poly> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

/// I^n; n = 0 yields the unit ideal by convention.
inline Ideal ideal_power(const Ideal& I, std::uint32_t n) {
  if (n == 0) return Ideal::unit(I.ring());
  Ideal r = I;
  for (std::uint32_t k = 1; k < n; ++k) r = ideal_product(r, I);
  return r;
}

/// Frobenius bracket power I^[p^e], generated by p^e-th powers of the
/// generators; generator-independent over the polynomial ring.
inline Ideal bracket_power(const Ideal& I, std::uint32_t e) {
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(frobenius_power(g, e));
  return Ideal(I.ring(), std::move(gens));
}

/// Exact division f / g; throws if g does not divide f.
inline Poly exact_divide(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw structure_error("division by zero polynomial");
  const RingPtr& ring = f.ring();
  const fp_t p = fp_t(ring->p);
  std::vector<Term> cur = f.terms();
  std::vector<Term> q, buf;
  while (!cur.empty()) {
    const Term& lead = cur.front();
    if (!mono_divides(g.leading_monomial(), lead.m))
      throw structure_error("inexact polynomial division");
    Monomial qm = mono_div(lead.m, g.leading_monomial());
    fp_t qc = fp_div(lead.c, g.leading_coeff(), p);
    q.push_back({qm, qc});
    detail::merge_reduce(ring.get(), cur, 1, qc, qm, g.terms(), p, buf);
    cur.swap(buf);
  }
  return Poly(ring, std::move(q));
}

namespace detail {

inline const std::string kTagVar = "@t";

}  // namespace detail

/// I cap J via the elimination trick: eliminate t from t*I + (1-t)*J.
inline Ideal ideal_intersect(const Ideal& a, const Ideal& b,
                             const Budget& budget = default_budget()) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  RingPtr ext = prepend_vars(ring, {detail::kTagVar}, MonomialOrder::elim_block(1));
  Poly t = Poly::variable(ext, 0);
  Poly one_minus_t = Poly::one(ext) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) gens.push_back(t * embed_poly(f, ext, 1));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * embed_poly(g, ext, 1));
  GroebnerBasis G = buchberger(std::move(gens), ext, budget);
  std::vector<Poly> kept;
  for (const auto& h : G.elems) {
    bool uses_t = false;
    for (const auto& term : h.terms())
      if (term.m.exps[0]) { uses_t = true; break; }
    if (!uses_t) kept.push_back(restrict_poly(h, ring, 1));
  }
  return Ideal(ring, std::move(kept));
}

/// (I : g) for a single element, via (1/g) * (I cap (g)).
inline Ideal ideal_quotient_elem(const Ideal& I, const Poly& g,
                                 const Budget& budget = default_budget()) {
  require_same_ring(I.ring(), g.ring());
  if (g.is_zero()) return Ideal::unit(I.ring());
  Ideal inter = ideal_intersect(I, Ideal::principal(g), budget);
  std::vector<Poly> gens;
  for (const auto& h : inter.gb(budget).elems) gens.push_back(exact_divide(h, g));
  if (gens.empty()) return Ideal::zero(I.ring());
  return Ideal(I.ring(), std::move(gens));
}

/// (I : J) = {f | f*J in I}, intersecting single-generator quotients.
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J,
                            const Budget& budget = default_budget()) {
  require_same_ring(I.ring(), J.ring());
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    if (g.is_zero()) continue;
    Ideal q = ideal_quotient_elem(I, g, budget);
    acc = acc ? ideal_intersect(*acc, q, budget) : q;
  }
  if (!acc) return Ideal::unit(I.ring());  // colon by the zero ideal
  return *acc;
}

/// (I : g^infinity) by iterated quotients, returning the saturation and the
/// stabilization exponent k with (I : g^k) = (I : g^(k+1)).
inline std::pair<Ideal, unsigned> saturation(const Ideal& I, const Poly& g,
                                             const Budget& budget = default_budget(),
                                             unsigned max_steps = 64) {
  if (g.is_zero()) throw structure_error("saturation by zero");
  Ideal cur = I;
  for (unsigned k = 0; k < max_steps; ++k) {
    Ideal next = ideal_quotient_elem(cur, g, budget);
    if (ideal_equal(cur, next, budget)) return {cur, k};
    cur = next;
  }
  throw budget_error("computation budget exceeded: saturation did not stabilize");
}

/// Saturation by the auxiliary-variable method: eliminate w from I + (1 - w*g).
/// Used as an independent cross-check of the iterated-quotient route.
inline Ideal saturation_aux(const Ideal& I, const Poly& g,
                            const Budget& budget = default_budget()) {
  if (g.is_zero()) throw structure_error("saturation by zero");
  const RingPtr& ring = I.ring();
  RingPtr ext = prepend_vars(ring, {"@w"}, MonomialOrder::elim_block(1));
  Poly w = Poly::variable(ext, 0);
  std::vector<Poly> gens;
  for (const auto& f : I.gens()) gens.push_back(embed_poly(f, ext, 1));
  gens.push_back(Poly::one(ext) - w * embed_poly(g, ext, 1));
  GroebnerBasis G = buchberger(std::move(gens), ext, budget);
  std::vector<Poly> kept;
  for (const auto& h : G.elems) {
    bool uses_w = false;
    for (const auto& term : h.terms())
      if (term.m.exps[0]) { uses_w = true; break; }
    if (!uses_w) kept.push_back(restrict_poly(h, ring, 1));
  }
  return Ideal(ring, std::move(kept));
}

/// I cap k[kept variables], via a block elimination order. `keep[i]` marks
/// the variables to retain. The result lives in the original ring.
inline Ideal eliminate(const Ideal& I, const std::vector<bool>& keep,
                       const Budget& budget = default_budget()) {
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->nvars();
  if (keep.size() != n) throw structure_error("keep mask arity mismatch");
  std::size_t drop = 0;
  for (bool k : keep)
    if (!k) ++drop;
  if (drop == 0) {
    // nothing to eliminate
    return I;
  }
  // permutation: dropped vars first, kept vars after, original relative order
  std::vector<std::size_t> perm(n);
  std::vector<std::string> names(n);
  std::size_t di = 0, ki = drop;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t target = keep[i] ? ki++ : di++;
    perm[i] = target;
    names[target] = ring->vars[i];
  }
  RingPtr ext = make_ring(ring->p, names, MonomialOrder::elim_block(drop));
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const auto& f : I.gens()) gens.push_back(permute_vars(f, ext, perm));
  GroebnerBasis G = buchberger(std::move(gens), ext, budget);

  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<Poly> kept_gens;
  for (const auto& h : G.elems) {
    bool uses_dropped = false;
    for (const auto& term : h.terms())
      for (std::size_t i = 0; i < drop && !uses_dropped; ++i)
        if (term.m.exps[i]) uses_dropped = true;
    if (!uses_dropped) kept_gens.push_back(permute_vars(h, ring, inv));
  }
  return Ideal(ring, std::move(kept_gens));
}

/// Height of a proper ideal of the ambient polynomial ring.
inline unsigned height(const Ideal& I, const Budget& budget = default_budget()) {
  auto dim = quotient_dimension(I.gb(budget));
  if (!dim) throw structure_error("height of the unit ideal is undefined");
  return unsigned(I.ring()->nvars()) - *dim;
}

/// The N-th power of the irrelevant maximal ideal (all variables), generated
/// by the degree-N monomials.
inline Ideal maximal_ideal_power(const RingPtr& ring, std::uint32_t N) {
  if (N == 0) return Ideal::unit(ring);
  std::vector<Poly> gens;
  for (auto& m : monomials_of_degree(ring->nvars(), N))
    gens.push_back(Poly::monomial(ring, std::move(m)));
  return Ideal(ring, std::move(gens));
}

inline Ideal maximal_ideal(const RingPtr& ring) {
  return maximal_ideal_power(ring, 1);
}

}  // namespace charp

#endif  // CHARP_IDEAL_HPP
