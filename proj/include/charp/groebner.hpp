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

#ifndef CHARP_GROEBNER_HPP
#define CHARP_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>
#include <cstdio>
#include <cstdlib>

#include "charp/poly.hpp"

namespace charp {

/// Resource guard for basis computations. Exceeding a cap raises
/// budget_error("computation budget exceeded ..."), never a silent
/// truncation.
struct Budget {
  std::size_t max_basis = 5000;
  std::uint32_t max_degree = 2000;
};

inline const Budget& default_budget() {
  static const Budget b{};
  return b;
}

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly> elems;  // reduced: monic, auto-reduced, sorted by LT desc

  bool is_unit() const {
    return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero();
  }
  bool is_zero_ideal() const { return elems.empty(); }

  bool operator==(const GroebnerBasis& o) const {
    return same_ring(ring, o.ring) && elems == o.elems;
  }
};

namespace detail {

/// cur[from..] minus c * q * (tail of red), merged into buf (all term lists
/// strictly decreasing). The lead of red is assumed to cancel cur[from - 1].
inline void merge_reduce(const Ring* ring, const std::vector<Term>& cur,
                         std::size_t from, fp_t c, const Monomial& q,
                         const std::vector<Term>& red, fp_t p,
                         std::vector<Term>& buf) {
  buf.clear();
  std::size_t i = from, j = 1;
  while (i < cur.size() && j < red.size()) {
    Monomial mj = mono_mul(red[j].m, q);
    int cmp = mono_compare(ring->order, cur[i].m, mj);
    if (cmp > 0) {
      buf.push_back(cur[i++]);
    } else if (cmp < 0) {
      buf.push_back({std::move(mj), fp_neg(fp_mul(c, red[j].c, p), p)});
      ++j;
    } else {
      fp_t s = fp_sub(cur[i].c, fp_mul(c, red[j].c, p), p);
      if (s) buf.push_back({cur[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < cur.size()) buf.push_back(cur[i++]);
  for (; j < red.size(); ++j)
    buf.push_back({mono_mul(red[j].m, q), fp_neg(fp_mul(c, red[j].c, p), p)});
}

}  // namespace detail

/// Remainder of multivariate division of f by the elements of G (full
/// reduction: no term of the result is divisible by any leading term of G).
inline Poly normal_form(const Poly& f, const std::vector<Poly>& G,
                        const RingPtr& ring) {
  require_same_ring(f.ring(), ring);
  const fp_t p = fp_t(ring->p);
  std::vector<Term> cur = f.terms();
  std::vector<Term> rem, buf;
  std::size_t start = 0;
  while (start < cur.size()) {
    const Term& lead = cur[start];
    const Poly* red = nullptr;
    for (const auto& g : G) {
      if (!g.is_zero() && mono_divides(g.leading_monomial(), lead.m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      rem.push_back(lead);
      ++start;
      continue;
    }
    Monomial q = mono_div(lead.m, red->leading_monomial());
    fp_t c = fp_div(lead.c, red->leading_coeff(), p);
    detail::merge_reduce(ring.get(), cur, start + 1, c, q, red->terms(), p, buf);
    cur.swap(buf);
    start = 0;
  }
  // rem was produced in strictly decreasing order
  return Poly(ring, std::move(rem));
}

inline Poly normal_form(const Poly& f, const GroebnerBasis& G) {
  return normal_form(f, G.elems, G.ring);
}

inline bool ideal_member(const Poly& f, const GroebnerBasis& G) {
  return normal_form(f, G).is_zero();
}

inline Poly spoly(const Poly& f, const Poly& g) {
  const fp_t p = fp_t(f.ring()->p);
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.term_multiplied(mono_div(l, f.leading_monomial()),
                             fp_inv(f.leading_coeff(), p));
  Poly b = g.term_multiplied(mono_div(l, g.leading_monomial()),
                             fp_inv(g.leading_coeff(), p));
  return a - b;
}

namespace detail {

inline std::vector<Poly> minimalize(std::vector<Poly> G) {
  // Drop elements whose leading term is divisible by another's.
  std::vector<Poly> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mono_divides(G[j].leading_monomial(), G[i].leading_monomial()))
        continue;
      if (G[j].leading_monomial() != G[i].leading_monomial() || j < i)
        redundant = true;
    }
    if (!redundant) out.push_back(G[i]);
  }
  return out;
}

}  // namespace detail

/// Buchberger's algorithm with normal pair selection (minimal lcm degree
/// first), the coprime-leading-term criterion and the chain criterion.
/// Returns the unique reduced basis for the ring's order.
inline GroebnerBasis buchberger(std::vector<Poly> gens, const RingPtr& ring,
                                const Budget& budget = default_budget()) {
  for (const auto& g : gens) require_same_ring(g.ring(), ring);
  static const bool trace = std::getenv("CHARP_GB_TRACE") != nullptr;
  std::size_t processed = 0;

  std::vector<Poly> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());

  // pending pairs keyed by (lcm degree, i, j) for the normal strategy
  using Key = std::tuple<std::uint32_t, std::size_t, std::size_t>;
  std::set<Key> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_idx;

  auto pair_lcm = [&](std::size_t i, std::size_t j) {
    return mono_lcm(G[i].leading_monomial(), G[j].leading_monomial());
  };

  // Gebauer-Moeller pair update: prune old pairs covered by the new leading
  // term, then install the surviving new pairs after the divisor, equal-lcm
  // and coprime filters.
  auto gm_update = [&](std::size_t n) {
    const Monomial& ltn = G[n].leading_monomial();
    // old-pair filter
    for (auto it = pending.begin(); it != pending.end();) {
      auto [deg, i, j] = *it;
      Monomial lij = pair_lcm(i, j);
      if (mono_divides(ltn, lij) && pair_lcm(i, n) != lij && pair_lcm(j, n) != lij) {
        pending_idx.erase({i, j});
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
    // new pairs (i, n)
    struct Cand {
      Monomial lcm;
      std::size_t i;
      bool coprime;
      bool dead = false;
    };
    std::vector<Cand> cand;
    cand.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      cand.push_back({pair_lcm(i, n), i,
                      mono_coprime(G[i].leading_monomial(), ltn)});
    // divisor filter: drop a candidate when another's lcm properly divides it
    for (auto& a : cand) {
      for (const auto& b : cand) {
        if (&a == &b || b.dead) continue;
        if (b.lcm != a.lcm && mono_divides(b.lcm, a.lcm)) {
          a.dead = true;
          break;
        }
      }
    }
    // equal-lcm groups: a coprime member kills the group, else keep one
    for (std::size_t x = 0; x < cand.size(); ++x) {
      if (cand[x].dead) continue;
      bool coprime_present = cand[x].coprime;
      for (std::size_t y = x + 1; y < cand.size(); ++y) {
        if (cand[y].dead || cand[y].lcm != cand[x].lcm) continue;
        coprime_present = coprime_present || cand[y].coprime;
        cand[y].dead = true;
      }
      if (coprime_present) cand[x].dead = true;
    }
    for (const auto& c : cand) {
      if (c.dead || c.coprime) continue;
      pending.emplace(c.lcm.degree(), c.i, n);
      pending_idx.emplace(c.i, n);
    }
  };
  for (std::size_t n = 0; n < G.size(); ++n) gm_update(n);

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    pending_idx.erase({i, j});
    if (trace && ++processed % 200 == 0)
      std::fprintf(stderr, "[gb] pairs=%zu basis=%zu pending=%zu lcmdeg=%u\n",
                   processed, G.size(), pending.size(), unsigned(deg));

    // chain criterion: some k with LT(k) | lcm(i,j) and both (i,k), (j,k)
    // already handled
    Monomial l = pair_lcm(i, j);
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!mono_divides(G[k].leading_monomial(), l)) continue;
      auto key1 = std::minmax(i, k);
      auto key2 = std::minmax(j, k);
      if (!pending_idx.count({key1.first, key1.second}) &&
          !pending_idx.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Poly r = normal_form(spoly(G[i], G[j]), G, ring);
    if (r.is_zero()) continue;
    if (G.size() + 1 > budget.max_basis)
      throw budget_error("computation budget exceeded: basis size cap");
    if (r.degree() > budget.max_degree)
      throw budget_error("computation budget exceeded: degree cap");
    G.push_back(r.monic());
    gm_update(G.size() - 1);
  }

  // reduce: minimalize, then inter-reduce tails
  G = detail::minimalize(std::move(G));
  std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
    return mono_compare(ring->order, a.leading_monomial(), b.leading_monomial()) > 0;
  });
  std::vector<Poly> R = G;
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(G.size() - 1);
    for (std::size_t j = 0; j < R.size(); ++j)
      if (j != i) others.push_back(R[j]);
    R[i] = normal_form(R[i], others, ring).monic();
  }
  GroebnerBasis gb;
  gb.ring = ring;
  gb.elems = std::move(R);
  return gb;
}

/// Krull dimension of S/<G> computed combinatorially from leading terms:
/// the maximum size of a variable subset U such that no leading term is
/// supported inside U. Returns nullopt for the unit ideal.
inline std::optional<unsigned> quotient_dimension(const GroebnerBasis& G) {
  if (G.is_unit()) return std::nullopt;
  const std::size_t n = G.ring->nvars();
  if (n > 31) throw budget_error("dimension enumeration supports at most 31 variables");
  if (G.is_zero_ideal()) return unsigned(n);
  std::vector<std::uint32_t> supp;
  supp.reserve(G.elems.size());
  for (const auto& g : G.elems) {
    std::uint32_t m = 0;
    const Monomial& lm = g.leading_monomial();
    for (std::size_t i = 0; i < n; ++i)
      if (lm.exps[i]) m |= (1u << i);
    supp.push_back(m);
  }
  unsigned best = 0;
  const std::uint32_t top = 1u << n;
  for (std::uint32_t U = 0; U < top; ++U) {
    unsigned size = unsigned(__builtin_popcount(U));
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t s : supp) {
      if ((s & ~U) == 0) {  // support inside U
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace charp

#endif  // CHARP_GROEBNER_HPP
