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

#ifndef CHARP_CYCLICCOVER_HPP
#define CHARP_CYCLICCOVER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charp/fsingular.hpp"

namespace charp {

/// Generator data of the truncated symbolic Rees algebra: minimal generators
/// of J^(i) modulo Q for i = 1..n-1, and the single generator u of the
/// principal J^(n).
struct CoverGens {
  std::vector<std::vector<Poly>> by_degree;  // index i-1 holds degree-i gens
  Poly u;
};

/// Minimal generators of I modulo Q: the reduced-basis elements outside Q,
/// greedily dropping any that the remaining ones already generate mod Q.
inline std::vector<Poly> minimal_gens_mod_Q(const Ideal& I, const Ideal& Q,
                                            const Budget& budget = default_budget()) {
  std::vector<Poly> gens;
  for (const auto& g : I.gb(budget).elems)
    if (!Q.contains(g, budget)) gens.push_back(g);
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Poly> others = Q.gens();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (Ideal(I.ring(), others).contains(gens[i], budget))
      gens.erase(gens.begin() + long(i));
  }
  return gens;
}

inline CoverGens cover_generators(const RingPresentation& R, const DivisorialIdeal& J,
                                  std::uint32_t n, std::uint64_t seed,
                                  const Budget& budget = default_budget()) {
  if (n < 1) throw structure_error("cover degree must be at least 1");
  DivisorialIdeal Jc = with_certificate(J, R, seed, {}, budget);
  CoverGens out;
  for (std::uint32_t i = 1; i + 1 <= n; ++i)
    out.by_degree.push_back(
        minimal_gens_mod_Q(symbolic_power(Jc, R, i, budget), R.Q, budget));
  Ideal symn = symbolic_power(Jc, R, n, budget);
  auto u = is_principal_mod_Q(symn, R, seed + 1, 24, budget);
  if (!u || u->is_zero())
    throw structure_error("cover construction: J^(n) is not principal mod Q");
  out.u = *u;
  out.by_degree.push_back({*u});
  return out;
}

/// Presentation ideal of the cover in S[y]: eliminate t from the graph ideal
/// Q + (y_ij - g_ij t^i), then add the normalization y_{n,1} = 1. Returns the
/// extended ring, the unsimplified ideal, and each variable's (generator,
/// degree) assignment.
struct RawCover {
  RingPtr ring;  // base variables followed by cover variables
  Ideal ideal;
  struct Entry {
    std::string var;
    Poly gen;  // in the base ring
    std::uint32_t degree;
  };
  std::vector<Entry> degree_map;
  bool degree_spot_check = false;
};

inline RawCover cover_ideal_raw(const RingPresentation& base, const CoverGens& gens,
                                const Budget& budget = default_budget()) {
  const RingPtr& S = base.S;
  const std::uint32_t n = std::uint32_t(gens.by_degree.size());
  std::vector<std::string> yvars;
  std::vector<std::pair<Poly, std::uint32_t>> assignment;
  for (std::uint32_t i = 1; i <= n; ++i) {
    const auto& list = gens.by_degree[i - 1];
    for (std::size_t j = 0; j < list.size(); ++j) {
      std::string name = "y" + std::to_string(i) + "_" + std::to_string(j + 1);
      while (std::find(S->vars.begin(), S->vars.end(), name) != S->vars.end())
        name = "_" + name;
      yvars.push_back(name);
      assignment.emplace_back(list[j], i);
    }
  }

  RingPtr cover_ring = append_vars(S, yvars, S->order);
  std::vector<std::string> all = cover_ring->vars;
  RingPtr elim_ring = prepend_vars(cover_ring, {"@t"}, MonomialOrder::elim_block(1));
  Poly t = Poly::variable(elim_ring, 0);

  std::vector<Poly> graph;
  for (const auto& q : base.Q.gens()) graph.push_back(embed_poly(q, elim_ring, 1));
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    Poly y = Poly::variable(elim_ring, 1 + S->nvars() + k);
    Poly g = embed_poly(assignment[k].first, elim_ring, 1);
    graph.push_back(y - g * poly_pow(t, assignment[k].second));
  }
  GroebnerBasis G = buchberger(graph, elim_ring, budget);

  // spot check: g t^i re-expressions stay t-free for every symbolic
  // generator, so degree-i pieces land in the span of degree-i variables
  bool spot = true;
  for (std::uint32_t i = 1; i <= n && spot; ++i) {
    for (const auto& g : gens.by_degree[i - 1]) {
      Poly expr = embed_poly(g, elim_ring, 1) * poly_pow(t, i);
      Poly nf = normal_form(expr, G);
      for (const auto& term : nf.terms())
        if (term.m.exps[0]) { spot = false; break; }
      if (!spot) break;
    }
  }

  std::vector<Poly> kept;
  for (const auto& h : G.elems) {
    bool uses_t = false;
    for (const auto& term : h.terms())
      if (term.m.exps[0]) { uses_t = true; break; }
    if (!uses_t) kept.push_back(restrict_poly(h, cover_ring, 1));
  }
  // normalization: the degree-n generator's variable is identified with 1
  std::size_t last_y = cover_ring->nvars() - 1;
  kept.push_back(Poly::variable(cover_ring, last_y) - Poly::one(cover_ring));

  RawCover out;
  out.ring = cover_ring;
  out.ideal = Ideal(cover_ring, std::move(kept));
  for (std::size_t k = 0; k < assignment.size(); ++k)
    out.degree_map.push_back({yvars[k], assignment[k].first, assignment[k].second});
  out.degree_spot_check = spot;
  return out;
}

/// Substitute a cover variable by h (free of that variable) and drop it from
/// the ring.
inline Poly substitute_variable(const Poly& f, std::size_t k, const Poly& h) {
  const RingPtr& ring = f.ring();
  Poly acc = Poly::zero(ring);
  for (const auto& t : f.terms()) {
    exp_t e = t.m.exps[k];
    Monomial rest = t.m;
    rest.exps[k] = 0;
    Poly piece = Poly::monomial(ring, rest, t.c);
    if (e) piece = piece * poly_pow(h, e);
    acc = acc + piece;
  }
  return acc;
}

/// Cyclic cover presentation R_D = (truncated symbolic Rees algebra)/(u t^n - 1).
struct CoverPresentation {
  RingPresentation base;
  DivisorialIdeal divisor;
  std::uint32_t n = 1;
  Poly u;
  RingPresentation cover;
  std::vector<RawCover::Entry> degree_map;  // surviving cover variables
  std::size_t base_nvars = 0;
  bool degree_spot_check = false;
};

/// Build the cover and simplify its presentation by substituting out cover
/// variables that carry a linear relation (the normalization variable always
/// goes; base variables are never touched).
inline CoverPresentation build_cover(const RingPresentation& R,
                                     const DivisorialIdeal& J, std::uint32_t n,
                                     std::uint64_t seed = 1,
                                     const Budget& budget = default_budget()) {
  CoverGens gens = cover_generators(R, J, n, seed, budget);
  RawCover raw = cover_ideal_raw(R, gens, budget);

  RingPtr ring = raw.ring;
  std::vector<Poly> work = raw.ideal.gens();
  std::vector<RawCover::Entry> degmap = raw.degree_map;
  const std::size_t base_nvars = R.S->nvars();

  bool changed = true;
  while (changed) {
    changed = false;
    GroebnerBasis G = buchberger(work, ring, budget);
    for (const auto& g : G.elems) {
      // look for c*y_k + h with y_k a cover variable absent from h
      for (std::size_t k = base_nvars; k < ring->nvars() && !changed; ++k) {
        bool linear = false;
        fp_t coeff = 0;
        for (const auto& term : g.terms()) {
          if (term.m.exps[k] == 0) continue;
          if (term.m.exps[k] == 1 && term.m.degree() == 1) {
            linear = true;
            coeff = term.c;
          } else {
            linear = false;
            coeff = 0;
            break;
          }
        }
        if (!linear || coeff == 0) continue;
        Poly yk = Poly::variable(ring, k);
        Poly h = (g - yk.scaled(coeff)).scaled(fp_neg(fp_inv(coeff, fp_t(ring->p)), fp_t(ring->p)));
        // h must not involve y_k
        bool self = false;
        for (const auto& term : h.terms())
          if (term.m.exps[k]) { self = true; break; }
        if (self) continue;
        // substitute and drop the variable
        std::vector<std::string> names = ring->vars;
        names.erase(names.begin() + long(k));
        RingPtr smaller = make_ring(ring->p, names, ring->order);
        auto drop_coord = [&](const Poly& q) {
          std::vector<Term> ts;
          for (const auto& term : q.terms()) {
            Monomial m(smaller->nvars());
            for (std::size_t i = 0, j = 0; i < ring->nvars(); ++i) {
              if (i == k) continue;
              m.exps[j++] = term.m.exps[i];
            }
            ts.push_back({std::move(m), term.c});
          }
          return Poly(smaller, std::move(ts));
        };
        std::vector<Poly> next;
        for (const auto& w : work) {
          Poly sub = substitute_variable(w, k, h);
          if (sub.is_zero()) continue;
          Poly dropped = drop_coord(sub);
          if (!dropped.is_zero()) next.push_back(dropped);
        }
        for (std::size_t dmi = degmap.size(); dmi-- > 0;) {
          std::size_t var_index = base_nvars + dmi;
          if (var_index == k) degmap.erase(degmap.begin() + long(dmi));
        }
        ring = smaller;
        work = std::move(next);
        changed = true;
      }
      if (changed) break;
    }
  }

  CoverPresentation out{R,
                        with_certificate(J, R, seed, {}, budget),
                        n,
                        gens.u,
                        RingPresentation(ring, Ideal(ring, work)),
                        std::move(degmap),
                        base_nvars,
                        raw.degree_spot_check};
  return out;
}

/// Eliminating the cover variables from the cover ideal must recover Q:
/// the base embeds.
inline bool cover_base_embedding_check(const CoverPresentation& C,
                                       const Budget& budget = default_budget()) {
  const RingPtr& ring = C.cover.S;
  std::vector<bool> keep(ring->nvars(), false);
  for (std::size_t i = 0; i < C.base_nvars; ++i) keep[i] = true;
  Ideal elim = eliminate(C.cover.Q, keep, budget);
  std::vector<Poly> qgens;
  for (const auto& q : C.base.Q.gens()) qgens.push_back(embed_poly(q, ring, 0));
  return ideal_equal(elim, Ideal(ring, std::move(qgens)), budget);
}

struct CoverIndexResult {
  enum class Status { match, mismatch, not_found } status;
  std::optional<std::uint32_t> index;
};

/// Q-Gorenstein index of the cover presentation compared against the
/// expected value (composite index m*n with D = m*K drops to m).
inline CoverIndexResult cover_index_check(const CoverPresentation& C,
                                          std::uint32_t m_expected,
                                          std::uint32_t n_max, std::uint64_t seed = 1,
                                          const Budget& budget = default_budget()) {
  auto Jc = canonical_ideal(C.cover, seed, 60, budget);
  auto idx = qgor_index(with_certificate(Jc, C.cover, seed + 1, {}, budget), C.cover,
                        n_max, seed + 2, budget);
  if (!idx) return {CoverIndexResult::Status::not_found, std::nullopt};
  return {*idx == m_expected ? CoverIndexResult::Status::match
                             : CoverIndexResult::Status::mismatch,
          idx};
}

struct TransferResult {
  bool base_fpure = false;
  bool cover_fpure = false;
  bool consistent() const { return base_fpure == cover_fpure; }
};

/// F-purity transfers between the base and its cyclic cover.
inline TransferResult fpure_transfer_check(const CoverPresentation& C,
                                           const Budget& budget = default_budget()) {
  TransferResult r;
  r.base_fpure = fedder_is_fpure(C.base, budget).is_fpure;
  r.cover_fpure = fedder_is_fpure(C.cover, budget).is_fpure;
  return r;
}

/// Base change of the cover along f: building the cover of R/(f) from the
/// same generator choices must agree with the cover of R reduced mod f
/// (generator matching is by construction, not isomorphism search).
inline bool cover_base_change_check(const RingPresentation& R, const DivisorialIdeal& J,
                                    std::uint32_t n, const Poly& f,
                                    std::uint64_t seed = 1,
                                    const Budget& budget = default_budget()) {
  CoverGens gens = cover_generators(R, J, n, seed, budget);
  RawCover up = cover_ideal_raw(R, gens, budget);
  RawCover down = cover_ideal_raw(R.modulo(f), gens, budget);
  Ideal up_mod_f = ideal_sum(up.ideal, {embed_poly(f, up.ring, 0)});
  return ideal_equal(up_mod_f, down.ideal, budget);
}

}  // namespace charp

#endif  // CHARP_CYCLICCOVER_HPP
