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

#ifndef CHARP_FSINGULAR_HPP
#define CHARP_FSINGULAR_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "charp/divisorial.hpp"

namespace charp {

struct FPurityVerdict {
  bool is_fpure = false;
  enum class Method { fedder, splitting_ideal } method = Method::fedder;
  std::optional<Poly> witness;  // g in (Q^[p] : Q) with g not in m^[p]
};

/// Fedder's criterion at the irrelevant maximal ideal, in the general
/// quotient form: R = S/Q is F-pure iff (Q^[p] : Q) is not contained in
/// m^[p]. Returns a witness generator when F-pure.
inline FPurityVerdict fedder_is_fpure(const RingPresentation& R,
                                      const Budget& budget = default_budget()) {
  Ideal C = ideal_quotient(bracket_power(R.Q, 1), R.Q, budget);
  std::vector<Poly> mbr_gens;
  for (std::size_t i = 0; i < R.S->nvars(); ++i)
    mbr_gens.push_back(Poly::variable(R.S, i, exp_t(R.S->p)));
  Ideal mbr(R.S, std::move(mbr_gens));
  for (const auto& g : C.gb(budget).elems) {
    if (!mbr.contains(g, budget))
      return {true, FPurityVerdict::Method::fedder, g};
  }
  return {false, FPurityVerdict::Method::fedder, std::nullopt};
}

/// Socle of the artinian quotient S/B: dimension and a generator.
struct SocleData {
  unsigned dimension = 0;
  Poly generator;  // meaningful when dimension == 1
};

/// Monomials outside the leading-term ideal of an artinian basis.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& G,
                                                std::size_t cap = 20000) {
  std::vector<Monomial> lts;
  for (const auto& g : G.elems) lts.push_back(g.leading_monomial());
  std::set<std::array<exp_t, kMaxVars>> seen;
  std::vector<Monomial> out;
  std::vector<Monomial> stack{Monomial(G.ring->nvars())};
  seen.insert(stack[0].exps);
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    bool divisible = false;
    for (const auto& lt : lts)
      if (mono_divides(lt, m)) { divisible = true; break; }
    if (divisible) continue;
    out.push_back(m);
    if (out.size() > cap)
      throw budget_error("standard monomial enumeration exceeded cap");
    for (std::size_t i = 0; i < G.ring->nvars(); ++i) {
      Monomial next = m;
      ++next.exps[i];
      if (seen.insert(next.exps).second) stack.push_back(next);
    }
  }
  return out;
}

/// Socle of S/B for an m-primary B: (B : m)/B, with the k-dimension computed
/// by Gaussian elimination of the colon generators' normal forms over the
/// standard monomials.
inline SocleData socle_of(const Ideal& B, const RingPresentation& R,
                          const Budget& budget = default_budget()) {
  const auto& G = B.gb(budget);
  auto dim = quotient_dimension(G);
  if (!dim || *dim != 0)
    throw structure_error("socle computation requires an artinian quotient");
  std::vector<Monomial> std_monos = standard_monomials(G);
  // index
  std::map<std::array<exp_t, kMaxVars>, std::size_t> index;
  for (std::size_t i = 0; i < std_monos.size(); ++i)
    index[std_monos[i].exps] = i;

  Ideal soc = ideal_quotient(B, maximal_ideal(R.S), budget);
  const fp_t p = fp_t(R.S->p);

  std::vector<std::vector<fp_t>> rows;  // echelon rows
  std::vector<std::size_t> pivots;
  SocleData result;
  unsigned rank = 0;
  for (const auto& g : soc.gb(budget).elems) {
    Poly nf = normal_form(g, G);
    if (nf.is_zero()) continue;
    std::vector<fp_t> v(std_monos.size(), 0);
    for (const auto& t : nf.terms()) v[index.at(t.m.exps)] = t.c;
    // reduce against existing rows
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      fp_t c = v[pivots[r]];
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = fp_sub(v[j], fp_mul(c, rows[r][j], p), p);
    }
    std::size_t piv = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) { piv = j; break; }
    if (piv == v.size()) continue;
    fp_t inv = fp_inv(v[piv], p);
    for (auto& c : v) c = fp_mul(c, inv, p);
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    ++rank;
    if (rank == 1) result.generator = g;
  }
  result.dimension = rank;
  return result;
}

/// Shared data for the splitting-ideal formulas: x1 in J, the certified
/// parameter x2 and further parameters, and the socle generator u of
/// S/(Q + J + (x2..xd) [+ f]).
struct SplittingContext {
  DivisorialIdeal J;         // proper, certificate verified
  Poly x1;                   // non-zero-divisor in J
  std::vector<Poly> params;  // x2..xd; x2 is the certificate element when d >= 2
  Poly u;                    // socle generator
  unsigned d_eff = 0;        // number of colon parameters + 1
  std::optional<Poly> f;     // stability setting: data relative to R/(f)
};

inline void verify_certificate(const DivisorialIdeal& J, const RingPresentation& R,
                               const Budget& budget = default_budget()) {
  if (!J.cert) throw structure_error("missing certificate");
  if (!R.is_nzd(J.cert->a, budget))
    throw structure_error("certificate element a is a zero-divisor");
  Ideal base = ideal_sum(Ideal::principal(J.cert->a), R.Q);
  for (const auto& g : J.J.gens())
    if (!base.contains(J.cert->x2 * g, budget))
      throw structure_error("corrupted certificate: x2*J is not inside (a) + Q");
  if (!height_at_least(ideal_sum(J.J, {J.cert->x2}), R.ambient_height() + 2, budget))
    throw structure_error("corrupted certificate: (J, x2) has height < 2 in R");
}

inline SplittingContext make_splitting_context(const RingPresentation& R,
                                               DivisorialIdeal J, std::uint64_t seed,
                                               std::optional<Poly> f = std::nullopt,
                                               const Budget& budget = default_budget()) {
  Rng rng(seed);
  std::vector<Ideal> avoid;
  Ideal base_cut = R.Q;
  if (f) {
    if (!R.is_nzd(*f, budget))
      throw structure_error("designated f is a zero-divisor on R");
    base_cut = ideal_sum(R.Q, {*f});
    avoid.push_back(base_cut);
  }
  unsigned d_eff = f ? R.dim - 1 : R.dim;
  if (d_eff < 1)
    throw structure_error("splitting data needs positive quotient dimension");

  // re-embed an improper canonical ideal (Gorenstein case): omega = R = (a)
  if (J.J.is_unit(budget)) J = principal_divisorial(R, seed, avoid, budget);
  if (J.cert) verify_certificate(J, R, budget);

  Poly x1 = find_nzd_in(R, J.J, avoid, rng, 120, budget);
  Ideal cut1 = ideal_sum(base_cut, {x1});

  std::vector<Poly> params;
  if (d_eff >= 2) {
    bool cert_param_ok = false;
    if (J.cert && !J.cert->x2.is_constant()) {
      Ideal ext = ideal_sum(cut1, {J.cert->x2});
      auto d0 = quotient_dimension(cut1.gb(budget));
      auto d1 = quotient_dimension(ext.gb(budget));
      cert_param_ok = d0 && d1 && *d1 + 1 == *d0;
    }
    if (!cert_param_ok) {
      CertificateOptions opts;
      opts.param_mod = cut1;
      J.cert = find_certificate(J, R, rng.next(), opts, budget);
    }
    params.push_back(J.cert->x2);
    Ideal cut2 = ideal_sum(cut1, {J.cert->x2});
    auto extra = find_parameters(R, cut2, d_eff - 2, rng, 200, budget);
    params.insert(params.end(), extra.begin(), extra.end());
  } else if (!J.cert) {
    J.cert = find_certificate(J, R, rng.next(), {}, budget);
  }

  Ideal B = ideal_sum(J.J, params);
  if (f) B = ideal_sum(B, {*f});
  SocleData soc = socle_of(B, R, budget);
  if (soc.dimension != 1)
    throw structure_error(
        "quotient not Gorenstein artinian - J is not a canonical ideal or "
        "parameters invalid (socle dimension " +
        std::to_string(soc.dimension) + ")");

  SplittingContext ctx;
  ctx.J = std::move(J);
  ctx.x1 = std::move(x1);
  ctx.params = std::move(params);
  ctx.u = soc.generator;
  ctx.d_eff = d_eff;
  ctx.f = std::move(f);
  return ctx;
}

/// Splitting data of Prop.-2.7 type: the parameters, socle generator,
/// stabilization exponent, and the stabilized colon ideal I_e(R).
struct SplittingData {
  std::uint32_t e = 1;
  std::vector<Poly> params;  // x1, x2, ..., xd
  Poly socle_u;
  unsigned t_used = 0;
  Ideal Ie;  // ideal of S containing Q
};

namespace detail {

inline Ideal scale_ideal(const Ideal& I, const Poly& c) {
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(c * g);
  return Ideal(I.ring(), std::move(gens));
}

/// One rung of the parameter-power colon ladder:
/// ((x1^(t-1) J, x2^t, ..., xd^t)^[p^e] + Q) : (x1...xd)^((t-1)p^e) u^(p^e).
inline Ideal splitting_colon_at(const RingPresentation& R, const SplittingContext& ctx,
                                std::uint32_t e, unsigned t, const Budget& budget) {
  Ideal inner = scale_ideal(ctx.J.J, poly_pow(ctx.x1, t - 1));
  std::vector<Poly> powers;
  for (const auto& x : ctx.params) powers.push_back(poly_pow(x, t));
  inner = ideal_sum(inner, powers);
  Ideal lhs = ideal_sum(bracket_power(inner, e), R.Q);

  Poly prod = ctx.x1;
  for (const auto& x : ctx.params) prod = prod * x;
  Poly colon_elem =
      frobenius_power(poly_pow(prod, t - 1), e) * frobenius_power(ctx.u, e);
  return ideal_quotient_elem(lhs, colon_elem, budget);
}

}  // namespace detail

/// I_e(R) by the stabilizing parameter-power colon ladder. The ladder stops
/// at the first t whose colon ideal repeats; t beyond the cap is an error
/// with the partial ladder size in the message.
inline SplittingData splitting_ideal(const RingPresentation& R,
                                     const DivisorialIdeal& J, std::uint32_t e,
                                     std::uint64_t seed, unsigned t_cap = 8,
                                     const Budget& budget = default_budget()) {
  SplittingContext ctx = make_splitting_context(R, J, seed, std::nullopt, budget);
  Ideal prev = detail::splitting_colon_at(R, ctx, e, 1, budget);
  for (unsigned t = 2; t <= t_cap; ++t) {
    Ideal cur = detail::splitting_colon_at(R, ctx, e, t, budget);
    if (ideal_equal(prev, cur, budget)) {
      SplittingData out;
      out.e = e;
      out.params.push_back(ctx.x1);
      out.params.insert(out.params.end(), ctx.params.begin(), ctx.params.end());
      out.socle_u = ctx.u;
      out.t_used = t - 1;
      out.Ie = prev;
      return out;
    }
    prev = cur;
  }
  throw budget_error("splitting ideal ladder did not stabilize by t = " +
                     std::to_string(t_cap));
}

/// The t-free formula (J, x2^2, x3, ..., xd)^[p^e] : (x2 u)^(p^e), valid when
/// J^(p^e) is Cohen-Macaulay (catalog assertion). Requires d >= 2.
inline Ideal splitting_ideal_reduced(const RingPresentation& R,
                                     const DivisorialIdeal& J, std::uint32_t e,
                                     std::uint64_t seed,
                                     const Budget& budget = default_budget()) {
  SplittingContext ctx = make_splitting_context(R, J, seed, std::nullopt, budget);
  if (ctx.d_eff < 2)
    throw structure_error("reduced splitting formula needs dimension >= 2");
  std::vector<Poly> extra;
  extra.push_back(ctx.params[0] * ctx.params[0]);
  for (std::size_t i = 1; i < ctx.params.size(); ++i) extra.push_back(ctx.params[i]);
  Ideal lhs = ideal_sum(bracket_power(ideal_sum(ctx.J.J, extra), e), R.Q);
  Poly colon_elem = frobenius_power(ctx.params[0] * ctx.u, e);
  return ideal_quotient_elem(lhs, colon_elem, budget);
}

/// Pairwise-equality report over the colon-ideal chains.
struct ChainReport {
  struct Item {
    std::string label;
    bool equal;
  };
  std::vector<Item> items;
  bool ok() const {
    for (const auto& it : items)
      if (!it.equal) return false;
    return true;
  }
};

/// Every intermediate identity in the removing-x1 lemma, the certified-x2
/// colon lemma, and the stability proof's chain, reported as exact ideal
/// equalities.
inline ChainReport colon_chain_check(const RingPresentation& R,
                                     const DivisorialIdeal& J, std::uint32_t e,
                                     std::uint64_t seed,
                                     const Budget& budget = default_budget()) {
  SplittingContext ctx = make_splitting_context(R, J, seed, std::nullopt, budget);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  const unsigned d = ctx.d_eff;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= R.S->p;

  ChainReport report;
  auto push = [&](std::string label, const Ideal& A, const Ideal& B) {
    report.items.push_back({std::move(label), ideal_equal(A, B, budget)});
  };

  // removing x1: ((x1^(t-1) J)^[q], y2..yd) : x1^((t-1)q) = (J^[q], y2..yd)
  for (unsigned t : {2u, 3u}) {
    auto y = find_parameters(R, ideal_sum(R.Q, {ctx.x1}), d - 1, rng, 200, budget);
    Ideal lhs = ideal_quotient_elem(
        ideal_sum(ideal_sum(bracket_power(detail::scale_ideal(ctx.J.J,
                                                              poly_pow(ctx.x1, t - 1)),
                                          e),
                            y),
                  R.Q),
        frobenius_power(poly_pow(ctx.x1, t - 1), e), budget);
    Ideal rhs = ideal_sum(ideal_sum(bracket_power(ctx.J.J, e), y), R.Q);
    push("remove-x1 t=" + std::to_string(t), lhs, rhs);
  }

  if (d >= 2) {
    const Poly& x2 = ctx.params[0];
    Ideal Jbr = bracket_power(ctx.J.J, e);
    Ideal Jsym = symbolic_power(ctx.J, R, std::uint32_t(q), budget);
    for (unsigned N : {2u, 3u}) {
      auto y = find_parameters(R, ideal_sum(R.Q, {ctx.x1, x2}), d - 2, rng, 200, budget);
      auto colon_with = [&](const Ideal& head, std::uint32_t x2pow,
                            std::uint32_t cpow) {
        Ideal lhs = ideal_sum(
            ideal_sum(ideal_sum(head, {poly_pow(x2, x2pow)}), y), R.Q);
        return ideal_quotient_elem(lhs, poly_pow(x2, cpow), budget);
      };
      Ideal A1 = colon_with(Jbr, std::uint32_t(N * q), std::uint32_t((N - 1) * q));
      Ideal A2 = colon_with(Jsym, std::uint32_t(N * q), std::uint32_t((N - 1) * q));
      Ideal A3 = colon_with(Jsym, std::uint32_t(2 * q), std::uint32_t(q));
      Ideal A4 = colon_with(Jbr, std::uint32_t(2 * q), std::uint32_t(q));
      std::string base = "certified-x2 N=" + std::to_string(N) + " ";
      push(base + "bracket=symbolic", A1, A2);
      push(base + "power-drop", A2, A3);
      push(base + "symbolic=bracket", A3, A4);
    }
  }

  // stability chain at the stabilized exponent
  {
    Ideal prev = detail::splitting_colon_at(R, ctx, e, 1, budget);
    unsigned t_used = 0;
    for (unsigned t = 2; t <= 8; ++t) {
      Ideal cur = detail::splitting_colon_at(R, ctx, e, t, budget);
      if (ideal_equal(prev, cur, budget)) { t_used = t - 1; break; }
      prev = cur;
    }
    if (t_used == 0)
      throw budget_error("splitting ideal ladder did not stabilize by t = 8");
    unsigned tc = std::max(t_used, 2u);

    Ideal C1 = detail::splitting_colon_at(R, ctx, e, tc, budget);
    if (d >= 2) {
      const Poly& x2 = ctx.params[0];
      // C2 = ((J, x2^t, ..., xd^t)^[q] + Q) : (x2...xd)^((t-1)q) u^q
      std::vector<Poly> tpowers;
      for (const auto& x : ctx.params) tpowers.push_back(poly_pow(x, tc));
      Ideal lhs2 = ideal_sum(bracket_power(ideal_sum(ctx.J.J, tpowers), e), R.Q);
      Poly tail_prod = Poly::one(R.S);
      for (const auto& x : ctx.params) tail_prod = tail_prod * x;
      Poly c2 = frobenius_power(poly_pow(tail_prod, tc - 1), e) *
                frobenius_power(ctx.u, e);
      Ideal C2 = ideal_quotient_elem(lhs2, c2, budget);
      push("chain prop2.7=remove-x1", C1, C2);

      Ideal Jsym = symbolic_power(ctx.J, R, std::uint32_t(q), budget);
      // C3 = (J^(q), x2^(2q), x3^(tq), .., xd^(tq)) : (x3..xd)^((t-1)q) (x2 u)^q
      std::vector<Poly> p3{poly_pow(ctx.params[0], std::uint32_t(2 * q))};
      Poly rest_prod = Poly::one(R.S);
      for (std::size_t i = 1; i < ctx.params.size(); ++i) {
        p3.push_back(poly_pow(ctx.params[i], std::uint32_t(tc * q)));
        rest_prod = rest_prod * ctx.params[i];
      }
      Ideal lhs3 = ideal_sum(ideal_sum(Jsym, p3), R.Q);
      Poly c3 = poly_pow(rest_prod, std::uint32_t((tc - 1) * q)) *
                frobenius_power(ctx.params[0] * ctx.u, e);
      Ideal C3 = ideal_quotient_elem(lhs3, c3, budget);
      push("chain certified-x2", C2, C3);

      // C4 = (J^(q), x2^q, ..., xd^q) : u^q
      std::vector<Poly> p4;
      for (const auto& x : ctx.params) p4.push_back(poly_pow(x, std::uint32_t(q)));
      Ideal C4 = ideal_quotient_elem(ideal_sum(ideal_sum(Jsym, p4), R.Q),
                                     frobenius_power(ctx.u, e), budget);
      push("chain collapse", C3, C4);

      // C5 = ((J, x2^2, x3, ..., xd)^[q] + Q) : (x2 u)^q
      std::vector<Poly> p5{ctx.params[0] * ctx.params[0]};
      for (std::size_t i = 1; i < ctx.params.size(); ++i) p5.push_back(ctx.params[i]);
      Ideal C5 = ideal_quotient_elem(
          ideal_sum(bracket_power(ideal_sum(ctx.J.J, p5), e), R.Q),
          frobenius_power(ctx.params[0] * ctx.u, e), budget);
      push("chain t-free", C4, C5);
    }
  }
  return report;
}

enum class ShortcutResult { equal, not_equal, hypothesis_not_met };

/// Stability data relative to f, reusable across many perturbations.
struct StabilityContext {
  SplittingContext ctx;
  Ideal membership;   // (J, x2^2, x3..xd, f) + Q
  Ideal bracketed;    // (J, x2^2, x3..xd)^[p^e] + Q
  Poly colon_elem;    // (x2 u)^(p^e)
  Ideal base_colon;   // ((J, x2^2, x3..xd)^[p^e], f) + Q : (x2 u)^(p^e)
};

inline StabilityContext make_stability_context(const RingPresentation& R,
                                               const DivisorialIdeal& J,
                                               const Poly& f, std::uint32_t e,
                                               std::uint64_t seed,
                                               const Budget& budget = default_budget()) {
  SplittingContext ctx = make_splitting_context(R, J, seed, f, budget);
  if (ctx.d_eff < 2)
    throw structure_error("shortcut check needs dim R >= 3");
  std::vector<Poly> extra{ctx.params[0] * ctx.params[0]};
  for (std::size_t i = 1; i < ctx.params.size(); ++i) extra.push_back(ctx.params[i]);
  Ideal core = ideal_sum(ctx.J.J, extra);

  StabilityContext st{std::move(ctx), Ideal(), Ideal(), Poly(), Ideal()};
  st.membership = ideal_sum(core, {f});
  st.bracketed = ideal_sum(bracket_power(core, e), R.Q);
  st.colon_elem = frobenius_power(st.ctx.params[0] * st.ctx.u, e);
  st.base_colon = ideal_quotient_elem(ideal_sum(st.bracketed, {f}), st.colon_elem, budget);
  return st;
}

inline ShortcutResult shortcut_check_with(const StabilityContext& st,
                                          const RingPresentation& R, const Poly& f,
                                          const Poly& eps,
                                          const Budget& budget = default_budget()) {
  if (!st.membership.contains(eps, budget)) return ShortcutResult::hypothesis_not_met;
  Ideal lhs = ideal_quotient_elem(ideal_sum(st.bracketed, {f + eps}), st.colon_elem,
                                  budget);
  // the identity is a local-ring statement: compare at the irrelevant ideal
  // (plain GB equality is the fast path inside)
  return ideal_equal_at_irrelevant(lhs, st.base_colon, budget)
             ? ShortcutResult::equal
             : ShortcutResult::not_equal;
}

/// The stability proof's shortcut: when eps lies in (J, x2^2, x3..xd, f) + Q,
/// perturbing f by eps does not move the reduced splitting colon ideal.
inline ShortcutResult epsilon_shortcut_check(const RingPresentation& R,
                                             const DivisorialIdeal& J, const Poly& f,
                                             const Poly& eps, std::uint32_t e,
                                             std::uint64_t seed = 1,
                                             const Budget& budget = default_budget()) {
  StabilityContext st = make_stability_context(R, J, f, e, seed, budget);
  return shortcut_check_with(st, R, f, eps, budget);
}

}  // namespace charp

#endif  // CHARP_FSINGULAR_HPP
