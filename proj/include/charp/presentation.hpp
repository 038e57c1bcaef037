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

#ifndef CHARP_PRESENTATION_HPP
#define CHARP_PRESENTATION_HPP

#include <random>
#include <utility>
#include <vector>

#include "charp/ideal.hpp"

namespace charp {

/// Quotient presentation R = S/Q of a ring by a proper ideal of the ambient
/// polynomial ring. Every "ideal of R" in this library is represented by an
/// ideal of S containing Q.
struct RingPresentation {
  RingPtr S;
  Ideal Q;
  unsigned dim = 0;  // Krull dimension of R; ambient equidimensionality of Q
                     // is a catalog-level assertion

  RingPresentation(RingPtr ambient, Ideal defining)
      : S(std::move(ambient)), Q(std::move(defining)) {
    require_same_ring(S, Q.ring());
    auto d = quotient_dimension(Q.gb());
    if (!d) throw structure_error("defining ideal must be proper");
    dim = *d;
  }

  static RingPresentation polynomial_ring(const RingPtr& S) {
    return RingPresentation(S, Ideal::zero(S));
  }

  unsigned ambient_height() const { return unsigned(S->nvars()) - dim; }

  /// f is a non-zero-divisor on R, i.e. (Q : f) = Q.
  bool is_nzd(const Poly& f, const Budget& budget = default_budget()) const {
    if (f.is_zero()) return false;
    if (Q.contains(f, budget)) return false;
    return ideal_equal(ideal_quotient_elem(Q, f, budget), Q, budget);
  }

  /// Presentation of R/(f) over the same ambient ring.
  RingPresentation modulo(const Poly& f) const {
    return RingPresentation(S, ideal_sum(Q, {f}));
  }
};

/// Seeded deterministic randomness for parameter and certificate searches.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t next() { return g_(); }
  fp_t coeff(std::uint32_t p) { return fp_t(g_() % p); }
  fp_t nonzero_coeff(std::uint32_t p) { return fp_t(1 + g_() % (p - 1)); }

 private:
  std::mt19937_64 g_;
};

/// Random F_p-combination of the given polynomials; coefficients of degree
/// `coeff_deg` (0 = scalars, 1 = scalars+linear forms, ...) to escape small
/// fields.
inline Poly random_combination(const std::vector<Poly>& gens, const RingPtr& ring,
                               Rng& rng, std::uint32_t coeff_deg = 0) {
  Poly acc = Poly::zero(ring);
  for (const auto& g : gens) {
    Poly c = Poly::constant(ring, rng.coeff(ring->p));
    for (std::uint32_t d = 1; d <= coeff_deg; ++d)
      for (auto& m : monomials_of_degree(ring->nvars(), d))
        c = c + Poly::monomial(ring, std::move(m), rng.coeff(ring->p));
    acc = acc + c * g;
  }
  return acc;
}

/// Random homogeneous form of the given degree.
inline Poly random_form(const RingPtr& ring, std::uint32_t degree, Rng& rng) {
  Poly acc = Poly::zero(ring);
  for (auto& m : monomials_of_degree(ring->nvars(), degree))
    acc = acc + Poly::monomial(ring, std::move(m), rng.coeff(ring->p));
  return acc;
}

/// Random homogeneous element of the span of `gens` in degree `delta`:
/// each homogeneous generator of degree <= delta is multiplied by a random
/// form of complementary degree. Zero when no generator fits.
inline Poly random_homogeneous_element(const std::vector<Poly>& gens,
                                       const RingPtr& ring, std::uint32_t delta,
                                       Rng& rng) {
  Poly acc = Poly::zero(ring);
  for (const auto& g : gens) {
    if (g.is_zero() || !is_homogeneous(g)) continue;
    std::uint32_t dg = g.degree();
    if (dg > delta) continue;
    if (dg == delta)
      acc = acc + g.scaled(rng.coeff(ring->p));
    else
      acc = acc + random_form(ring, delta - dg, rng) * g;
  }
  return acc;
}

/// Degree range [min gen degree, max gen degree + slack] for candidate
/// generation over homogeneous generators.
inline std::pair<std::uint32_t, std::uint32_t> homogeneous_degree_range(
    const std::vector<Poly>& gens, std::uint32_t slack = 1) {
  std::uint32_t lo = ~0u, hi = 0;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    lo = std::min(lo, g.degree());
    hi = std::max(hi, g.degree());
  }
  if (lo == ~0u) return {0, 0};
  return {lo, hi + slack};
}

/// h lies in the localization of I at the irrelevant maximal ideal, i.e.
/// some s outside m has s*h in I: (I : h) is not contained in m.
inline bool locally_contains(const Ideal& I, const Poly& h,
                             const Budget& budget = default_budget()) {
  if (I.contains(h, budget)) return true;
  Ideal colon = ideal_quotient_elem(I, h, budget);
  return ideal_sum(colon, maximal_ideal(I.ring())).is_unit(budget);
}

/// Equality of ideals after localization at the irrelevant maximal ideal.
/// Ideals of inhomogeneous data (perturbed hypersurface equations) may
/// differ away from m while presenting the same local ring; this is the
/// comparison every local statement is tested with.
inline bool ideal_equal_at_irrelevant(const Ideal& A, const Ideal& B,
                                      const Budget& budget = default_budget()) {
  if (ideal_equal(A, B, budget)) return true;
  for (const auto& g : A.gb(budget).elems)
    if (!locally_contains(B, g, budget)) return false;
  for (const auto& g : B.gb(budget).elems)
    if (!locally_contains(A, g, budget)) return false;
  return true;
}

/// True when height(I) >= h, counting the unit ideal as infinite height.
inline bool height_at_least(const Ideal& I, unsigned h,
                            const Budget& budget = default_budget()) {
  auto d = quotient_dimension(I.gb(budget));
  if (!d) return true;
  return unsigned(I.ring()->nvars()) - *d >= h;
}

/// Extend `fixed` by `count` parameter elements: each new element raises the
/// ambient height by one. Candidates are random homogeneous forms of degree
/// 1, then higher degrees when the field is too small.
inline std::vector<Poly> find_parameters(const RingPresentation& R,
                                         const Ideal& fixed, unsigned count,
                                         Rng& rng, unsigned trials = 200,
                                         const Budget& budget = default_budget()) {
  std::vector<Poly> out;
  Ideal cur = fixed;
  auto cur_height = [&]() {
    auto d = quotient_dimension(cur.gb(budget));
    if (!d) throw structure_error("parameter base ideal is the unit ideal");
    return unsigned(R.S->nvars()) - *d;
  };
  unsigned h = cur_height();
  for (unsigned k = 0; k < count; ++k) {
    bool found = false;
    for (unsigned t = 0; t < trials && !found; ++t) {
      std::uint32_t deg = 1 + t / 40;  // raise degree on sustained failure
      Poly cand = random_form(R.S, deg, rng);
      if (cand.is_zero()) continue;
      Ideal trial = ideal_sum(cur, {cand});
      auto d = quotient_dimension(trial.gb(budget));
      if (d && unsigned(R.S->nvars()) - *d == h + 1) {
        out.push_back(cand);
        cur = trial;
        ++h;
        found = true;
      }
    }
    if (!found)
      throw budget_error("no parameter element found after trials");
  }
  return out;
}

/// True when every listed polynomial is homogeneous: the searches below then
/// restrict their candidates to homogeneous elements (graded-local
/// convention: the irrelevant ideal is the distinguished maximal ideal).
inline bool graded_inputs(std::initializer_list<const std::vector<Poly>*> gen_lists) {
  for (const auto* gens : gen_lists)
    for (const auto& g : *gens)
      if (!is_homogeneous(g)) return false;
  return true;
}

/// A non-zero-divisor on R lying in the ideal `inside` (candidates: its
/// generators, then random combinations), optionally also a non-zero-divisor
/// modulo each ideal in `avoid`.
inline Poly find_nzd_in(const RingPresentation& R, const Ideal& inside,
                        const std::vector<Ideal>& avoid, Rng& rng,
                        unsigned trials = 120,
                        const Budget& budget = default_budget()) {
  const bool graded = graded_inputs({&R.Q.gens(), &inside.gens()});
  auto good = [&](const Poly& c) {
    if (c.is_zero() || R.Q.contains(c, budget)) return false;
    if (graded && !is_homogeneous(c)) return false;
    if (!R.is_nzd(c, budget)) return false;
    for (const auto& A : avoid) {
      if (A.contains(c, budget)) return false;
      if (!ideal_equal(ideal_quotient_elem(A, c, budget), A, budget)) return false;
    }
    return true;
  };
  const auto& gb_elems = inside.gb(budget).elems;
  for (const auto& g : gb_elems)
    if (good(g)) return g;
  if (graded) {
    auto [lo, hi] = homogeneous_degree_range(gb_elems, 2);
    for (unsigned t = 0; t < trials; ++t) {
      std::uint32_t delta = lo + t % (hi - lo + 1);
      Poly c = random_homogeneous_element(gb_elems, R.S, delta, rng);
      if (good(c)) return c;
    }
  } else {
    std::vector<Poly> pool = inside.gens();
    for (unsigned t = 0; t < trials; ++t) {
      Poly c = random_combination(pool, R.S, rng, t / 30);
      if (good(c)) return c;
    }
  }
  throw budget_error("no non-zero-divisor found in the given ideal");
}

}  // namespace charp

#endif  // CHARP_PRESENTATION_HPP
