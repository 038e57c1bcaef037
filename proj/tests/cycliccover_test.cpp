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

#include "charp/cycliccover.hpp"

#include <gtest/gtest.h>

#include "charp/parse.hpp"

using namespace charp;

namespace {

Ideal mk(const RingPtr& R, std::initializer_list<const char*> ss) {
  std::vector<Poly> gens;
  for (const char* s : ss) gens.push_back(parse_poly(R, s));
  return Ideal(R, std::move(gens));
}

RingPresentation veronese3(std::uint32_t p) {
  auto S = make_ring(p, {"a", "b", "c", "d"});
  return RingPresentation(S, mk(S, {"a*c - b^2", "a*d - b*c", "b*d - c^2"}));
}

RingPresentation veronese3_line(std::uint32_t p) {
  auto S = make_ring(p, {"a", "b", "c", "d", "s"});
  return RingPresentation(S, mk(S, {"a*c - b^2", "a*d - b*c", "b*d - c^2"}));
}

}  // namespace

TEST(BuildCover, PrincipalDegreeTwo) {
  // J = (x) in F_3[x,y], n = 2, u = x^2: the normalization identifies u t^2
  // with 1, so the surviving relation is y1_1^2 - 1 (a split double cover of
  // the trivial divisor class).
  auto S = make_ring(3, {"x", "y"});
  auto R = RingPresentation::polynomial_ring(S);
  Poly x = Poly::variable(S, 0);
  DivisorialIdeal J{Ideal::principal(x), Certificate{x, Poly::one(S)}};
  CoverPresentation C = build_cover(R, J, 2, 5);
  EXPECT_TRUE(C.degree_spot_check);
  EXPECT_EQ(C.u, parse_poly(S, "x^2"));
  // after simplification one cover variable survives, with the y^2 - 1 shape
  ASSERT_EQ(C.cover.S->nvars(), 3u);
  const auto& gb = C.cover.Q.gb().elems;
  ASSERT_EQ(gb.size(), 1u);
  Poly y = Poly::variable(C.cover.S, 2);
  EXPECT_EQ(gb[0], y * y - Poly::one(C.cover.S));
  EXPECT_TRUE(cover_base_embedding_check(C));
}

TEST(BuildCover, IdentityCover) {
  auto S = make_ring(3, {"x", "y"});
  auto R = RingPresentation::polynomial_ring(S);
  Poly x = Poly::variable(S, 0);
  DivisorialIdeal J{Ideal::principal(x), Certificate{x, Poly::one(S)}};
  CoverPresentation C = build_cover(R, J, 1, 5);
  // the single relation y = u is substituted away: the base returns
  EXPECT_EQ(C.cover.S->nvars(), 2u);
  EXPECT_TRUE(C.cover.Q.is_zero_ideal());
  EXPECT_TRUE(cover_base_embedding_check(C));
}

TEST(BuildCover, NonPrincipalSymbolicPowerRejected) {
  auto R = veronese3(2);
  auto J = canonical_ideal(R, 7);
  // J^(2) is not principal (class of order 3): n = 2 must fail loudly
  EXPECT_THROW(build_cover(R, J, 2, 5), structure_error);
}

TEST(VeroneseCover, GorensteinIndexOneAndTransfer) {
  auto R = veronese3(2);
  auto J = canonical_ideal(R, 7);
  CoverPresentation C = build_cover(R, J, 3, 11);
  EXPECT_TRUE(C.degree_spot_check);
  EXPECT_TRUE(cover_base_embedding_check(C));

  // Lemma: index m*n with D = m*K gives cover index m; here 3 = 1*3, so the
  // degree-3 cover of the canonical class is Gorenstein.
  CoverIndexResult idx = cover_index_check(C, 1, 3, 13);
  EXPECT_EQ(idx.status, CoverIndexResult::Status::match);
  ASSERT_TRUE(idx.index.has_value());
  EXPECT_EQ(*idx.index, 1u);

  TransferResult tr = fpure_transfer_check(C);
  EXPECT_TRUE(tr.base_fpure);   // Veronese summand of the polynomial ring
  EXPECT_TRUE(tr.cover_fpure);
  EXPECT_TRUE(tr.consistent());
}

TEST(Transfer, NonFPureBaseWithSplitCover) {
  // cusp at p = 5 is not F-pure; a degree-2 cover of a principal divisor is
  // split, so the cover is not F-pure either
  auto S = make_ring(5, {"x", "y"});
  RingPresentation R(S, mk(S, {"x^2 - y^3"}));
  Poly g = parse_poly(S, "y");
  DivisorialIdeal J{ideal_sum(Ideal::principal(g), R.Q), Certificate{g, Poly::one(S)}};
  CoverPresentation C = build_cover(R, J, 2, 5);
  TransferResult tr = fpure_transfer_check(C);
  EXPECT_FALSE(tr.base_fpure);
  EXPECT_FALSE(tr.cover_fpure);
  EXPECT_TRUE(tr.consistent());
}

TEST(CoverBaseChange, VeroneseLine) {
  // S/fS is the cyclic cover of R/(f): built from the same generator
  // choices, the cover of R/(f) equals the cover of R reduced mod f.
  auto R = veronese3_line(2);
  Poly f = parse_poly(R.S, "s + b");
  auto J = with_certificate(canonical_ideal_avoiding(R, f, 3), R, 11);
  EXPECT_TRUE(cover_base_change_check(R, J, 3, f, 17));
}

TEST(CoverBaseChange, PrincipalSplitCase) {
  auto S = make_ring(3, {"x", "y", "z"});
  RingPresentation R(S, mk(S, {"x*y"}));
  Poly g = parse_poly(S, "z");
  DivisorialIdeal J{ideal_sum(Ideal::principal(g), R.Q), Certificate{g, Poly::one(S)}};
  Poly f = parse_poly(S, "x + y");
  EXPECT_TRUE(cover_base_change_check(R, J, 2, f, 5));
}
