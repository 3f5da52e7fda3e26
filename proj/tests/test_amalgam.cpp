#include "doctest.h"

#include "core/amalgam_ring.hpp"

using namespace qka;

namespace {

FusionElement single(const FusionRing& ring, i64 k, i64 l, i64 m = 1) {
  FusionElement e(ring.id());
  e.add(amalgam_label(ring, k, l), m);
  return e;
}

}  // namespace

TEST_CASE("fundamental power multiplicities follow the ballot triangle") {
  auto c = fundamental_power_multiplicities(4);
  CHECK(c[0] == std::vector<i64>{1});
  CHECK(c[1] == std::vector<i64>{0, 1});
  CHECK(c[2] == std::vector<i64>{1, 0, 1});
  CHECK(c[3] == std::vector<i64>{0, 2, 0, 1});
  CHECK(c[4] == std::vector<i64>{2, 0, 3, 0, 1});
}

TEST_CASE("the defining relation: v1 x a = a^-1 x v1") {
  FusionRing ring = make_amalgam_ring(2.0);
  CHECK(ring.fuse(amalgam_label(ring, 0, 1), amalgam_label(ring, 1, 0)) ==
        single(ring, -1, 1));
  PairDecomp oracle = amalgam_oracle_fuse(0, 1, 1, 0);
  PairDecomp expect;
  expect[{-1, 1}] = 1;
  CHECK(oracle == expect);
}

TEST_CASE("a-powers cancel") {
  FusionRing ring = make_amalgam_ring(2.0);
  CHECK(ring.fuse(amalgam_label(ring, 1, 0), amalgam_label(ring, -1, 0)) ==
        single(ring, 0, 0));
}

TEST_CASE("mixed fusion example (2,1) x (3,2)") {
  FusionRing ring = make_amalgam_ring(2.0);
  FusionElement f =
      ring.fuse(amalgam_label(ring, 2, 1), amalgam_label(ring, 3, 2));
  FusionElement expect(ring.id());
  expect.add(amalgam_label(ring, -1, 1), 1);
  expect.add(amalgam_label(ring, -1, 3), 1);
  CHECK(f == expect);
  PairDecomp oracle = amalgam_oracle_fuse(2, 1, 3, 2);
  PairDecomp want;
  want[{-1, 1}] = 1;
  want[{-1, 3}] = 1;
  CHECK(oracle == want);
}

TEST_CASE("factor embeddings") {
  FusionRing ring = make_amalgam_ring(2.0);
  CHECK(amalgam_embed(ring, 1, 3) == amalgam_label(ring, 0, 3));
  CHECK(amalgam_embed(ring, 2, 1) == amalgam_label(ring, -1, 1));
  CHECK(amalgam_embed(ring, 2, 3) == amalgam_label(ring, -1, 3));
  CHECK(amalgam_embed(ring, 2, 4) == amalgam_label(ring, 0, 4));
  // both factors agree on the shared even part
  for (i64 l = 0; l <= 6; l += 2) {
    CHECK(amalgam_embed(ring, 1, l) == amalgam_embed(ring, 2, l));
  }
}

TEST_CASE("embedding induction from the oracle matches the closed form") {
  auto embed = embed_factor2_by_induction(6);
  REQUIRE(embed.size() == 7);
  for (i64 l = 0; l <= 6; ++l) {
    CHECK(embed[static_cast<std::size_t>(l)].first == (l % 2 == 0 ? 0 : -1));
    CHECK(embed[static_cast<std::size_t>(l)].second == l);
  }
}

TEST_CASE("conjugation sign rule was not assumed: unit multiplicity certifies it") {
  FusionRing ring = make_amalgam_ring(2.0);
  Label a2v3 = amalgam_label(ring, 2, 3);
  CHECK(ring.conj(a2v3) == amalgam_label(ring, 2, 3));
  Label a2v2 = amalgam_label(ring, 2, 2);
  CHECK(ring.conj(a2v2) == amalgam_label(ring, -2, 2));
  CHECK(ring.fuse(ring.conj(a2v3), a2v3).mult(ring.unit()) == 1);
  CHECK(ring.fuse(ring.conj(a2v2), a2v2).mult(ring.unit()) == 1);
}

TEST_CASE("dimension and multiplicity claim for mixed words") {
  SUBCASE("the cross-factor word (1,1)(2,1) contains a one-dimensional summand") {
    FusionRing ring = make_amalgam_ring(2.0);
    FusionElement f =
        ring.fuse(amalgam_embed(ring, 1, 1), amalgam_embed(ring, 2, 1));
    bool has_dim_one = false;
    for (const auto& [lab, m] : f.terms()) {
      if (lab.l == 0 && m == 1) has_dim_one = true;
    }
    CHECK(has_dim_one);
    CHECK(check_dim_mult_claim({{1, 1}, {2, 1}}, 2.0).equal);
  }
  SUBCASE("single letters embed with equal dimensions") {
    for (i64 k = 1; k <= 4; ++k) {
      CHECK(check_dim_mult_claim({{2, k}}, 2.0).equal);
      CHECK(check_dim_mult_claim({{1, k}}, 2.0).equal);
    }
  }
  SUBCASE("longer mixed words") {
    CHECK(check_dim_mult_claim({{1, 2}, {2, 1}, {1, 1}}, 2.0).equal);
    CHECK(check_dim_mult_claim({{2, 3}, {1, 3}, {2, 2}, {1, 1}}, 2.0).equal);
    CHECK(check_dim_mult_claim({{2, 1}, {2, 1}}, 3.0).equal);
  }
}

TEST_CASE("the full derivation battery passes at the reference box") {
  AmalgamCheckReport rep = run_amalgam_check(2.0, 3, 4, 4, 3);
  CHECK(rep.closed_form_matches_oracle);
  CHECK(rep.relation_ok);
  CHECK(rep.conj_ok);
  CHECK(rep.embed_ok);
  CHECK(rep.box_axioms_ok);
  CHECK(rep.dim_mult_ok);
  CHECK(rep.ok());
  CHECK(rep.oracle_pairs == 49u * 25u);
  CHECK(rep.words_checked == 6u + 36u + 216u + 1296u);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("the derivation battery also passes at non-integral d1") {
  AmalgamCheckReport rep = run_amalgam_check(2.5, 2, 3, 3, 2);
  CHECK(rep.ok());
}

TEST_CASE("amalgam ring passes the generic axiom sweep") {
  FusionRing ring = make_amalgam_ring(2.0);
  CHECK(check_axioms(ring, 4).ok());
}
