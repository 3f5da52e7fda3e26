#include "doctest.h"

#include "core/fusion.hpp"

using namespace qka;

namespace {

FusionElement single(const FusionRing& ring, const Label& lab, i64 m = 1) {
  FusionElement e(ring.id());
  e.add(lab, m);
  return e;
}

}  // namespace

TEST_CASE("group dual of Z/2: order-2 element squares to the unit") {
  FusionRing ring = make_group_dual(GroupTable::cyclic(2), "z2");
  Label e = ring.unit();
  Label g{ring.id(), 1, 0};
  CHECK(ring.fuse(g, g) == single(ring, e));
  CHECK(ring.conj(g) == g);
  CHECK(ring.dim(g) == 1.0);
  CHECK(ring.degree(e) == 0);
  CHECK(ring.degree(g) == 1);
}

TEST_CASE("group dual conjugation is the group inverse") {
  FusionRing ring = make_group_dual(GroupTable::cyclic(3), "z3");
  Label g1{ring.id(), 1, 0};
  Label g2{ring.id(), 2, 0};
  CHECK(ring.conj(g1) == g2);
  CHECK(ring.fuse(g1, g2) == single(ring, ring.unit()));
}

TEST_CASE("ao(2) fundamental fusion matches the SU(2) pattern") {
  FusionRing ring = make_ao(2.0, "A");
  Label v0 = ring.unit();
  Label v1{ring.id(), 1, 0};
  Label v2{ring.id(), 2, 0};
  Label v3{ring.id(), 3, 0};
  Label v5{ring.id(), 5, 0};

  FusionElement expect(ring.id());
  expect.add(v0, 1);
  expect.add(v2, 1);
  CHECK(ring.fuse(v1, v1) == expect);

  FusionElement expect23(ring.id());
  expect23.add(v1, 1);
  expect23.add(v3, 1);
  expect23.add(v5, 1);
  CHECK(ring.fuse(v2, v3) == expect23);
  // dimension cross-check 3*4 = 2+4+6
  CHECK(ring.dim(ring.fuse(v2, v3)) == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("ao(2) dimensions follow k+1") {
  FusionRing ring = make_ao(2.0);
  for (i64 k = 0; k <= 12; ++k) {
    CHECK(ring.dim(Label{ring.id(), k, 0}) == doctest::Approx(double(k + 1)));
  }
}

TEST_CASE("ao(3) fusion is dimension-additive with the d1=3 recursion") {
  FusionRing ring = make_ao(3.0);
  Label v1{ring.id(), 1, 0};
  Label v2{ring.id(), 2, 0};
  FusionElement f = ring.fuse(v1, v2);
  FusionElement expect(ring.id());
  expect.add(v1, 1);
  expect.add(Label{ring.id(), 3, 0}, 1);
  CHECK(f == expect);
  CHECK(ring.dim(Label{ring.id(), 2, 0}) == doctest::Approx(8.0));
  CHECK(ring.dim(Label{ring.id(), 3, 0}) == doctest::Approx(21.0));
  CHECK(ring.dim(f) == doctest::Approx(24.0));
}

TEST_CASE("cyclic ring fuses by index addition") {
  FusionRing ring = make_cyclic("z");
  Label a2{ring.id(), 2, 0};
  Label am5{ring.id(), -5, 0};
  CHECK(ring.fuse(a2, am5) == single(ring, Label{ring.id(), -3, 0}));
  CHECK(ring.conj(Label{ring.id(), 4, 0}) == Label{ring.id(), -4, 0});
  CHECK(ring.fuse(ring.unit(), am5) == single(ring, am5));
}

TEST_CASE("bilinear extension agrees with fuse on singletons") {
  FusionRing ring = make_ao(2.0);
  Label v1{ring.id(), 1, 0};
  Label v2{ring.id(), 2, 0};

  SUBCASE("zero element annihilates") {
    FusionElement zero(ring.id());
    CHECK(ring.fuse(zero, single(ring, v1)).empty());
    CHECK(ring.fuse(single(ring, v1), zero).empty());
  }
  SUBCASE("scaling") {
    FusionElement x = single(ring, v1, 2);
    FusionElement got = ring.fuse(x, single(ring, v1));
    FusionElement expect(ring.id());
    expect.add(ring.unit(), 2);
    expect.add(v2, 2);
    CHECK(got == expect);
  }
  SUBCASE("additivity") {
    FusionElement x(ring.id());
    x.add(v1, 1);
    x.add(v2, 1);
    FusionElement got = ring.fuse(x, single(ring, v1));
    FusionElement expect = ring.fuse(v1, v1);
    expect.add(ring.fuse(v2, v1));
    CHECK(got == expect);
  }
}

TEST_CASE("labels from different rings are rejected") {
  FusionRing a = make_ao(2.0);
  FusionRing b = make_ao(2.0);
  Label foreign{b.id(), 1, 0};
  CHECK_THROWS_AS((void)a.fuse(a.unit(), foreign), Error);
  CHECK_THROWS_AS((void)a.conj(foreign), Error);
  CHECK_THROWS_AS((void)a.fuse(FusionElement(a.id()),
                               [&] {
                                 FusionElement e(b.id());
                                 e.add(foreign, 1);
                                 return e;
                               }()),
                  Error);
}

TEST_CASE("invalid payloads are rejected") {
  FusionRing ring = make_ao(2.0);
  CHECK_THROWS_AS((void)ring.dim(Label{ring.id(), -1, 0}), Error);
  CHECK_THROWS_AS(make_ao(1.0), Error);
  CHECK_THROWS_AS(make_ao(1.999), Error);
}

TEST_CASE("label enumeration is ordered by degree and deterministic") {
  FusionRing z = make_cyclic();
  auto labs = z.labels_up_to(2);
  REQUIRE(labs.size() == 5);
  CHECK(labs[0].k == 0);
  CHECK(labs[1].k == -1);
  CHECK(labs[2].k == 1);
  CHECK(labs[3].k == -2);
  CHECK(labs[4].k == 2);

  FusionRing z6 = make_cyclic_mod(6);
  CHECK(z6.labels_up_to(z6.max_degree()).size() == 6);
  CHECK(z6.max_degree() == 3);
}

TEST_CASE("axiom sweeps are clean for the builtin families") {
  CHECK(check_axioms(make_group_dual(GroupTable::cyclic(3), "z3"), 1).ok());
  CHECK(check_axioms(make_group_dual(GroupTable::symmetric3(), "s3"), 1).ok());
  CHECK(check_axioms(make_cyclic(), 4).ok());
  CHECK(check_axioms(make_ao(2.0), 6).ok());
  CHECK(check_axioms(make_ao(3.0), 5).ok());
}

TEST_CASE("conjugation is an involution on every enumerated label") {
  for (const FusionRing& ring :
       {make_ao(2.0), make_ao(3.0), make_cyclic(), make_cyclic_mod(5),
        make_group_dual(GroupTable::symmetric3())}) {
    int bound = ring.max_degree() >= 0 ? ring.max_degree() : 5;
    for (const Label& lab : ring.labels_up_to(bound)) {
      CHECK(ring.conj(ring.conj(lab)) == lab);
      CHECK(ring.fuse(ring.conj(lab), lab).mult(ring.unit()) == 1);
    }
  }
}

TEST_CASE("a corrupted multiplication table is rejected with a witness") {
  // z3 with a*a corrupted from b to a: associativity must fail
  std::vector<std::string> names = {"e", "a", "b"};
  std::vector<std::vector<int>> prod = {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}};
  CHECK_THROWS_WITH_AS(GroupTable::make(names, prod),
                       doctest::Contains("associativity fails"), Error);
}

TEST_CASE("axiom checker flags a deliberately corrupted table") {
  // z3 with the a-row entries a*a and a*b swapped
  std::vector<std::string> names = {"e", "a", "b"};
  std::vector<std::vector<int>> prod = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
  GroupTable bad = GroupTable::unchecked(names, prod);
  FusionRing ring = make_group_dual(bad, "bad");
  AxiomReport rep = check_axioms(ring, 1);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.empty());
  CHECK_FALSE(rep.violations.front().witness.empty());
}

TEST_CASE("label parsing round-trips through printing") {
  FusionRing ao = make_ao(2.0);
  auto v3 = ao.parse_label("v3");
  REQUIRE(v3.has_value());
  CHECK(ao.label_name(*v3) == "v3");
  CHECK_FALSE(ao.parse_label("v-1").has_value());
  CHECK_FALSE(ao.parse_label("w3").has_value());

  FusionRing z = make_cyclic();
  auto am2 = z.parse_label("a^-2");
  REQUIRE(am2.has_value());
  CHECK(am2->k == -2);
  CHECK(z.label_name(*am2) == "a^-2");

  FusionRing s3 = make_group_dual(GroupTable::symmetric3(), "s3");
  auto sr = s3.parse_label("sr");
  REQUIRE(sr.has_value());
  CHECK(s3.label_name(*sr) == "sr");
}
