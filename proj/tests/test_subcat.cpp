#include "doctest.h"

#include <set>

#include "core/subcat.hpp"

using namespace qka;

TEST_CASE("even ao subcategory validates") {
  FusionRing ao = make_ao(2.0, "A");
  Subcategory d = even_ao_subcategory(ao, 10);
  SubcatReport rep = validate_subcategory(d);
  CHECK(rep.valid);
  CHECK(rep.violations.empty());
}

TEST_CASE("the unit alone is a valid subcategory") {
  FusionRing ao = make_ao(2.0);
  Subcategory d(ao, {ao.unit()}, 4, "trivial");
  CHECK(validate_subcategory(d).valid);
}

TEST_CASE("v0,v1 is not closed: v2 appears in v1*v1") {
  FusionRing ao = make_ao(2.0);
  Subcategory d(ao, {ao.unit(), Label{ao.id(), 1, 0}}, 4, "broken");
  SubcatReport rep = validate_subcategory(d);
  CHECK_FALSE(rep.valid);
  bool found = false;
  for (const SubcatViolation& v : rep.violations) {
    if (v.condition == "fusion-closure" && v.witness.find("v2") != std::string::npos) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("relatedness in the even subcategory sees parity") {
  FusionRing ao = make_ao(2.0);
  Subcategory d = even_ao_subcategory(ao, 12);
  Label v0 = ao.unit();
  Label v1{ao.id(), 1, 0};
  Label v3{ao.id(), 3, 0};
  CHECK(related(d, v1, v1));  // reflexive, unit is in D
  CHECK(related(d, v1, v3));  // conj(v1) x v3 = v2 + v4, both even
  CHECK_FALSE(related(d, v0, v1));
  CHECK_FALSE(related(d, v3, v0));
}

TEST_CASE("relatedness refuses to guess beyond the stored bound") {
  FusionRing ao = make_ao(2.0);
  Subcategory d = even_ao_subcategory(ao, 4);
  Label v3{ao.id(), 3, 0};
  CHECK_THROWS_AS((void)related(d, v3, v3), Error);
}

TEST_CASE("quotient classes of the trivial subcategory are singletons") {
  FusionRing ao = make_ao(2.0);
  Subcategory d(ao, {ao.unit()}, 12, "trivial");
  auto classes = quotient_classes(d, 5);
  CHECK(classes.size() == 6);
  for (const QuotientClass& qc : classes) CHECK(qc.members.size() == 1);
}

TEST_CASE("even subcategory splits ao into two classes up to bound 9") {
  FusionRing ao = make_ao(2.0);
  Subcategory d = even_ao_subcategory(ao, 18);
  auto classes = quotient_classes(d, 9);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].id == "[v0]");
  CHECK(classes[1].id == "[v1]");
  CHECK(classes[0].members.size() == 5);  // v0 v2 v4 v6 v8
  CHECK(classes[1].members.size() == 5);  // v1 v3 v5 v7 v9
}

TEST_CASE("the class of the unit is the subcategory itself") {
  FusionRing ao = make_ao(2.0);
  Subcategory d = even_ao_subcategory(ao, 16);
  auto classes = quotient_classes(d, 8);
  REQUIRE(!classes.empty());
  const QuotientClass& unit_class = classes.front();
  for (const Label& lab : unit_class.members) CHECK(d.member(lab));
}

TEST_CASE("whole ring as subcategory gives one class") {
  FusionRing z2 = make_group_dual(GroupTable::cyclic(2), "z2");
  Subcategory d(z2, z2.labels_up_to(1), 1, "all");
  CHECK(quotient_classes(d, 1).size() == 1);
}

TEST_CASE("quotient refuses to run on an invalid subcategory") {
  FusionRing ao = make_ao(2.0);
  Subcategory d(ao, {ao.unit(), Label{ao.id(), 1, 0}}, 8, "broken");
  CHECK_THROWS_AS((void)quotient_classes(d, 3), Error);
}

TEST_CASE("group dual classes are the left cosets") {
  GroupTable s3 = GroupTable::symmetric3();
  FusionRing dual = make_group_dual(s3, "s3");
  const int s_idx = s3.index_of("s");
  Subcategory d = subgroup_dual_subcategory(dual, s3, {s3.identity(), s_idx}, "C2");
  auto classes = quotient_classes(d, 1);
  REQUIRE(classes.size() == 3);

  // oracle: direct coset enumeration gH
  std::set<std::set<int>> cosets;
  for (int g = 0; g < s3.size(); ++g) {
    cosets.insert({s3.mul(g, s3.identity()), s3.mul(g, s_idx)});
  }
  std::set<std::set<int>> found;
  for (const QuotientClass& qc : classes) {
    std::set<int> mem;
    for (const Label& lab : qc.members) mem.insert(static_cast<int>(lab.k));
    found.insert(mem);
  }
  CHECK(found == cosets);
}

TEST_CASE("relatedness is an equivalence and classes partition, exhaustively") {
  FusionRing ao = make_ao(2.0);
  Subcategory d = even_ao_subcategory(ao, 16);
  const int bound = 8;
  auto labels = ao.labels_up_to(bound);
  for (const Label& r : labels) CHECK(related(d, r, r));
  for (const Label& r : labels) {
    for (const Label& s : labels) {
      CHECK(related(d, r, s) == related(d, s, r));
      for (const Label& t : labels) {
        if (related(d, r, s) && related(d, s, t)) CHECK(related(d, r, t));
      }
    }
  }
  auto classes = quotient_classes(d, bound);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    covered += classes[i].members.size();
    for (const Label& a : classes[i].members) {
      for (const Label& b : classes[i].members) CHECK(related(d, a, b));
      for (std::size_t jj = i + 1; jj < classes.size(); ++jj) {
        for (const Label& b : classes[jj].members) CHECK_FALSE(related(d, a, b));
      }
    }
  }
  CHECK(covered == labels.size());
}

TEST_CASE("the even set is the only proper nontrivial closed subset at bound 4") {
  // enumerate all label subsets of ao(2) up to degree 4 that contain the
  // unit; only the trivial set, the even set and the full set validate
  FusionRing ao = make_ao(2.0);
  auto labels = ao.labels_up_to(4);
  REQUIRE(labels.size() == 5);
  std::vector<std::vector<Label>> valid;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Label> members = {labels[0]};
    for (unsigned bit = 0; bit < 4; ++bit) {
      if (mask & (1u << bit)) members.push_back(labels[bit + 1]);
    }
    Subcategory d(ao, members, 4, "candidate");
    if (validate_subcategory(d).valid) valid.push_back(members);
  }
  REQUIRE(valid.size() == 3);
  CHECK(valid[0].size() == 1);  // {v0}
  CHECK(valid[1].size() == 3);  // {v0, v2, v4}
  CHECK(valid[1][1].k == 2);
  CHECK(valid[1][2].k == 4);
  CHECK(valid[2].size() == 5);  // everything
}

TEST_CASE("trivial-block projection keeps exactly the unit class") {
  FusionRing ao = make_ao(2.0);
  Subcategory d = even_ao_subcategory(ao, 8);
  Label v1{ao.id(), 1, 0};
  Label v2{ao.id(), 2, 0};

  FusionElement x(ao.id());
  x.add(v1, 3);
  x.add(v2, 1);
  FusionElement got = project_trivial_block(d, x);
  FusionElement expect(ao.id());
  expect.add(v2, 1);
  CHECK(got == expect);

  SUBCASE("identity on D-supported elements") {
    FusionElement y(ao.id());
    y.add(ao.unit(), 2);
    y.add(Label{ao.id(), 4, 0}, 5);
    CHECK(project_trivial_block(d, y) == y);
  }
  SUBCASE("zero maps to zero") {
    CHECK(project_trivial_block(d, FusionElement(ao.id())).empty());
  }
  SUBCASE("idempotent and linear") {
    CHECK(project_trivial_block(d, got) == got);
    FusionElement two_x(ao.id());
    two_x.add(x, 2);
    FusionElement lhs = project_trivial_block(d, two_x);
    FusionElement rhs(ao.id());
    rhs.add(got, 2);
    CHECK(lhs == rhs);
  }
}
