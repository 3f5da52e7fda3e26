#include "doctest.h"

#include "core/jv.hpp"

using namespace qka;

namespace {

std::shared_ptr<const AmalgamGroup> s3_amalgam() {
  AmalgamGroupSpec spec;
  spec.name = "s3*s3";
  spec.g1 = GroupTable::symmetric3();
  spec.g2 = GroupTable::symmetric3();
  const int e = spec.g1.index_of("e");
  const int s = spec.g1.index_of("s");
  spec.ident = {{e, e}, {s, s}};
  return AmalgamGroup::build(std::move(spec));
}

std::shared_ptr<const AmalgamGroup> z2_amalgam() {
  AmalgamGroupSpec spec;
  spec.name = "z2*z2";
  spec.g1 = GroupTable::cyclic(2);
  spec.g2 = GroupTable::cyclic(2);
  spec.ident = {{0, 0}};
  return AmalgamGroup::build(std::move(spec));
}

}  // namespace

TEST_CASE("depth-zero operator is (0 1): kernel one, surjective") {
  CosetTree t = build_classical_tree(s3_amalgam(), 0);
  FredholmReport rep = fredholm_report(t, 1);
  CHECK(rep.vertices == 2);
  CHECK(rep.edges == 1);
  CHECK(rep.rank == 1);
  CHECK(rep.kernel_dim == 1);
  CHECK(rep.cokernel_dim == 0);
  CHECK(rep.index == 1);
  CHECK(rep.bijection_ok);

  PartialMap phi = julg_valette(t, 1);
  CHECK(phi.img[t.origin(1)] == PartialMap::kZero);
  CHECK(phi.img[t.origin(2)] == 0);  // the base edge
}

TEST_CASE("the other origin maps to the base edge, origin row zero") {
  CosetTree t = build_classical_tree(s3_amalgam(), 3);
  for (int type : {1, 2}) {
    PartialMap phi = julg_valette(t, type);
    CHECK(phi.img[t.origin(type)] == PartialMap::kZero);
    CHECK(phi.img[t.origin(type == 1 ? 2 : 1)] == t.edge_index(TreeWord{}));
  }
}

TEST_CASE("Fredholm index is one at every depth, classical and quotient") {
  for (int depth = 0; depth <= 6; ++depth) {
    for (const auto& group : {s3_amalgam(), z2_amalgam()}) {
      CosetTree t = build_classical_tree(group, depth);
      for (int type : {1, 2}) {
        FredholmReport rep = fredholm_report(t, type);
        CHECK(rep.index == 1);
        CHECK(rep.kernel_dim == 1);
        CHECK(rep.cokernel_dim == 0);
        CHECK(rep.bijection_ok);
      }
    }
  }
  FusionRing a1 = make_ao(2.0, "A1");
  FusionRing a2 = make_ao(2.0, "A2");
  Subcategory d1 = even_ao_subcategory(a1, 12, "D1");
  Subcategory d2 = even_ao_subcategory(a2, 12, "D2");
  for (int depth = 0; depth <= 6; ++depth) {
    CosetTree t = build_quotient_tree(d1, d2, depth, 6);
    FredholmReport rep = fredholm_report(t, 1);
    CHECK(rep.index == 1);
    CHECK(rep.kernel_dim == 1);
    CHECK(rep.cokernel_dim == 0);
  }
}

TEST_CASE("psi pairing is a bijection onto the edge basis") {
  CosetTree t = build_classical_tree(s3_amalgam(), 4);
  for (int type : {1, 2}) {
    PsiBijectionReport rep = check_psi_bijection(t, type);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("group action basics") {
  auto group = s3_amalgam();
  CosetTree t = build_classical_tree(group, 3);
  const GroupTable& g1 = group->group(1);

  SUBCASE("identity acts as the identity") {
    PartialMap pi = edge_action(t, {{1, g1.identity()}});
    for (int e = 0; e < pi.cols; ++e) CHECK(pi.img[e] == e);
    PartialMap rho = vertex_action(t, {{1, g1.identity()}});
    for (int v = 0; v < rho.cols; ++v) CHECK(rho.img[v] == v);
  }
  SUBCASE("subgroup elements fix the base edge") {
    for (int h = 0; h < group->h_size(); ++h) {
      PartialMap pi = edge_action(t, {{1, group->h_elem(1, h)}});
      CHECK(pi.img[t.edge_index(TreeWord{})] == t.edge_index(TreeWord{}));
    }
  }
  SUBCASE("g in G1 minus H fixes origin1 and moves origin2") {
    const int r = g1.index_of("r");
    PartialMap rho = vertex_action(t, {{1, r}});
    CHECK(rho.img[t.origin(1)] == t.origin(1));
    CHECK(rho.img[t.origin(2)] != t.origin(2));
    CHECK(rho.img[t.origin(2)] >= 0);
  }
  SUBCASE("inverse composes to the identity inside the safe ball") {
    const int r = g1.index_of("r");
    PartialMap fwd = edge_action(t, {{1, r}});
    PartialMap bwd = edge_action(t, {{1, g1.inverse(r)}});
    PartialMap round = PartialMap::compose(bwd, fwd);
    for (int e = 0; e < round.cols; ++e) {
      if (static_cast<int>(t.edges[e].size()) <= t.depth - 2) {
        CHECK(round.img[e] == e);
      }
    }
  }
}

TEST_CASE("translations are total and bijective on the interior") {
  auto group = s3_amalgam();
  const int depth = 4;
  const int margin = 1;
  CosetTree t = build_classical_tree(group, depth);
  for (const GenLetter& gen : amalgam_generators(*group)) {
    PartialMap pi = edge_action(t, {{gen.factor, gen.elem}});
    PartialMap rho = vertex_action(t, {{gen.factor, gen.elem}});
    // interior columns are always defined
    for (int e = 0; e < pi.cols; ++e) {
      if (static_cast<int>(t.edges[e].size()) <= depth - margin) {
        CHECK(pi.defined(e));
      }
    }
    for (int v = 0; v < rho.cols; ++v) {
      auto [type, w] = t.vertex(v);
      (void)type;
      if (static_cast<int>(w->size()) <= depth - margin) CHECK(rho.defined(v));
    }
    // interior rows are hit exactly once (the preimage stays in the ball)
    std::vector<int> hits(pi.rows, 0);
    for (int e = 0; e < pi.cols; ++e) {
      if (pi.img[e] >= 0) ++hits[pi.img[e]];
    }
    for (int e = 0; e < pi.rows; ++e) {
      if (static_cast<int>(t.edges[e].size()) <= depth - margin) {
        CHECK(hits[e] == 1);
      } else {
        CHECK(hits[e] <= 1);
      }
    }
  }
}

TEST_CASE("commutators vanish identically for the matching factor") {
  auto group = s3_amalgam();
  CosetTree t = build_classical_tree(group, 4);  // depth 3 + margin 1
  const GroupTable& g1 = group->group(1);
  for (int x = 0; x < g1.size(); ++x) {
    if (x == g1.identity()) continue;
    CommutatorReport rep = commutator_report(t, 1, {{1, x}}, "G1:" + g1.name(x), 1);
    CHECK(rep.ok());
    CHECK(rep.interior_max_abs == 0);
    CHECK(rep.rank == 0);
    CHECK(rep.nnz == 0);
  }
}

TEST_CASE("commutator of the identity is zero") {
  auto group = s3_amalgam();
  CosetTree t = build_classical_tree(group, 3);
  CommutatorReport rep =
      commutator_report(t, 1, {{2, group->group(2).identity()}}, "G2:e", 1);
  CHECK(rep.rank == 0);
  CHECK(rep.nnz == 0);
}

TEST_CASE("opposite-factor commutators are supported near the origin, rank constant") {
  auto group = s3_amalgam();
  const GroupTable& g2 = group->group(2);
  const int r = g2.index_of("r");
  std::vector<int> ranks;
  for (int depth : {3, 4, 5}) {
    CosetTree t = build_classical_tree(group, depth + 1);
    CommutatorReport rep = commutator_report(t, 1, {{2, r}}, "G2:r", 1);
    CHECK(rep.all_interior_columns_evaluated);
    CHECK(rep.interior_max_abs == 0);
    CHECK(rep.rank > 0);
    ranks.push_back(rep.rank);
  }
  CHECK(ranks[0] == ranks[1]);
  CHECK(ranks[1] == ranks[2]);
}

TEST_CASE("margin smaller than the word length is rejected") {
  auto group = s3_amalgam();
  CosetTree t = build_classical_tree(group, 3);
  CHECK_THROWS_AS((void)commutator_report(t, 1, {{1, 1}, {2, 1}}, "w", 1), Error);
}

TEST_CASE("tilde operator is a bijection differing from phi in one column") {
  CosetTree t = build_classical_tree(s3_amalgam(), 3);
  PartialMap phi = julg_valette(t, 1);
  PartialMap tphi = tilde_phi(t, 1);
  int diff = 0;
  for (int v = 0; v < phi.cols; ++v) {
    if (phi.img[v] != tphi.img[v]) ++diff;
  }
  CHECK(diff == 1);  // exactly the origin column changed

  // rank-one difference as matrices
  IntMat a = tphi.to_int_mat();
  IntMat b(phi.rows + 1, phi.cols);
  for (int v = 0; v < phi.cols; ++v) {
    if (phi.img[v] >= 0) b.add(phi.img[v], v, 1);
  }
  CHECK(IntMat::sub(a, b).rank() == 1);

  // unitary: a permutation of the vertex basis onto edges + unit line
  std::vector<int> hits(tphi.rows, 0);
  for (int v = 0; v < tphi.cols; ++v) {
    REQUIRE(tphi.img[v] >= 0);
    ++hits[tphi.img[v]];
  }
  for (int r = 0; r < tphi.rows; ++r) CHECK(hits[r] == 1);

  // phi~ phi~* = identity on edges + unit line
  IntMat prod = IntMat::mul(a, [&] {
    IntMat at(a.cols, a.rows);
    for (const auto& [rc, v] : a.a) at.add(rc.second, rc.first, v);
    return at;
  }());
  CHECK(prod.nnz() == prod.rows);
  for (const auto& [rc, v] : prod.a) {
    CHECK(rc.first == rc.second);
    CHECK(v == 1);
  }
}

TEST_CASE("homotopy verification on the reference amalgam") {
  auto group = s3_amalgam();
  CosetTree t = build_classical_tree(group, 4);  // depth 3 + margin 1
  HomotopyReport rep = homotopy_check(t, 9, 1);

  CHECK(rep.samples.size() == 9);
  CHECK(rep.samples.front().t == doctest::Approx(0.0));
  CHECK(rep.samples.back().t == doctest::Approx(3.14159265358979 / 2));
  for (const HomotopySample& s : rep.samples) {
    CHECK(s.unitarity_defect <= 1e-12);
    CHECK(s.pass);
  }
  CHECK(rep.u_commutes_with_h);
  CHECK(rep.h_definitions_agree);
  CHECK(rep.endpoint_evaluated);
  CHECK(rep.endpoint_defect == 0);
  CHECK(rep.t0_defect > 0);
  CHECK(rep.ok());
}

TEST_CASE("homotopy rejects the quotient tree and bad margins") {
  FusionRing a1 = make_ao(2.0, "A1");
  FusionRing a2 = make_ao(2.0, "A2");
  Subcategory d1 = even_ao_subcategory(a1, 12, "D1");
  Subcategory d2 = even_ao_subcategory(a2, 12, "D2");
  CosetTree q = build_quotient_tree(d1, d2, 3, 6);
  CHECK_THROWS_AS((void)homotopy_check(q, 9, 1), Error);

  CosetTree t = build_classical_tree(s3_amalgam(), 3);
  CHECK_THROWS_AS((void)homotopy_check(t, 9, 0), Error);
  CHECK_THROWS_AS((void)homotopy_check(t, 1, 1), Error);
}
