#include "core/jv.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qka {

namespace {

constexpr double kPi = 3.14159265358979323846;

int other(int factor) { return factor == 1 ? 2 : 1; }

std::vector<std::pair<int, int>> tree_word_to_elems(const CosetTree& t,
                                                    const TreeWord& w) {
  std::vector<std::pair<int, int>> out;
  out.reserve(w.size());
  for (const TreeLetter& let : w) {
    out.push_back({let.factor, t.group->transversal(let.factor)[let.idx]});
  }
  return out;
}

TreeWord nf_to_tree_word(const AmalgamGroup::NF& nf) {
  TreeWord out;
  out.reserve(nf.word.size());
  for (const auto& let : nf.word) out.push_back(TreeLetter{let.factor, let.t_pos});
  return out;
}

void require_classical(const CosetTree& t, const char* what) {
  if (t.kind != CosetTree::Kind::classical || !t.group) {
    throw Error(std::string(what) +
                ": group representations are unavailable at block level; "
                "classical tree required");
  }
}

}  // namespace

PartialMap julg_valette(const CosetTree& t, int type) {
  if (type != 1 && type != 2) throw Error("julg_valette: type must be 1 or 2");
  PartialMap phi(static_cast<int>(t.edges.size()), t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v == t.origin(type)) {
      phi.img[v] = PartialMap::kZero;
      continue;
    }
    auto [vt, w] = t.vertex(v);
    (void)vt;
    phi.img[v] = t.edge_index(*w);
  }
  return phi;
}

PartialMap tilde_phi(const CosetTree& t, int type) {
  PartialMap phi = julg_valette(t, type);
  PartialMap out(phi.rows + 1, phi.cols);
  out.img = phi.img;
  out.img[t.origin(type)] = phi.rows;  // the extra unit coordinate
  return out;
}

PartialMap edge_action(const CosetTree& t, const std::vector<std::pair<int, int>>& g) {
  require_classical(t, "edge_action");
  PartialMap out(static_cast<int>(t.edges.size()), static_cast<int>(t.edges.size()));
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    auto letters = g;
    auto tail = tree_word_to_elems(t, t.edges[e]);
    letters.insert(letters.end(), tail.begin(), tail.end());
    AmalgamGroup::NF nf = t.group->word_to_nf(letters);
    const int idx = t.edge_index(nf_to_tree_word(nf));
    out.img[e] = idx >= 0 ? idx : PartialMap::kUndef;
  }
  return out;
}

PartialMap vertex_action(const CosetTree& t, const std::vector<std::pair<int, int>>& g) {
  require_classical(t, "vertex_action");
  PartialMap out(t.vertex_count(), t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    auto [type, w] = t.vertex(v);
    auto letters = g;
    auto tail = tree_word_to_elems(t, *w);
    letters.insert(letters.end(), tail.begin(), tail.end());
    AmalgamGroup::NF nf = t.group->word_to_nf(letters);
    TreeWord image = nf_to_tree_word(nf);
    if (!image.empty() && image.back().factor == type) image.pop_back();
    const int within = t.vert_index(type, image);
    out.img[v] = within >= 0 ? t.global_vertex(type, within) : PartialMap::kUndef;
  }
  return out;
}

PartialMap origin_swap(const CosetTree& t) {
  PartialMap u = PartialMap::identity(t.vertex_count());
  u.img[t.origin(1)] = t.origin(2);
  u.img[t.origin(2)] = t.origin(1);
  return u;
}

std::vector<GenLetter> amalgam_generators(const AmalgamGroup& g) {
  std::vector<GenLetter> out;
  for (int f : {1, 2}) {
    const GroupTable& gt = g.group(f);
    for (int x = 0; x < gt.size(); ++x) {
      if (x == gt.identity()) continue;
      out.push_back(GenLetter{f, x, "G" + std::to_string(f) + ":" + gt.name(x)});
    }
  }
  return out;
}

FredholmReport fredholm_report(const CosetTree& t, int phi_type) {
  FredholmReport rep;
  rep.tree = t.name;
  rep.depth = t.depth;
  rep.phi_type = phi_type;
  rep.vertices = t.vertex_count();
  rep.edges = static_cast<i64>(t.edges.size());

  // an edge is interior when both endpoints lie in the ball; with the coset
  // normal forms every endpoint word is no longer than the edge word, so on
  // these trees the whole edge basis is interior -- computed, not assumed
  rep.interior_edges = 0;
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    auto [v1, v2] = t.edge_endpoints(e);
    if (v1 >= 0 && v2 >= 0) ++rep.interior_edges;
  }

  PartialMap phi = julg_valette(t, phi_type);
  rep.rank = phi.to_int_mat().rank();
  rep.kernel_dim = rep.vertices - rep.rank;
  rep.cokernel_dim = rep.interior_edges - rep.rank;
  rep.index = rep.kernel_dim - rep.cokernel_dim;

  // adjoint picture: edge -> furthest endpoint from the origin
  std::vector<int> hits(t.vertex_count(), 0);
  bool ok = true;
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    const TreeWord& w = t.edges[e];
    const int far_type = w.empty() ? other(phi_type) : other(w.back().factor);
    const int within = t.vert_index(far_type, w);
    if (within < 0) {
      ok = false;
      continue;
    }
    ++hits[t.global_vertex(far_type, within)];
  }
  for (int v = 0; v < t.vertex_count() && ok; ++v) {
    const int want = v == t.origin(phi_type) ? 0 : 1;
    if (hits[v] != want) ok = false;
  }
  rep.bijection_ok = ok;
  return rep;
}

CommutatorReport commutator_report(const CosetTree& t, int phi_type,
                                   const std::vector<std::pair<int, int>>& g,
                                   const std::string& gen_name, int margin) {
  require_classical(t, "commutator_report");
  if (margin < static_cast<int>(g.size())) {
    throw Error("commutator_report: margin " + std::to_string(margin) +
                " smaller than the generator word length " +
                std::to_string(g.size()));
  }
  if (t.depth < margin) {
    throw Error("commutator_report: tree depth smaller than the margin");
  }
  CommutatorReport rep;
  rep.generator = gen_name;
  rep.margin = margin;
  rep.interior_depth = t.depth - margin;

  PartialMap phi = julg_valette(t, phi_type);
  PartialMap pi = edge_action(t, g);
  PartialMap rho = vertex_action(t, g);
  PartialMap left = PartialMap::compose(pi, phi);
  PartialMap right = PartialMap::compose(phi, rho);

  IntMat c(static_cast<int>(t.edges.size()), t.vertex_count());
  std::vector<char> evaluated(t.vertex_count(), 0);
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (!left.defined(v) || !right.defined(v)) continue;
    evaluated[v] = 1;
    if (left.img[v] >= 0) c.add(left.img[v], v, 1);
    if (right.img[v] >= 0) c.add(right.img[v], v, -1);
  }

  rep.all_interior_columns_evaluated = true;
  for (int v = 0; v < t.vertex_count(); ++v) {
    auto [type, w] = t.vertex(v);
    (void)type;
    if (static_cast<int>(w->size()) <= rep.interior_depth && !evaluated[v]) {
      rep.all_interior_columns_evaluated = false;
    }
  }

  // outside the origin zone (both row and column within word length
  // `margin` of the origin pair) every evaluated entry must vanish
  for (const auto& [rc, v] : c.a) {
    const int edge_depth = static_cast<int>(t.edges[rc.first].size());
    auto [type, w] = t.vertex(rc.second);
    (void)type;
    const int vert_depth = static_cast<int>(w->size());
    if (edge_depth <= margin && vert_depth <= margin) continue;
    rep.interior_max_abs = std::max(rep.interior_max_abs, v < 0 ? -v : v);
  }
  rep.rank = c.rank();
  rep.nnz = c.nnz();
  return rep;
}

bool HomotopyReport::ok() const {
  if (!u_commutes_with_h || !h_definitions_agree) return false;
  if (!endpoint_evaluated || endpoint_defect != 0) return false;
  if (t0_defect == 0) return false;  // the control must detect the twist
  for (const HomotopySample& s : samples) {
    if (!s.pass) return false;
  }
  return true;
}

HomotopyReport homotopy_check(const CosetTree& t, int t_samples, int margin) {
  require_classical(t, "homotopy_check");
  if (margin < 1) throw Error("homotopy_check: margin must be >= 1");
  if (t.depth < margin) throw Error("homotopy_check: tree depth smaller than margin");
  if (t_samples < 2) throw Error("homotopy_check: need at least 2 samples");

  HomotopyReport rep;
  rep.tree = t.name;
  rep.margin = margin;
  rep.interior_depth = t.depth - margin;

  const AmalgamGroup& g = *t.group;
  const int nv = t.vertex_count();
  PartialMap u = origin_swap(t);

  // (a) unitarity of u_t at the sampled parameters
  for (int k = 0; k < t_samples; ++k) {
    const double tk = (kPi / 2.0) * static_cast<double>(k) /
                      static_cast<double>(t_samples - 1);
    CplxMat ut(nv, nv);
    const std::complex<double> c(std::cos(tk), 0.0);
    const std::complex<double> is(0.0, std::sin(tk));
    for (int v = 0; v < nv; ++v) {
      ut.add(v, v, c);
      ut.add(u.img[v], v, is);
    }
    const double defect = CplxMat::mul(ut, ut.adjoint()).max_abs_dev_from_identity();
    rep.samples.push_back(HomotopySample{tk, defect, defect <= 1e-12});
  }

  // (b) u commutes exactly with the subgroup action; (c) the two subgroup
  // pictures define the same permutation
  rep.u_commutes_with_h = true;
  rep.h_definitions_agree = true;
  for (int h = 1; h < g.h_size(); ++h) {
    PartialMap rho1 = vertex_action(t, {{1, g.h_elem(1, h)}});
    PartialMap rho2 = vertex_action(t, {{2, g.h_elem(2, h)}});
    if (rho1.img != rho2.img) rep.h_definitions_agree = false;
    if (PartialMap::compose(u, rho1).img != PartialMap::compose(rho1, u).img) {
      rep.u_commutes_with_h = false;
    }
  }

  // (d) endpoint t* = pi/2: conjugation by u_{t*} equals conjugation by u,
  // so the check is exact integer arithmetic
  PartialMap phi = tilde_phi(t, 1);
  const int ne = static_cast<int>(t.edges.size());
  rep.endpoint_evaluated = true;
  rep.endpoint_defect = 0;
  i64 t0_defect = -1;
  for (const GenLetter& gen : amalgam_generators(g)) {
    PartialMap rho = vertex_action(t, {{gen.factor, gen.elem}});
    PartialMap pi_edges = edge_action(t, {{gen.factor, gen.elem}});
    PartialMap pi_tilde(ne + 1, ne + 1);
    for (int e = 0; e < ne; ++e) pi_tilde.img[e] = pi_edges.img[e];
    pi_tilde.img[ne] = ne;  // trivial representation on the unit line

    PartialMap rho_star =
        gen.factor == 1 ? rho : PartialMap::compose(u, PartialMap::compose(rho, u));
    PartialMap left = PartialMap::compose(pi_tilde, phi);
    PartialMap right_star = PartialMap::compose(phi, rho_star);
    IntMat defect(ne + 1, nv);
    for (int v = 0; v < nv; ++v) {
      if (!left.defined(v) || !right_star.defined(v)) {
        auto [type, w] = t.vertex(v);
        (void)type;
        if (static_cast<int>(w->size()) <= rep.interior_depth) {
          rep.endpoint_evaluated = false;
        }
        continue;
      }
      if (left.img[v] >= 0) defect.add(left.img[v], v, 1);
      if (right_star.img[v] >= 0) defect.add(right_star.img[v], v, -1);
    }
    rep.endpoint_defect = std::max(rep.endpoint_defect, defect.max_abs());

    // negative control at t = 0 for generators outside the subgroup in G2
    if (gen.factor == 2 && g.h_index(2, gen.elem) < 0) {
      PartialMap right0 = PartialMap::compose(phi, rho);
      IntMat d0(ne + 1, nv);
      for (int v = 0; v < nv; ++v) {
        if (!left.defined(v) || !right0.defined(v)) continue;
        if (left.img[v] >= 0) d0.add(left.img[v], v, 1);
        if (right0.img[v] >= 0) d0.add(right0.img[v], v, -1);
      }
      t0_defect = std::max(t0_defect, d0.max_abs());
    }
  }
  rep.t0_defect = t0_defect;
  return rep;
}

PsiBijectionReport check_psi_bijection(const CosetTree& t, int type) {
  PsiBijectionReport rep;
  rep.type = type;
  std::vector<int> hit(t.edges.size(), 0);
  const int nt = t.branching(type) + 1;
  const auto& vwords = t.verts[type - 1];
  bool ok = true;
  std::string detail;
  for (const TreeWord& w : vwords) {
    for (int pos = 0; pos < nt; ++pos) {
      TreeWord e = w;
      if (pos != 0) e.push_back(TreeLetter{type, pos});
      if (static_cast<int>(e.size()) > t.depth) continue;
      const int idx = t.edge_index(e);
      if (idx < 0) {
        ok = false;
        detail = "pair maps outside the edge basis at " + t.word_name(w);
        continue;
      }
      ++hit[idx];
      // compatibility with the coset projection back to the vertex word
      TreeWord stripped = e;
      if (!stripped.empty() && stripped.back().factor == type) stripped.pop_back();
      if (stripped != w) {
        ok = false;
        detail = "projection mismatch at " + t.word_name(e);
      }
    }
  }
  for (std::size_t e = 0; e < hit.size(); ++e) {
    if (hit[e] != 1) {
      ok = false;
      detail = "edge " + t.word_name(t.edges[e]) + " hit " +
               std::to_string(hit[e]) + " times";
    }
  }
  rep.ok = ok;
  rep.detail = ok ? "bijective and projection-compatible" : detail;
  return rep;
}

}  // namespace qka
