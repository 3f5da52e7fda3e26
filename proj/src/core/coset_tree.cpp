#include "core/coset_tree.hpp"

#include <algorithm>
#include <set>

namespace qka {

namespace {

std::vector<TreeWord> alternating_words(int depth, int branch1, int branch2) {
  std::vector<TreeWord> out;
  out.push_back({});
  std::vector<TreeWord> frontier = {{}};
  const int branch[2] = {branch1, branch2};
  for (int len = 1; len <= depth; ++len) {
    std::vector<TreeWord> next;
    for (const TreeWord& w : frontier) {
      const int last = w.empty() ? 0 : w.back().factor;
      for (int f : {1, 2}) {
        if (f == last) continue;
        for (int idx = 1; idx <= branch[f - 1]; ++idx) {
          TreeWord ext = w;
          ext.push_back(TreeLetter{f, idx});
          next.push_back(std::move(ext));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

bool word_less(const TreeWord& a, const TreeWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

void CosetTree::finish() {
  std::sort(edges.begin(), edges.end(), word_less);
  for (int t = 0; t < 2; ++t) {
    verts[t].clear();
    for (const TreeWord& w : edges) {
      if (w.empty() || w.back().factor != t + 1) verts[t].push_back(w);
    }
    std::sort(verts[t].begin(), verts[t].end(), word_less);
    vert_index_[t].clear();
    for (int i = 0; i < static_cast<int>(verts[t].size()); ++i) {
      vert_index_[t][verts[t][i]] = i;
    }
    origin_within_[t] = vert_index_[t].at(TreeWord{});
  }
  edge_index_.clear();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    edge_index_[edges[i]] = i;
  }
  endpoints_.clear();
  endpoints_.reserve(edges.size());
  for (const TreeWord& w : edges) {
    TreeWord w1 = w, w2 = w;
    if (!w.empty() && w.back().factor == 1) w1.pop_back();
    if (!w.empty() && w.back().factor == 2) w2.pop_back();
    endpoints_.push_back({global_vertex(1, vert_index_[0].at(w1)),
                          global_vertex(2, vert_index_[1].at(w2))});
  }
}

int CosetTree::edge_index(const TreeWord& w) const {
  auto it = edge_index_.find(w);
  return it == edge_index_.end() ? -1 : it->second;
}

int CosetTree::vert_index(int type, const TreeWord& w) const {
  auto it = vert_index_[type - 1].find(w);
  return it == vert_index_[type - 1].end() ? -1 : it->second;
}

std::pair<int, const TreeWord*> CosetTree::vertex(int global) const {
  const int n1 = static_cast<int>(verts[0].size());
  if (global < n1) return {1, &verts[0][global]};
  return {2, &verts[1][global - n1]};
}

std::pair<int, int> CosetTree::edge_endpoints(int edge) const {
  return endpoints_[edge];
}

std::string CosetTree::letter_name(TreeLetter let) const {
  return std::to_string(let.factor) + ":" + letter_names_[let.factor - 1][let.idx];
}

std::string CosetTree::word_name(const TreeWord& w) const {
  std::string out = "[";
  bool first = true;
  for (const TreeLetter& let : w) {
    if (!first) out += " ";
    first = false;
    out += letter_name(let);
  }
  return out + "]";
}

CosetTree build_classical_tree(std::shared_ptr<const AmalgamGroup> g, int depth) {
  if (depth < 0) throw Error("tree depth must be >= 0");
  CosetTree t;
  t.kind = CosetTree::Kind::classical;
  t.name = g->name();
  t.depth = depth;
  t.group = g;
  t.branching_[0] = g->branching(1);
  t.branching_[1] = g->branching(2);
  for (int f : {1, 2}) {
    auto& names = t.letter_names_[f - 1];
    names.resize(g->transversal(f).size());
    for (std::size_t p = 0; p < g->transversal(f).size(); ++p) {
      names[p] = g->group(f).name(g->transversal(f)[p]);
    }
  }
  t.edges = alternating_words(depth, t.branching_[0], t.branching_[1]);
  t.finish();
  return t;
}

CosetTree build_quotient_tree(const Subcategory& d1, const Subcategory& d2,
                              int depth, int degree_bound, const std::string& name) {
  if (depth < 0) throw Error("tree depth must be >= 0");
  CosetTree t;
  t.kind = CosetTree::Kind::quotient;
  t.name = name;
  t.depth = depth;
  const Subcategory* ds[2] = {&d1, &d2};
  for (int f : {1, 2}) {
    const Subcategory& d = *ds[f - 1];
    std::vector<QuotientClass> classes = quotient_classes(d, degree_bound);
    const Label one = d.ring().unit();
    auto& names = t.class_names[f - 1];
    auto& members = t.class_members[f - 1];
    names.push_back("[" + d.ring().label_name(one) + "]");  // trivial class slot 0
    members.push_back({});
    for (const QuotientClass& qc : classes) {
      const bool trivial =
          std::binary_search(qc.members.begin(), qc.members.end(), one);
      std::vector<std::string> mem;
      for (const Label& lab : qc.members) mem.push_back(d.ring().label_name(lab));
      if (trivial) {
        members[0] = std::move(mem);
        names[0] = qc.id;
      } else {
        names.push_back(qc.id);
        members.push_back(std::move(mem));
      }
    }
    t.branching_[f - 1] = static_cast<int>(names.size()) - 1;
    t.letter_names_[f - 1] = names;
  }
  t.edges = alternating_words(depth, t.branching_[0], t.branching_[1]);
  t.finish();
  return t;
}

TreeStructureReport verify_tree_structure(const CosetTree& t) {
  TreeStructureReport rep;
  rep.edges = static_cast<i64>(t.edges.size());
  rep.vertices = t.vertex_count();
  rep.euler_ok = rep.edges == rep.vertices - 1;
  if (!rep.euler_ok) rep.problems.push_back("edge/vertex count mismatch");

  rep.adjacency_ok = true;
  std::vector<int> degree(t.vertex_count(), 0);
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    auto [v1, v2] = t.edge_endpoints(e);
    ++degree[v1];
    ++degree[v2];
    const TreeWord& w = t.edges[e];
    auto [type1, w1] = t.vertex(v1);
    auto [type2, w2] = t.vertex(v2);
    if (type1 != 1 || type2 != 2) {
      rep.adjacency_ok = false;
      rep.problems.push_back("endpoint types wrong at edge " + t.word_name(w));
      continue;
    }
    TreeWord e1 = w, e2 = w;
    if (!w.empty() && w.back().factor == 1) e1.pop_back();
    if (!w.empty() && w.back().factor == 2) e2.pop_back();
    if (*w1 != e1 || *w2 != e2) {
      rep.adjacency_ok = false;
      rep.problems.push_back("endpoints disagree at edge " + t.word_name(w));
    }
  }

  rep.interior_degrees_ok = true;
  for (int v = 0; v < t.vertex_count(); ++v) {
    auto [type, w] = t.vertex(v);
    if (static_cast<int>(w->size()) + 1 <= t.depth) {
      const int want = t.branching(type) + 1;
      if (degree[v] != want) {
        rep.interior_degrees_ok = false;
        rep.problems.push_back("interior vertex " + t.word_name(*w) + " of type " +
                               std::to_string(type) + " has degree " +
                               std::to_string(degree[v]) + ", expected " +
                               std::to_string(want));
      }
    }
  }
  return rep;
}

TreeIsoReport check_quotient_classical_iso(const CosetTree& classical,
                                           const CosetTree& quotient) {
  TreeIsoReport rep;
  if (classical.kind != CosetTree::Kind::classical ||
      quotient.kind != CosetTree::Kind::quotient) {
    rep.detail = "expected one classical and one quotient tree";
    return rep;
  }
  if (classical.depth != quotient.depth) {
    rep.detail = "depth mismatch";
    return rep;
  }
  const AmalgamGroup& g = *classical.group;

  // letter bijection per factor: transversal representative t <-> the class
  // whose member set equals the coset tH
  std::vector<int> letter_map[2];
  for (int f : {1, 2}) {
    const GroupTable& gt = g.group(f);
    const int branch = classical.branching(f);
    if (branch != quotient.branching(f)) {
      rep.detail = "factor " + std::to_string(f) + ": branching " +
                   std::to_string(branch) + " vs " +
                   std::to_string(quotient.branching(f));
      return rep;
    }
    letter_map[f - 1].assign(branch + 1, -1);
    letter_map[f - 1][0] = 0;
    for (int p = 1; p <= branch; ++p) {
      const int t = g.transversal(f)[p];
      std::set<std::string> coset;
      for (int h = 0; h < g.h_size(); ++h) {
        coset.insert(gt.name(gt.mul(t, g.h_elem(f, h))));
      }
      int found = -1;
      for (int c = 1; c <= branch; ++c) {
        const auto& mem = quotient.class_members[f - 1][c];
        if (std::set<std::string>(mem.begin(), mem.end()) == coset) {
          found = c;
          break;
        }
      }
      if (found < 0) {
        rep.detail = "no quotient class matches the coset of " + gt.name(t);
        return rep;
      }
      letter_map[f - 1][p] = found;
    }
  }

  // the induced word map must carry bases and adjacency across
  auto map_word = [&](const TreeWord& w) {
    TreeWord out = w;
    for (TreeLetter& let : out) let.idx = letter_map[let.factor - 1][let.idx];
    return out;
  };
  std::set<int> seen;
  for (const TreeWord& w : classical.edges) {
    const int e = quotient.edge_index(map_word(w));
    if (e < 0 || !seen.insert(e).second) {
      rep.detail = "edge map not bijective at " + classical.word_name(w);
      return rep;
    }
    auto [cv1, cv2] = classical.edge_endpoints(classical.edge_index(w));
    auto [qv1, qv2] = quotient.edge_endpoints(e);
    auto [ct1, cw1] = classical.vertex(cv1);
    auto [ct2, cw2] = classical.vertex(cv2);
    if (quotient.vert_index(1, map_word(*cw1)) != qv1 ||
        quotient.global_vertex(2, quotient.vert_index(2, map_word(*cw2))) != qv2) {
      rep.detail = "adjacency not preserved at " + classical.word_name(w);
      return rep;
    }
    (void)ct1;
    (void)ct2;
  }
  if (seen.size() != quotient.edges.size()) {
    rep.detail = "edge count mismatch";
    return rep;
  }
  rep.isomorphic = true;
  rep.detail = "letterwise bijection carries bases and adjacency";
  return rep;
}

}  // namespace qka
