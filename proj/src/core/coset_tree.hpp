#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "core/amalgam_group.hpp"
#include "core/subcat.hpp"

namespace qka {

/// One tree letter: a non-identity transversal representative (classical)
/// or a nontrivial quotient class (quotient), by 1-based position.
struct TreeLetter {
  int factor = 1;
  int idx = 1;
  friend auto operator<=>(const TreeLetter&, const TreeLetter&) = default;
};

using TreeWord = std::vector<TreeLetter>;

/// Truncated Bass-Serre tree over alternating letter words. Edges are all
/// words of length <= depth; vertices of type i are the words not ending in
/// a factor-i letter (the empty word is the origin of each type). Each
/// nonempty edge word w ending in factor c joins the vertex (w, other(c))
/// to the vertex (drop-last(w), c); the base edge joins the two origins.
class CosetTree {
 public:
  enum class Kind { classical, quotient };

  Kind kind = Kind::classical;
  std::string name;
  int depth = 0;

  std::vector<TreeWord> edges;
  std::vector<TreeWord> verts[2];

  std::shared_ptr<const AmalgamGroup> group;  // classical only

  // quotient only: per factor, printable class names and member label names
  std::vector<std::string> class_names[2];
  std::vector<std::vector<std::string>> class_members[2];

  int branching(int factor) const { return branching_[factor - 1]; }
  int edge_index(const TreeWord& w) const;
  int vert_index(int type, const TreeWord& w) const;  // within the type block
  /// Vertex indices are global: type-1 block first, then type-2.
  int vertex_count() const {
    return static_cast<int>(verts[0].size() + verts[1].size());
  }
  int global_vertex(int type, int within) const {
    return type == 1 ? within : within + static_cast<int>(verts[0].size());
  }
  int origin(int type) const { return global_vertex(type, origin_within_[type - 1]); }
  /// Type (1 or 2) and word of a global vertex index.
  std::pair<int, const TreeWord*> vertex(int global) const;

  /// Endpoints (global vertex indices) of an edge: (type-1 endpoint, type-2).
  std::pair<int, int> edge_endpoints(int edge) const;

  std::string letter_name(TreeLetter let) const;
  std::string word_name(const TreeWord& w) const;

  friend CosetTree build_classical_tree(std::shared_ptr<const AmalgamGroup> g,
                                        int depth);
  friend CosetTree build_quotient_tree(const Subcategory& d1, const Subcategory& d2,
                                       int depth, int degree_bound,
                                       const std::string& name);

 private:
  void finish();  // sorts bases, builds indexes and endpoints

  int branching_[2] = {0, 0};
  int origin_within_[2] = {0, 0};
  std::map<TreeWord, int> edge_index_;
  std::map<TreeWord, int> vert_index_[2];
  std::vector<std::pair<int, int>> endpoints_;
  std::vector<std::string> letter_names_[2];
};

CosetTree build_classical_tree(std::shared_ptr<const AmalgamGroup> g, int depth);

/// Block-level quotient tree: letters are the nontrivial quotient classes
/// of each factor computed at degree_bound. Requires both subcategories to
/// validate.
CosetTree build_quotient_tree(const Subcategory& d1, const Subcategory& d2,
                              int depth, int degree_bound,
                              const std::string& name = "quotient-tree");

struct TreeStructureReport {
  i64 edges = 0;
  i64 vertices = 0;
  bool euler_ok = false;             // |E| = |V| - 1 on the ball
  bool adjacency_ok = false;         // endpoints match the word combinatorics
  bool interior_degrees_ok = false;  // interior degree = branching + 1
  std::vector<std::string> problems;
  bool ok() const { return euler_ok && adjacency_ok && interior_degrees_ok; }
};

TreeStructureReport verify_tree_structure(const CosetTree& t);

struct TreeIsoReport {
  bool isomorphic = false;
  std::string detail;
};

/// Explicit basis bijection between the classical tree of (G1, G2, H) and
/// the quotient tree of the dual data: letters are matched by comparing the
/// coset of each transversal representative with the member set of each
/// nontrivial class.
TreeIsoReport check_quotient_classical_iso(const CosetTree& classical,
                                           const CosetTree& quotient);

}  // namespace qka
