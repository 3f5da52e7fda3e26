#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "core/group_table.hpp"

namespace qka {

/// Input data for a classical amalgam G1 *_H G2: two multiplication tables,
/// the common subgroup as identified element pairs, and optional left
/// transversals (auto-chosen by lowest element name when omitted).
struct AmalgamGroupSpec {
  std::string name = "amalgam";
  GroupTable g1 = GroupTable::cyclic(1);
  GroupTable g2 = GroupTable::cyclic(1);
  std::vector<std::pair<int, int>> ident;  // (element of g1, element of g2)
  std::vector<int> transversal1;           // element ids, may be empty
  std::vector<int> transversal2;
};

/// Validated amalgam with normal-form arithmetic on cosets. Every element
/// of the amalgam has the unique form t_{i1} ... t_{in} h with alternating
/// non-identity transversal representatives and h in H; renormalization of
/// products proceeds right to left.
class AmalgamGroup {
 public:
  static std::shared_ptr<const AmalgamGroup> build(AmalgamGroupSpec spec);

  const std::string& name() const { return name_; }
  const GroupTable& group(int factor) const;
  int h_size() const { return static_cast<int>(h_elems_[0].size()); }
  /// Element id of the h-th subgroup member inside the given factor.
  int h_elem(int factor, int h) const;
  /// Subgroup index of a factor element, or -1.
  int h_index(int factor, int elem) const;
  int h_mul(int a, int b) const;

  const std::vector<int>& transversal(int factor) const;
  /// Number of non-identity transversal representatives = [G_i : H] - 1.
  int branching(int factor) const {
    return static_cast<int>(transversal(factor).size()) - 1;
  }

  struct TH {
    int t_pos;  // position in the factor's transversal; 0 is the identity
    int h;      // subgroup index
  };
  /// x = transversal[t_pos] * h, precomputed for every factor element.
  TH decompose(int factor, int elem) const;

  struct Letter {
    int factor;  // 1 or 2
    int t_pos;   // >= 1
    friend auto operator<=>(const Letter&, const Letter&) = default;
  };
  struct NF {
    std::vector<Letter> word;
    int h = 0;
    friend bool operator==(const NF&, const NF&) = default;
  };

  /// Left multiplication of a normal form by one factor element.
  NF leftmul(int factor, int elem, NF nf) const;
  /// Normal form of a product of (factor, element) letters.
  NF word_to_nf(const std::vector<std::pair<int, int>>& letters) const;

  std::string letter_name(Letter let) const;

 private:
  AmalgamGroup() = default;

  std::pair<std::vector<Letter>, int> push_h(int h, const std::vector<Letter>& word,
                                             int h0) const;

  std::string name_;
  GroupTable g1_{GroupTable::cyclic(1)};
  GroupTable g2_{GroupTable::cyclic(1)};
  std::vector<int> h_elems_[2];            // subgroup members per factor
  std::vector<int> h_index_[2];            // factor element -> subgroup index or -1
  std::vector<std::vector<int>> h_mul_;    // subgroup multiplication
  std::vector<int> transversal_[2];
  std::vector<TH> decomp_[2];
};

}  // namespace qka
