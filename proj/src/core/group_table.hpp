#pragma once

#include <string>
#include <vector>

#include "core/common.hpp"

namespace qka {

/// Finite group given by a full multiplication table over named elements.
/// `make` validates the group axioms and rejects broken tables with a
/// witness; `unchecked` skips validation (negative-control tests feed
/// corrupted tables through the axiom checker).
class GroupTable {
 public:
  static GroupTable make(std::vector<std::string> names,
                         std::vector<std::vector<int>> prod);
  static GroupTable unchecked(std::vector<std::string> names,
                              std::vector<std::vector<int>> prod);

  static GroupTable cyclic(int n);      // e, c1, ..., c{n-1}
  static GroupTable symmetric3();       // e, r, r2, s, sr, sr2

  int size() const { return static_cast<int>(names_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return prod_[a][b]; }
  int inverse(int a) const;             // -1 when the table has none
  const std::string& name(int a) const { return names_[a]; }
  int index_of(std::string_view name) const;

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& products() const { return prod_; }

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  GroupTable(std::vector<std::string> names, std::vector<std::vector<int>> prod,
             int identity);

  std::vector<std::string> names_;
  std::vector<std::vector<int>> prod_;
  int identity_ = 0;
};

}  // namespace qka
