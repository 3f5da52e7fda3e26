#pragma once

// Test-side oracles, independent of the implementation paths they check.

#include <utility>
#include <vector>

#include "core/group_table.hpp"

namespace qka::test {

/// Reduced words in the free product of two finite groups: concatenate,
/// multiply adjacent letters of equal factor, drop identities, repeat.
class FreeProductWords {
 public:
  using Word = std::vector<std::pair<int, int>>;  // (factor, element id)

  FreeProductWords(GroupTable g1, GroupTable g2)
      : tables_{std::move(g1), std::move(g2)} {}

  const GroupTable& table(int factor) const { return tables_[factor - 1]; }

  Word reduce(const Word& input) const {
    Word stack;
    for (const auto& letter : input) push(stack, letter);
    return stack;
  }

  Word mul(const Word& a, const Word& b) const {
    Word out = a;
    for (const auto& letter : b) push(out, letter);
    return out;
  }

 private:
  void push(Word& stack, std::pair<int, int> letter) const {
    auto [factor, elem] = letter;
    const GroupTable& gt = table(factor);
    if (elem == gt.identity()) return;
    if (!stack.empty() && stack.back().first == factor) {
      const int prod = gt.mul(stack.back().second, elem);
      stack.pop_back();
      if (prod != gt.identity()) push(stack, {factor, prod});
      return;
    }
    stack.push_back({factor, elem});
  }

  GroupTable tables_[2];
};

}  // namespace qka::test
