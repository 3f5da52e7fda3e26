#include "core/group_table.hpp"

#include <algorithm>

namespace qka {

namespace {

int find_identity(const std::vector<std::vector<int>>& prod) {
  const int n = static_cast<int>(prod.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = prod[e][x] == x && prod[x][e] == x;
    }
    if (ok) return e;
  }
  return -1;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::string> names,
                       std::vector<std::vector<int>> prod, int identity)
    : names_(std::move(names)), prod_(std::move(prod)), identity_(identity) {}

GroupTable GroupTable::unchecked(std::vector<std::string> names,
                                 std::vector<std::vector<int>> prod) {
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(prod.size()) != n) throw Error("group table: row count mismatch");
  for (const auto& row : prod) {
    if (static_cast<int>(row.size()) != n) throw Error("group table: column count mismatch");
    for (int v : row) {
      if (v < 0 || v >= n) throw Error("group table: product index out of range");
    }
  }
  int e = find_identity(prod);
  if (e < 0) e = 0;  // tolerated for corrupted test tables
  return GroupTable(std::move(names), std::move(prod), e);
}

GroupTable GroupTable::make(std::vector<std::string> names,
                            std::vector<std::vector<int>> prod) {
  GroupTable g = unchecked(std::move(names), std::move(prod));
  const int n = g.size();
  if (n == 0) throw Error("group table: empty");
  {
    std::vector<std::string> sorted = g.names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("group table: duplicate element name");
    }
  }
  if (find_identity(g.prod_) < 0) throw Error("group table: no identity element");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const int ab_c = g.mul(g.mul(a, b), c);
        const int a_bc = g.mul(a, g.mul(b, c));
        if (ab_c != a_bc) {
          throw Error("group table: associativity fails at (" + g.name(a) + "," +
                      g.name(b) + "," + g.name(c) + "): (" + g.name(a) + "*" +
                      g.name(b) + ")*" + g.name(c) + "=" + g.name(ab_c) + " but " +
                      g.name(a) + "*(" + g.name(b) + "*" + g.name(c) + ")=" +
                      g.name(a_bc));
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.inverse(a) < 0) {
      throw Error("group table: element " + g.name(a) + " has no inverse");
    }
  }
  return g;
}

int GroupTable::inverse(int a) const {
  for (int x = 0; x < size(); ++x) {
    if (mul(a, x) == identity_ && mul(x, a) == identity_) return x;
  }
  return -1;
}

int GroupTable::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw Error("cyclic group: order must be >= 1");
  std::vector<std::string> names;
  names.reserve(n);
  names.emplace_back("e");
  for (int i = 1; i < n; ++i) names.push_back("c" + std::to_string(i));
  std::vector<std::vector<int>> prod(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) prod[a][b] = (a + b) % n;
  }
  return make(std::move(names), std::move(prod));
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2}; product x*y composes as x after y
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  const char* names_raw[6] = {"e", "r", "r2", "s", "sr", "sr2"};
  auto index_of_perm = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    }
    return -1;
  };
  std::vector<std::vector<int>> prod(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
      prod[a][b] = index_of_perm(comp);
    }
  }
  return make(std::vector<std::string>(names_raw, names_raw + 6), std::move(prod));
}

}  // namespace qka
