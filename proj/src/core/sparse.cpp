#include "core/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qka {

void IntMat::add(int r, int c, i64 v) {
  if (v == 0) return;
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error("IntMat: index out of range");
  auto [it, inserted] = a.try_emplace({r, c}, 0);
  it->second += v;
  if (it->second == 0) a.erase(it);
}

i64 IntMat::at(int r, int c) const {
  auto it = a.find({r, c});
  return it == a.end() ? 0 : it->second;
}

i64 IntMat::max_abs() const {
  i64 m = 0;
  for (const auto& [rc, v] : a) m = std::max(m, v < 0 ? -v : v);
  return m;
}

IntMat IntMat::mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw Error("IntMat: dimension mismatch in product");
  IntMat out(x.rows, y.cols);
  // group x by column for sparse accumulation
  std::map<int, std::vector<std::pair<int, i64>>> by_col;
  for (const auto& [rc, v] : x.a) by_col[rc.second].push_back({rc.first, v});
  for (const auto& [rc, v] : y.a) {
    auto it = by_col.find(rc.first);
    if (it == by_col.end()) continue;
    for (const auto& [r, xv] : it->second) out.add(r, rc.second, xv * v);
  }
  return out;
}

IntMat IntMat::sub(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) {
    throw Error("IntMat: dimension mismatch in difference");
  }
  IntMat out = x;
  for (const auto& [rc, v] : y.a) out.add(rc.first, rc.second, -v);
  return out;
}

int IntMat::rank() const {
  if (a.empty()) return 0;
  // rank is unchanged by dropping zero rows and columns
  std::set<int> rset, cset;
  for (const auto& [rc, v] : a) {
    rset.insert(rc.first);
    cset.insert(rc.second);
  }
  std::vector<int> rmap(rset.begin(), rset.end());
  std::vector<int> cmap(cset.begin(), cset.end());
  const int n = static_cast<int>(rmap.size());
  const int m = static_cast<int>(cmap.size());
  std::vector<std::vector<__int128>> d(n, std::vector<__int128>(m, 0));
  {
    std::map<int, int> rpos, cpos;
    for (int i = 0; i < n; ++i) rpos[rmap[i]] = i;
    for (int j = 0; j < m; ++j) cpos[cmap[j]] = j;
    for (const auto& [rc, v] : a) d[rpos[rc.first]][cpos[rc.second]] = v;
  }
  // Bareiss fraction-free elimination
  int rank = 0;
  __int128 prev = 1;
  for (int col = 0; col < m && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (d[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(d[rank], d[pivot]);
    const __int128 p = d[rank][col];
    for (int r = rank + 1; r < n; ++r) {
      for (int c = col + 1; c < m; ++c) {
        d[r][c] = (p * d[r][c] - d[r][col] * d[rank][c]) / prev;
        const __int128 lim = (__int128)1 << 100;
        if (d[r][c] > lim || d[r][c] < -lim) {
          throw Error("IntMat: rank elimination overflow");
        }
      }
      d[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

void CplxMat::add(int r, int c, std::complex<double> v) {
  if (v == 0.0) return;
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error("CplxMat: index out of range");
  a[{r, c}] += v;
}

CplxMat CplxMat::mul(const CplxMat& x, const CplxMat& y) {
  if (x.cols != y.rows) throw Error("CplxMat: dimension mismatch in product");
  CplxMat out(x.rows, y.cols);
  std::map<int, std::vector<std::pair<int, std::complex<double>>>> by_col;
  for (const auto& [rc, v] : x.a) by_col[rc.second].push_back({rc.first, v});
  for (const auto& [rc, v] : y.a) {
    auto it = by_col.find(rc.first);
    if (it == by_col.end()) continue;
    for (const auto& [r, xv] : it->second) out.a[{r, rc.second}] += xv * v;
  }
  return out;
}

CplxMat CplxMat::adjoint() const {
  CplxMat out(cols, rows);
  for (const auto& [rc, v] : a) out.a[{rc.second, rc.first}] += std::conj(v);
  return out;
}

double CplxMat::max_abs_dev_from_identity() const {
  if (rows != cols) throw Error("CplxMat: identity deviation needs a square matrix");
  double dev = 0.0;
  std::set<int> seen;
  for (const auto& [rc, v] : a) {
    const double want = rc.first == rc.second ? 1.0 : 0.0;
    dev = std::max(dev, std::abs(v - want));
    if (rc.first == rc.second) seen.insert(rc.first);
  }
  if (static_cast<int>(seen.size()) != rows) dev = std::max(dev, 1.0);
  return dev;
}

PartialMap PartialMap::identity(int n) {
  PartialMap p(n, n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

PartialMap PartialMap::compose(const PartialMap& f, const PartialMap& g) {
  if (f.cols != g.rows) throw Error("PartialMap: dimension mismatch in composition");
  PartialMap out(f.rows, g.cols);
  for (int c = 0; c < g.cols; ++c) {
    const int mid = g.img[c];
    if (mid == kUndef) {
      out.img[c] = kUndef;
    } else if (mid == kZero) {
      out.img[c] = kZero;
    } else {
      out.img[c] = f.img[mid];
    }
  }
  return out;
}

IntMat PartialMap::to_int_mat() const {
  IntMat out(rows, cols);
  for (int c = 0; c < cols; ++c) {
    if (img[c] >= 0) out.add(img[c], c, 1);
  }
  return out;
}

}  // namespace qka
