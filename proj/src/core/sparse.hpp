#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "core/common.hpp"

namespace qka {

/// Sparse integer matrix with explicit dimensions and deduplicated
/// coordinates; the exact backbone of every operator identity checked here.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, i64> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c) {}

  void add(int r, int c, i64 v);
  i64 at(int r, int c) const;
  int nnz() const { return static_cast<int>(a.size()); }
  i64 max_abs() const;

  static IntMat mul(const IntMat& x, const IntMat& y);
  static IntMat sub(const IntMat& x, const IntMat& y);

  /// Exact rank by fraction-free elimination on the nonzero block.
  int rank() const;
};

/// Sparse complex matrix; only the homotopy path uses floating entries.
struct CplxMat {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, std::complex<double>> a;

  CplxMat() = default;
  CplxMat(int r, int c) : rows(r), cols(c) {}

  void add(int r, int c, std::complex<double> v);
  static CplxMat mul(const CplxMat& x, const CplxMat& y);
  CplxMat adjoint() const;
  /// max |entry - identity| over the full square.
  double max_abs_dev_from_identity() const;
};

/// Partial basis map: each column goes to one row, to zero, or is undefined
/// because the image leaves the truncation. Composition propagates
/// undefinedness; these are the permutation parts of all tree operators.
struct PartialMap {
  static constexpr int kZero = -1;
  static constexpr int kUndef = -2;

  int rows = 0;
  int cols = 0;
  std::vector<int> img;  // row index, kZero or kUndef

  PartialMap() = default;
  PartialMap(int r, int c) : rows(r), cols(c), img(c, kUndef) {}

  static PartialMap identity(int n);
  static PartialMap compose(const PartialMap& f, const PartialMap& g);  // f after g
  bool defined(int c) const { return img[c] != kUndef; }

  IntMat to_int_mat() const;  // undefined columns become zero columns
};

}  // namespace qka
