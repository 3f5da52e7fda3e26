#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qka {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Thrown on violated preconditions: invalid tables, mixed rings,
/// insufficient bounds, malformed amalgam data.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic 64-bit stream (splitmix64). Used wherever a sweep is
/// sampled instead of exhausted, so reports are reproducible per seed.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  u64 below(u64 n) { return n == 0 ? 0 : next() % n; }

 private:
  u64 state_;
};

u64 fnv1a64(std::string_view data);
std::string hex64(u64 v);

/// Stable formatting helpers; reports must be byte-identical across runs.
std::string fmt_double(double v);

}  // namespace qka
