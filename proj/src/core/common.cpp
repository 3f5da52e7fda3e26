#include "core/common.hpp"

#include <cstdio>

namespace qka {

u64 fnv1a64(std::string_view data) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(u64 v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string fmt_double(double v) {
  if (v == static_cast<double>(static_cast<i64>(v)) && v > -1e15 && v < 1e15) {
    return std::to_string(static_cast<i64>(v));
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace qka
