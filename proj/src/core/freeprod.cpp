#include "core/freeprod.hpp"

#include <algorithm>

namespace qka {

namespace {

const FusionRing& factor_ring(const FusionRing& r1, const FusionRing& r2, int factor) {
  if (factor == 1) return r1;
  if (factor == 2) return r2;
  throw Error("alternating word: factor index must be 1 or 2");
}

void validate_word(const FusionRing& r1, const FusionRing& r2,
                   std::span<const AltLetter> letters) {
  int prev_factor = 0;
  for (const AltLetter& let : letters) {
    const FusionRing& ring = factor_ring(r1, r2, let.factor);
    if (!ring.contains(let.label)) {
      throw Error("alternating word: letter does not belong to factor " +
                  std::to_string(let.factor) + " ring " + ring.name());
    }
    if (let.label == ring.unit()) {
      throw Error("alternating word: trivial letter");
    }
    if (let.factor == prev_factor) {
      throw Error("alternating word: adjacent letters from the same factor");
    }
    prev_factor = let.factor;
  }
}

}  // namespace

AltWord AltWord::checked(const FusionRing& r1, const FusionRing& r2,
                         std::vector<AltLetter> letters) {
  validate_word(r1, r2, letters);
  AltWord w;
  w.letters_ = std::move(letters);
  return w;
}

AltWord AltWord::raw(std::vector<AltLetter> letters) {
  AltWord w;
  w.letters_ = std::move(letters);
  return w;
}

i64 WordElement::mult(const AltWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void WordElement::add(const AltWord& w, i64 delta) {
  if (delta == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, 0);
  it->second += delta;
  if (it->second == 0) terms_.erase(it);
}

void WordElement::add(const WordElement& other, i64 scale) {
  for (const auto& [w, m] : other.terms()) add(w, m * scale);
}

std::vector<AltWord> enumerate_words(const FusionRing& r1, const FusionRing& r2,
                                     int max_len, int degree_bound) {
  std::vector<std::vector<AltLetter>> letters(3);
  for (int f : {1, 2}) {
    const FusionRing& ring = factor_ring(r1, r2, f);
    for (const Label& lab : ring.labels_up_to(degree_bound)) {
      if (lab != ring.unit()) letters[f].push_back(AltLetter{f, lab});
    }
  }
  std::vector<AltWord> out;
  std::vector<std::vector<AltLetter>> frontier = {{}};
  out.push_back(AltWord());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<AltLetter>> next;
    for (const auto& w : frontier) {
      int last = w.empty() ? 0 : w.back().factor;
      for (int f : {1, 2}) {
        if (f == last) continue;
        for (const AltLetter& let : letters[f]) {
          auto ext = w;
          ext.push_back(let);
          next.push_back(ext);
        }
      }
    }
    for (auto& w : next) out.push_back(AltWord::raw(w));
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AltWord> words_not_ending(const std::vector<AltWord>& words, int factor) {
  std::vector<AltWord> out;
  for (const AltWord& w : words) {
    if (w.empty() || w.letters().back().factor != factor) out.push_back(w);
  }
  return out;
}

namespace {

WordElement fuse_rec(const FusionRing& r1, const FusionRing& r2,
                     std::span<const AltLetter> a, std::span<const AltLetter> b) {
  WordElement out;
  if (a.empty() || b.empty()) {
    std::vector<AltLetter> w(a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    out.add(AltWord::raw(std::move(w)), 1);
    return out;
  }
  const AltLetter& last = a.back();
  const AltLetter& first = b.front();
  if (last.factor != first.factor) {
    std::vector<AltLetter> w(a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    out.add(AltWord::raw(std::move(w)), 1);
    return out;
  }
  const FusionRing& ring = factor_ring(r1, r2, last.factor);
  const Label one = ring.unit();
  FusionElement f = ring.fuse(last.label, first.label);
  for (const auto& [c, m] : f.terms()) {
    if (c == one) continue;
    std::vector<AltLetter> w(a.begin(), a.end() - 1);
    w.push_back(AltLetter{last.factor, c});
    w.insert(w.end(), b.begin() + 1, b.end());
    out.add(AltWord::raw(std::move(w)), m);
  }
  // the trivial component appears exactly when the letters are conjugate,
  // with multiplicity one, and contributes the fusion of the stumps
  if (first.label == ring.conj(last.label)) {
    out.add(fuse_rec(r1, r2, a.subspan(0, a.size() - 1), b.subspan(1)), 1);
  }
  return out;
}

}  // namespace

WordElement free_fuse(const FusionRing& r1, const FusionRing& r2,
                      const AltWord& a, const AltWord& b) {
  validate_word(r1, r2, a.letters());
  validate_word(r1, r2, b.letters());
  return fuse_rec(r1, r2, a.letters(), b.letters());
}

WordElement free_fuse(const FusionRing& r1, const FusionRing& r2,
                      const WordElement& x, const WordElement& y) {
  WordElement out;
  for (const auto& [a, ma] : x.terms()) {
    for (const auto& [b, mb] : y.terms()) {
      out.add(free_fuse(r1, r2, a, b), ma * mb);
    }
  }
  return out;
}

AltWord free_conj(const FusionRing& r1, const FusionRing& r2, const AltWord& a) {
  validate_word(r1, r2, a.letters());
  std::vector<AltLetter> out;
  out.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    const FusionRing& ring = factor_ring(r1, r2, it->factor);
    out.push_back(AltLetter{it->factor, ring.conj(it->label)});
  }
  return AltWord::raw(std::move(out));
}

double word_dim(const FusionRing& r1, const FusionRing& r2, const AltWord& a) {
  double d = 1.0;
  for (const AltLetter& let : a.letters()) {
    d *= factor_ring(r1, r2, let.factor).dim(let.label);
  }
  return d;
}

bool word_is_valid(const FusionRing& r1, const FusionRing& r2, const AltWord& a) {
  try {
    validate_word(r1, r2, a.letters());
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string word_to_string(const FusionRing& r1, const FusionRing& r2,
                           const AltWord& a) {
  std::string out = "[";
  bool first = true;
  for (const AltLetter& let : a.letters()) {
    if (!first) out += " ";
    first = false;
    out += std::to_string(let.factor) + ":" +
           factor_ring(r1, r2, let.factor).label_name(let.label);
  }
  out += "]";
  return out;
}

}  // namespace qka
