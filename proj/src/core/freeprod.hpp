#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "core/fusion.hpp"

namespace qka {

/// One letter of an alternating word: a nontrivial irreducible of one of
/// the two factors.
struct AltLetter {
  int factor = 1;  // 1 or 2
  Label label;

  friend auto operator<=>(const AltLetter&, const AltLetter&) = default;
};

/// Alternating word over two factors: no letter is a unit, adjacent letters
/// come from distinct factors. The empty word is the vacuum class.
class AltWord {
 public:
  AltWord() = default;

  /// Validates alternation, nontriviality and factor/ring agreement.
  static AltWord checked(const FusionRing& r1, const FusionRing& r2,
                         std::vector<AltLetter> letters);
  /// For internal construction where the invariant is maintained by the caller.
  static AltWord raw(std::vector<AltLetter> letters);

  const std::vector<AltLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // length-lexicographic, factor-1 letters before factor-2
  friend std::strong_ordering operator<=>(const AltWord& a, const AltWord& b) {
    if (a.letters_.size() != b.letters_.size()) {
      return a.letters_.size() <=> b.letters_.size();
    }
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const AltWord&, const AltWord&) = default;

 private:
  std::vector<AltLetter> letters_;
};

/// Finitely supported multiplicity map over alternating words.
class WordElement {
 public:
  bool empty() const { return terms_.empty(); }
  i64 mult(const AltWord& w) const;
  void add(const AltWord& w, i64 delta);
  void add(const WordElement& other, i64 scale = 1);
  const std::map<AltWord, i64>& terms() const { return terms_; }

  friend bool operator==(const WordElement&, const WordElement&) = default;

 private:
  std::map<AltWord, i64> terms_;
};

/// All alternating words of length <= max_len whose letters have degree
/// <= degree_bound; deterministic (length, then lexicographic) order.
std::vector<AltWord> enumerate_words(const FusionRing& r1, const FusionRing& r2,
                                     int max_len, int degree_bound);

/// Keeps the empty word and the words whose last letter is not from factor i.
std::vector<AltWord> words_not_ending(const std::vector<AltWord>& words, int factor);

/// Free-product fusion of two alternating words.
WordElement free_fuse(const FusionRing& r1, const FusionRing& r2,
                      const AltWord& a, const AltWord& b);

/// Bilinear extension to word elements.
WordElement free_fuse(const FusionRing& r1, const FusionRing& r2,
                      const WordElement& x, const WordElement& y);

/// Reversed word with letterwise conjugation; an involution.
AltWord free_conj(const FusionRing& r1, const FusionRing& r2, const AltWord& a);

double word_dim(const FusionRing& r1, const FusionRing& r2, const AltWord& a);

bool word_is_valid(const FusionRing& r1, const FusionRing& r2, const AltWord& a);

std::string word_to_string(const FusionRing& r1, const FusionRing& r2,
                           const AltWord& a);

}  // namespace qka
