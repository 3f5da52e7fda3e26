#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/fusion.hpp"

namespace qka {

// The amalgam ring over labels (k, l) = a-power and ao index. Its closed-form
// rules (see make_amalgam_ring) are derived, not axiomatic: everything below
// exists to re-derive them mechanically from the three generator rule
// families (a-power addition, the a-past-v commutation, ao fusion of the
// fundamental) and compare.

Label amalgam_label(const FusionRing& ring, i64 k, i64 l);

/// Image of the factor-i irreducible of index l inside the amalgam ring.
Label amalgam_embed(const FusionRing& ring, int factor, i64 l);

using PairDecomp = std::map<std::pair<i64, i64>, i64>;

/// Multiplicity of index t inside the n-fold power of the fundamental,
/// for n = 0..nmax, by iterated fundamental fusion.
std::vector<std::vector<i64>> fundamental_power_multiplicities(int nmax);

/// Rewriting oracle: decomposition of (a^k v_l) x (a^k2 v_l2) computed by
/// expanding both sides through tensor powers of the fundamental and
/// peeling the filtration, never consulting the closed form.
PairDecomp amalgam_oracle_fuse(i64 k, i64 l, i64 k2, i64 l2);

/// Factor-2 embeddings (k, l) for l = 0..lmax obtained by the fusion
/// induction v_{2,1} x v_{2,l} = v_{2,l-1} + v_{2,l+1} over the oracle.
std::vector<std::pair<i64, i64>> embed_factor2_by_induction(int lmax);

struct DimMultVerdict {
  bool equal = true;
  std::string witness;
};

/// Expands a mixed word of factor letters through the amalgam ring and the
/// corresponding all-factor-1 word through ao(d1), then compares the
/// multisets of (dimension, multiplicity) pairs.
DimMultVerdict check_dim_mult_claim(const std::vector<std::pair<int, i64>>& word,
                                    double d1);

struct AmalgamCheckReport {
  double d1 = 2.0;
  i64 kmax = 3;
  i64 lmax = 4;
  int wordlen = 4;
  i64 index_max = 3;

  bool closed_form_matches_oracle = false;
  u64 oracle_pairs = 0;
  bool relation_ok = false;          // v_{1,1} x a = a^{-1} x v_{1,1}
  bool conj_ok = false;              // sign rule validated by unit multiplicity
  bool embed_ok = false;             // induction matches the closed form
  bool box_axioms_ok = false;        // associativity/Frobenius/unit over the box
  u64 box_triples = 0;
  bool dim_mult_ok = false;          // mixed words vs all-factor-1 words
  u64 words_checked = 0;
  std::vector<std::string> witnesses;

  bool ok() const {
    return closed_form_matches_oracle && relation_ok && conj_ok && embed_ok &&
           box_axioms_ok && dim_mult_ok;
  }
};

/// Full derivation battery for the closed form; run before the closed form
/// is trusted anywhere else.
AmalgamCheckReport run_amalgam_check(double d1, i64 kmax, i64 lmax, int wordlen,
                                     i64 index_max);

}  // namespace qka
