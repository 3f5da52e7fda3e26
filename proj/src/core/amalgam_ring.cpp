#include "core/amalgam_ring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qka {

Label amalgam_label(const FusionRing& ring, i64 k, i64 l) {
  Label lab{ring.id(), k, l};
  if (!ring.contains(lab)) throw Error("amalgam ring: invalid label");
  return lab;
}

Label amalgam_embed(const FusionRing& ring, int factor, i64 l) {
  if (factor != 1 && factor != 2) throw Error("amalgam embed: factor must be 1 or 2");
  if (l < 0) throw Error("amalgam embed: negative index");
  if (factor == 1) return amalgam_label(ring, 0, l);
  return amalgam_label(ring, l % 2 == 0 ? 0 : -1, l);
}

std::vector<std::vector<i64>> fundamental_power_multiplicities(int nmax) {
  std::vector<std::vector<i64>> c(nmax + 1);
  c[0] = {1};
  for (int n = 1; n <= nmax; ++n) {
    c[n].assign(n + 1, 0);
    for (int t = 0; t < n; ++t) {
      const i64 m = c[n - 1][t];
      if (m == 0) continue;
      // v_t x v_1 = v_{t-1} + v_{t+1} (only v_1 for t = 0)
      if (t >= 1) c[n][t - 1] += m;
      c[n][t + 1] += m;
    }
  }
  return c;
}

namespace {

void decomp_add(PairDecomp& d, std::pair<i64, i64> key, i64 delta) {
  if (delta == 0) return;
  auto [it, inserted] = d.try_emplace(key, 0);
  it->second += delta;
  if (it->second == 0) d.erase(it);
}

struct OracleCtx {
  std::vector<std::vector<i64>> c;  // fundamental power multiplicities
  std::map<std::tuple<i64, i64, i64, i64>, PairDecomp> memo;

  const PairDecomp& fuse(i64 k, i64 l, i64 k2, i64 l2) {
    auto key = std::make_tuple(k, l, k2, l2);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    PairDecomp result;
    if (l == 0 && l2 == 0) {
      // pure a-powers multiply by exponent addition
      decomp_add(result, {k + k2, 0}, 1);
    } else {
      // move a^k2 leftward through the l fundamental letters one at a time;
      // each pass inverts the power
      i64 moved = k2;
      for (i64 step = 0; step < l; ++step) moved = -moved;

      // (a^k v^{(x)l}) x (a^k2 v^{(x)l2}) = a^{k+moved} v^{(x)(l+l2)},
      // and tensor powers of the fundamental decompose by the c-table
      PairDecomp total;
      for (i64 t = 0; t <= l + l2; ++t) {
        const i64 m = c[static_cast<std::size_t>(l + l2)][static_cast<std::size_t>(t)];
        if (m != 0) decomp_add(total, {k + moved, t}, m);
      }

      // peel the lower filtration terms: both tensor powers split as the top
      // irreducible plus strictly lower ones, whose pairwise fusions are
      // known by induction
      for (i64 s = 0; s <= l; ++s) {
        for (i64 s2 = 0; s2 <= l2; ++s2) {
          if (s == l && s2 == l2) continue;
          const i64 cs = c[static_cast<std::size_t>(l)][static_cast<std::size_t>(s)];
          const i64 cs2 = c[static_cast<std::size_t>(l2)][static_cast<std::size_t>(s2)];
          const i64 m = cs * cs2;
          if (m == 0) continue;
          for (const auto& [lab, mm] : fuse(k, s, k2, s2)) {
            decomp_add(total, lab, -m * mm);
          }
        }
      }
      for (const auto& [lab, m] : total) {
        if (m < 0) {
          throw Error("amalgam oracle: negative multiplicity reached; "
                      "rewriting rules are inconsistent");
        }
      }
      result = std::move(total);
    }
    return memo.emplace(key, std::move(result)).first->second;
  }
};

}  // namespace

PairDecomp amalgam_oracle_fuse(i64 k, i64 l, i64 k2, i64 l2) {
  if (l < 0 || l2 < 0) throw Error("amalgam oracle: negative ao index");
  OracleCtx ctx;
  ctx.c = fundamental_power_multiplicities(static_cast<int>(l + l2));
  return ctx.fuse(k, l, k2, l2);
}

std::vector<std::pair<i64, i64>> embed_factor2_by_induction(int lmax) {
  std::vector<std::pair<i64, i64>> embed;
  embed.push_back({0, 0});
  if (lmax >= 1) embed.push_back({-1, 1});
  OracleCtx ctx;
  ctx.c = fundamental_power_multiplicities(lmax + 1);
  for (int l = 1; l < lmax; ++l) {
    // v_{2,1} x v_{2,l} = v_{2,l-1} + v_{2,l+1}
    PairDecomp f = ctx.fuse(embed[1].first, embed[1].second,
                            embed[static_cast<std::size_t>(l)].first,
                            embed[static_cast<std::size_t>(l)].second);
    PairDecomp remaining = f;
    auto prev = embed[static_cast<std::size_t>(l - 1)];
    auto it = remaining.find(prev);
    if (it == remaining.end() || it->second != 1) {
      throw Error("amalgam embed induction: expected v_{2," + std::to_string(l - 1) +
                  "} inside v_{2,1} x v_{2," + std::to_string(l) + "}");
    }
    remaining.erase(it);
    if (remaining.size() != 1 || remaining.begin()->second != 1) {
      throw Error("amalgam embed induction: fusion at l=" + std::to_string(l) +
                  " is not a two-term decomposition");
    }
    embed.push_back(remaining.begin()->first);
  }
  return embed;
}

DimMultVerdict check_dim_mult_claim(const std::vector<std::pair<int, i64>>& word,
                                    double d1) {
  DimMultVerdict verdict;
  FusionRing ring = make_amalgam_ring(d1);
  FusionRing ao = make_ao(d1);

  FusionElement mixed(ring.id());
  mixed.add(ring.unit(), 1);
  FusionElement plain(ao.id());
  plain.add(ao.unit(), 1);
  for (const auto& [factor, index] : word) {
    if (index < 1) throw Error("dim/mult claim: letter indices must be >= 1");
    FusionElement letter(ring.id());
    letter.add(amalgam_embed(ring, factor, index), 1);
    mixed = ring.fuse(mixed, letter);
    FusionElement vletter(ao.id());
    vletter.add(Label{ao.id(), index, 0}, 1);
    plain = ao.fuse(plain, vletter);
  }

  std::vector<std::pair<double, i64>> left, right;
  for (const auto& [lab, m] : mixed.terms()) left.push_back({ring.dim(lab), m});
  for (const auto& [lab, m] : plain.terms()) right.push_back({ao.dim(lab), m});
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (left != right) {
    verdict.equal = false;
    std::string w = "word";
    for (const auto& [f, i] : word) {
      w += " (" + std::to_string(f) + "," + std::to_string(i) + ")";
    }
    verdict.witness = w + ": mixed expansion " + element_to_string(ring, mixed) +
                      " vs plain " + element_to_string(ao, plain);
  }
  return verdict;
}

namespace {

PairDecomp closed_form_fuse(const FusionRing& ring, i64 k, i64 l, i64 k2, i64 l2) {
  PairDecomp out;
  FusionElement f = ring.fuse(amalgam_label(ring, k, l), amalgam_label(ring, k2, l2));
  for (const auto& [lab, m] : f.terms()) out[{lab.k, lab.l}] = m;
  return out;
}

}  // namespace

AmalgamCheckReport run_amalgam_check(double d1, i64 kmax, i64 lmax, int wordlen,
                                     i64 index_max) {
  AmalgamCheckReport rep;
  rep.d1 = d1;
  rep.kmax = kmax;
  rep.lmax = lmax;
  rep.wordlen = wordlen;
  rep.index_max = index_max;
  auto witness = [&](const std::string& w) {
    if (rep.witnesses.size() < 50) rep.witnesses.push_back(w);
  };

  FusionRing ring = make_amalgam_ring(d1);

  // 1. closed form against the rewriting oracle over the whole box,
  //    including the dimension count of every oracle decomposition
  {
    OracleCtx ctx;
    ctx.c = fundamental_power_multiplicities(static_cast<int>(2 * lmax));
    bool ok = true;
    auto dim_of = [&](i64 l) {
      double prev = 0.0, cur = 1.0;
      for (i64 i = 0; i < l; ++i) {
        double next = d1 * cur - prev;
        prev = cur;
        cur = next;
      }
      return cur;
    };
    for (i64 k = -kmax; k <= kmax; ++k) {
      for (i64 l = 0; l <= lmax; ++l) {
        for (i64 k2 = -kmax; k2 <= kmax; ++k2) {
          for (i64 l2 = 0; l2 <= lmax; ++l2) {
            const PairDecomp& oracle = ctx.fuse(k, l, k2, l2);
            PairDecomp closed = closed_form_fuse(ring, k, l, k2, l2);
            ++rep.oracle_pairs;
            if (oracle != closed) {
              ok = false;
              witness("fuse((" + std::to_string(k) + "," + std::to_string(l) +
                      "),(" + std::to_string(k2) + "," + std::to_string(l2) +
                      ")): oracle and closed form disagree");
            }
            double total = 0.0;
            for (const auto& [lab, m] : oracle) {
              total += static_cast<double>(m) * dim_of(lab.second);
            }
            double expect = dim_of(l) * dim_of(l2);
            if (std::abs(total - expect) > kDimRelTol * std::max(1.0, std::abs(expect))) {
              ok = false;
              witness("oracle dimension count fails at ((" + std::to_string(k) + "," +
                      std::to_string(l) + "),(" + std::to_string(k2) + "," +
                      std::to_string(l2) + "))");
            }
          }
        }
      }
    }
    rep.closed_form_matches_oracle = ok;
  }

  // 2. the defining relation: (0,1) x (1,0) = {(-1,1):1}
  {
    PairDecomp oracle = amalgam_oracle_fuse(0, 1, 1, 0);
    PairDecomp closed = closed_form_fuse(ring, 0, 1, 1, 0);
    PairDecomp expect;
    expect[{-1, 1}] = 1;
    rep.relation_ok = oracle == expect && closed == expect;
    if (!rep.relation_ok) witness("v1 x a relation does not reduce to a^-1*v1");
  }

  // 3. conjugation sign rule via unit multiplicity, against the oracle
  {
    bool ok = true;
    for (i64 k = -kmax; k <= kmax && ok; ++k) {
      for (i64 l = 0; l <= lmax && ok; ++l) {
        Label lab = amalgam_label(ring, k, l);
        Label cj = ring.conj(lab);
        PairDecomp f = amalgam_oracle_fuse(cj.k, cj.l, k, l);
        auto it = f.find({0, 0});
        if (it == f.end() || it->second != 1) {
          ok = false;
          witness("conj(" + ring.label_name(lab) + ") = " + ring.label_name(cj) +
                  " fails the unit-multiplicity test");
        }
        if (ring.conj(cj) != lab) {
          ok = false;
          witness("conj not involutive at " + ring.label_name(lab));
        }
        // no other candidate in the box may pair to the unit
        for (i64 k2 = -kmax; k2 <= kmax; ++k2) {
          for (i64 l2 = 0; l2 <= lmax; ++l2) {
            if (k2 == cj.k && l2 == cj.l) continue;
            PairDecomp g = amalgam_oracle_fuse(k2, l2, k, l);
            if (g.count({0, 0})) {
              ok = false;
              witness("unexpected unit in (" + std::to_string(k2) + "," +
                      std::to_string(l2) + ") x " + ring.label_name(lab));
            }
          }
        }
      }
    }
    rep.conj_ok = ok;
  }

  // 4. factor-2 embedding: the induction and the closed form must agree
  {
    bool ok = true;
    auto inducted = embed_factor2_by_induction(static_cast<int>(lmax));
    for (i64 l = 0; l <= lmax; ++l) {
      Label closed = amalgam_embed(ring, 2, l);
      auto& ind = inducted[static_cast<std::size_t>(l)];
      if (closed.k != ind.first || closed.l != ind.second) {
        ok = false;
        witness("embed(2," + std::to_string(l) + "): induction gives (" +
                std::to_string(ind.first) + "," + std::to_string(ind.second) +
                "), closed form gives " + ring.label_name(closed));
      }
      if (amalgam_embed(ring, 1, l) != amalgam_label(ring, 0, l)) {
        ok = false;
        witness("embed(1," + std::to_string(l) + ") is not (0,l)");
      }
    }
    // shared even part: both factors agree on even indices
    for (i64 l = 0; l <= lmax; l += 2) {
      if (amalgam_embed(ring, 1, l) != amalgam_embed(ring, 2, l)) {
        ok = false;
        witness("factor embeddings disagree on even index " + std::to_string(l));
      }
    }
    // multiplicativity of the factor-2 embedding against ao fusion
    FusionRing ao = make_ao(d1);
    for (i64 l = 0; l <= lmax && ok; ++l) {
      for (i64 l2 = 0; l2 <= lmax && ok; ++l2) {
        FusionElement image = ring.fuse(amalgam_embed(ring, 2, l),
                                        amalgam_embed(ring, 2, l2));
        FusionElement plain = ao.fuse(Label{ao.id(), l, 0}, Label{ao.id(), l2, 0});
        FusionElement expect(ring.id());
        for (const auto& [lab, m] : plain.terms()) {
          expect.add(amalgam_embed(ring, 2, lab.k), m);
        }
        if (image != expect) {
          ok = false;
          witness("embed(2,-) not multiplicative at (" + std::to_string(l) + "," +
                  std::to_string(l2) + ")");
        }
      }
    }
    rep.embed_ok = ok;
  }

  // 5. based-ring axioms over the box (associativity, Frobenius, unit
  //    multiplicity), exhaustive
  {
    bool ok = true;
    std::vector<Label> box;
    for (i64 k = -kmax; k <= kmax; ++k) {
      for (i64 l = 0; l <= lmax; ++l) box.push_back(amalgam_label(ring, k, l));
    }
    const Label one = ring.unit();
    for (const Label& r : box) {
      for (const Label& s : box) {
        FusionElement rs = ring.fuse(r, s);
        const i64 n1 = rs.mult(one);
        const i64 want = (s == ring.conj(r)) ? 1 : 0;
        if (n1 != want) {
          ok = false;
          witness("unit multiplicity fails at " + ring.label_name(r) + " x " +
                  ring.label_name(s));
        }
        for (const auto& [t, m] : rs.terms()) {
          if (ring.fuse(ring.conj(r), t).mult(s) != m ||
              ring.fuse(t, ring.conj(s)).mult(r) != m) {
            ok = false;
            witness("Frobenius fails at " + ring.label_name(r) + " x " +
                    ring.label_name(s) + " at " + ring.label_name(t));
          }
        }
        for (const Label& t : box) {
          FusionElement te(ring.id());
          te.add(t, 1);
          FusionElement re(ring.id());
          re.add(r, 1);
          if (ring.fuse(rs, te) != ring.fuse(re, ring.fuse(s, t))) {
            ok = false;
            witness("associativity fails at (" + ring.label_name(r) + "," +
                    ring.label_name(s) + "," + ring.label_name(t) + ")");
          }
          ++rep.box_triples;
        }
      }
    }
    rep.box_axioms_ok = ok;
  }

  // 6. dimension/multiplicity claim over all mixed words
  {
    bool ok = true;
    std::vector<std::vector<std::pair<int, i64>>> frontier = {{}};
    for (int len = 1; len <= wordlen; ++len) {
      std::vector<std::vector<std::pair<int, i64>>> next;
      for (const auto& w : frontier) {
        for (int f : {1, 2}) {
          for (i64 idx = 1; idx <= index_max; ++idx) {
            auto ext = w;
            ext.push_back({f, idx});
            next.push_back(ext);
          }
        }
      }
      for (const auto& w : next) {
        DimMultVerdict v = check_dim_mult_claim(w, d1);
        ++rep.words_checked;
        if (!v.equal) {
          ok = false;
          witness(v.witness);
        }
      }
      frontier = std::move(next);
    }
    rep.dim_mult_ok = ok;
  }

  return rep;
}

}  // namespace qka
