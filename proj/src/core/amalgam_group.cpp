#include "core/amalgam_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qka {

namespace {

void check_subgroup(const GroupTable& g, const std::vector<int>& elems,
                    const std::string& where) {
  std::set<int> s(elems.begin(), elems.end());
  if (s.size() != elems.size()) {
    throw Error(where + ": repeated subgroup element");
  }
  if (!s.count(g.identity())) {
    throw Error(where + ": subgroup does not contain the identity");
  }
  for (int a : elems) {
    if (a < 0 || a >= g.size()) throw Error(where + ": element out of range");
    int inv = g.inverse(a);
    if (inv < 0 || !s.count(inv)) {
      throw Error(where + ": subgroup not closed under inverse at " + g.name(a));
    }
    for (int b : elems) {
      if (!s.count(g.mul(a, b))) {
        throw Error(where + ": subgroup not closed under product at " + g.name(a) +
                    "*" + g.name(b) + "=" + g.name(g.mul(a, b)));
      }
    }
  }
}

}  // namespace

std::shared_ptr<const AmalgamGroup> AmalgamGroup::build(AmalgamGroupSpec spec) {
  auto out = std::shared_ptr<AmalgamGroup>(new AmalgamGroup());
  AmalgamGroup& g = *out;
  g.name_ = spec.name;
  g.g1_ = std::move(spec.g1);
  g.g2_ = std::move(spec.g2);

  if (spec.ident.empty()) {
    throw Error(g.name_ + ": empty subgroup identification");
  }
  {
    std::set<int> lefts, rights;
    for (auto [a, b] : spec.ident) {
      if (!lefts.insert(a).second || !rights.insert(b).second) {
        throw Error(g.name_ + ": identification is not a bijection");
      }
    }
  }
  // canonical subgroup order: identity first, then by group1 element name
  std::sort(spec.ident.begin(), spec.ident.end(),
            [&](const std::pair<int, int>& x, const std::pair<int, int>& y) {
              const bool xe = x.first == g.g1_.identity();
              const bool ye = y.first == g.g1_.identity();
              if (xe != ye) return xe;
              return g.g1_.name(x.first) < g.g1_.name(y.first);
            });
  for (auto [a, b] : spec.ident) {
    g.h_elems_[0].push_back(a);
    g.h_elems_[1].push_back(b);
  }
  check_subgroup(g.g1_, g.h_elems_[0], g.name_ + " (group1)");
  check_subgroup(g.g2_, g.h_elems_[1], g.name_ + " (group2)");
  if (g.h_elems_[0][0] != g.g1_.identity() || g.h_elems_[1][0] != g.g2_.identity()) {
    throw Error(g.name_ + ": identification must map identity to identity");
  }

  const int hs = g.h_size();
  for (int side = 0; side < 2; ++side) {
    const GroupTable& gt = side == 0 ? g.g1_ : g.g2_;
    g.h_index_[side].assign(gt.size(), -1);
    for (int h = 0; h < hs; ++h) g.h_index_[side][g.h_elems_[side][h]] = h;
  }
  // the identification must be an isomorphism
  g.h_mul_.assign(hs, std::vector<int>(hs));
  for (int a = 0; a < hs; ++a) {
    for (int b = 0; b < hs; ++b) {
      const int p1 = g.g1_.mul(g.h_elems_[0][a], g.h_elems_[0][b]);
      const int p2 = g.g2_.mul(g.h_elems_[1][a], g.h_elems_[1][b]);
      const int h1 = g.h_index_[0][p1];
      const int h2 = g.h_index_[1][p2];
      if (h1 < 0 || h2 < 0 || h1 != h2) {
        throw Error(g.name_ + ": identification is not an isomorphism at " +
                    g.g1_.name(g.h_elems_[0][a]) + "*" +
                    g.g1_.name(g.h_elems_[0][b]));
      }
      g.h_mul_[a][b] = h1;
    }
  }

  for (int side = 0; side < 2; ++side) {
    const GroupTable& gt = side == 0 ? g.g1_ : g.g2_;
    std::vector<int>& trans =
        side == 0 ? spec.transversal1 : spec.transversal2;
    const int index = gt.size() / hs;
    if (gt.size() % hs != 0) {
      throw Error(g.name_ + ": subgroup order does not divide the group order");
    }
    // coset id per element: representative = least name in x*H
    std::vector<int> coset_rep(gt.size(), -1);
    for (int x = 0; x < gt.size(); ++x) {
      int best = -1;
      for (int h = 0; h < hs; ++h) {
        int y = gt.mul(x, g.h_elems_[side][h]);
        if (best < 0 || gt.name(y) < gt.name(best)) best = y;
      }
      coset_rep[x] = best;
    }
    if (trans.empty()) {
      std::vector<std::pair<std::string, int>> reps;
      for (int x = 0; x < gt.size(); ++x) {
        if (coset_rep[x] == x) {
          reps.push_back({gt.name(x), x});
        }
      }
      std::sort(reps.begin(), reps.end());
      trans.push_back(gt.identity());
      for (auto& [nm, x] : reps) {
        if (g.h_index_[side][x] < 0) trans.push_back(x);
      }
    } else {
      if (static_cast<int>(trans.size()) != index) {
        throw Error(g.name_ + ": transversal size must equal the subgroup index " +
                    std::to_string(index));
      }
      std::set<int> cosets;
      bool has_identity = false;
      for (int t : trans) {
        if (t < 0 || t >= gt.size()) {
          throw Error(g.name_ + ": transversal element out of range");
        }
        if (t == gt.identity()) has_identity = true;
        if (!cosets.insert(coset_rep[t]).second) {
          throw Error(g.name_ + ": transversal representatives " + gt.name(t) +
                      " collide in one coset");
        }
      }
      if (!has_identity) {
        throw Error(g.name_ + ": transversal must contain the identity");
      }
      // canonical order: identity first, the rest by element name
      std::sort(trans.begin(), trans.end(), [&](int a, int b) {
        const bool ae = a == gt.identity();
        const bool be = b == gt.identity();
        if (ae != be) return ae;
        return gt.name(a) < gt.name(b);
      });
    }
    if (static_cast<int>(trans.size()) != index) {
      throw Error(g.name_ + ": transversal does not cover all cosets");
    }
    g.transversal_[side] = trans;

    // decomposition x = t * h
    std::map<int, int> tpos_of_rep;
    for (int p = 0; p < static_cast<int>(trans.size()); ++p) {
      tpos_of_rep[coset_rep[trans[p]]] = p;
    }
    g.decomp_[side].assign(gt.size(), TH{0, 0});
    for (int x = 0; x < gt.size(); ++x) {
      auto it = tpos_of_rep.find(coset_rep[x]);
      if (it == tpos_of_rep.end()) {
        throw Error(g.name_ + ": transversal misses the coset of " + gt.name(x));
      }
      const int t = trans[it->second];
      const int tin = gt.inverse(t);
      const int h = g.h_index_[side][gt.mul(tin, x)];
      if (h < 0) {
        throw Error(g.name_ + ": decomposition failure at " + gt.name(x));
      }
      g.decomp_[side][x] = TH{it->second, h};
    }
  }
  return out;
}

const GroupTable& AmalgamGroup::group(int factor) const {
  if (factor == 1) return g1_;
  if (factor == 2) return g2_;
  throw Error("amalgam group: factor must be 1 or 2");
}

int AmalgamGroup::h_elem(int factor, int h) const { return h_elems_[factor - 1][h]; }

int AmalgamGroup::h_index(int factor, int elem) const {
  return h_index_[factor - 1][elem];
}

int AmalgamGroup::h_mul(int a, int b) const { return h_mul_[a][b]; }

const std::vector<int>& AmalgamGroup::transversal(int factor) const {
  return transversal_[factor - 1];
}

AmalgamGroup::TH AmalgamGroup::decompose(int factor, int elem) const {
  return decomp_[factor - 1][elem];
}

std::pair<std::vector<AmalgamGroup::Letter>, int> AmalgamGroup::push_h(
    int h, const std::vector<Letter>& word, int h0) const {
  std::vector<Letter> out;
  out.reserve(word.size());
  int cur = h;
  for (const Letter& let : word) {
    const GroupTable& gt = group(let.factor);
    const int x = gt.mul(h_elems_[let.factor - 1][cur],
                         transversal_[let.factor - 1][let.t_pos]);
    const TH d = decompose(let.factor, x);
    if (d.t_pos == 0) {
      throw Error("amalgam group: subgroup push collapsed a letter");
    }
    out.push_back(Letter{let.factor, d.t_pos});
    cur = d.h;
  }
  return {std::move(out), h_mul_[cur][h0]};
}

AmalgamGroup::NF AmalgamGroup::leftmul(int factor, int elem, NF nf) const {
  const GroupTable& gt = group(factor);
  if (elem < 0 || elem >= gt.size()) {
    throw Error("amalgam group: element out of range");
  }
  if (!nf.word.empty() && nf.word.front().factor == factor) {
    // combine with the leading letter of the same factor
    const int x = gt.mul(elem, transversal_[factor - 1][nf.word.front().t_pos]);
    const TH d = decompose(factor, x);
    std::vector<Letter> rest(nf.word.begin() + 1, nf.word.end());
    auto [word, h] = push_h(d.h, rest, nf.h);
    if (d.t_pos != 0) word.insert(word.begin(), Letter{factor, d.t_pos});
    return NF{std::move(word), h};
  }
  const TH d = decompose(factor, elem);
  auto [word, h] = push_h(d.h, nf.word, nf.h);
  if (d.t_pos != 0) word.insert(word.begin(), Letter{factor, d.t_pos});
  return NF{std::move(word), h};
}

AmalgamGroup::NF AmalgamGroup::word_to_nf(
    const std::vector<std::pair<int, int>>& letters) const {
  NF nf;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    nf = leftmul(it->first, it->second, std::move(nf));
  }
  return nf;
}

std::string AmalgamGroup::letter_name(Letter let) const {
  return std::to_string(let.factor) + ":" +
         group(let.factor).name(transversal_[let.factor - 1][let.t_pos]);
}

}  // namespace qka
