#include "core/subcat.hpp"

#include <algorithm>

namespace qka {

Subcategory::Subcategory(FusionRing ring, std::vector<Label> members, int bound,
                         std::string name)
    : ring_(std::move(ring)), members_(std::move(members)), bound_(bound),
      name_(std::move(name)) {
  if (bound_ < 0) throw Error("subcategory " + name_ + ": negative bound");
  for (const Label& m : members_) {
    if (!ring_.contains(m)) {
      throw Error("subcategory " + name_ + ": label not in ring " + ring_.name());
    }
    if (ring_.degree(m) > bound_) {
      throw Error("subcategory " + name_ + ": member " + ring_.label_name(m) +
                  " exceeds bound " + std::to_string(bound_));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subcategory::member(const Label& r) const {
  return std::binary_search(members_.begin(), members_.end(), r);
}

SubcatReport validate_subcategory(const Subcategory& d) {
  SubcatReport rep;
  rep.subcat = d.name();
  const FusionRing& ring = d.ring();

  if (!d.member(ring.unit())) {
    rep.violations.push_back({"unit", "unit label missing from D"});
  }
  for (const Label& r : d.members()) {
    Label c = ring.conj(r);
    if (!d.member(c)) {
      rep.violations.push_back(
          {"conjugation", ring.label_name(r) + " in D but " + ring.label_name(c) +
                          " is not"});
    }
  }
  for (const Label& r : d.members()) {
    for (const Label& s : d.members()) {
      FusionElement rs = ring.fuse(r, s);
      for (const auto& [t, m] : rs.terms()) {
        if (ring.degree(t) <= d.bound() && !d.member(t)) {
          rep.violations.push_back(
              {"fusion-closure", ring.label_name(t) + " appears in " +
                                 ring.label_name(r) + "*" + ring.label_name(s) +
                                 " with multiplicity " + std::to_string(m) +
                                 " but is not in D"});
        }
      }
    }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

bool related(const Subcategory& d, const Label& r, const Label& s) {
  const FusionRing& ring = d.ring();
  int needed = ring.degree(r) + ring.degree(s);
  if (ring.max_degree() >= 0) needed = std::min(needed, ring.max_degree());
  if (needed > d.bound()) {
    throw Error("subcategory " + d.name() + ": bound " + std::to_string(d.bound()) +
                " too small to decide relatedness at degree " +
                std::to_string(needed));
  }
  FusionElement f = ring.fuse(ring.conj(r), s);
  for (const auto& [t, m] : f.terms()) {
    (void)m;
    if (d.member(t)) return true;
  }
  return false;
}

std::vector<QuotientClass> quotient_classes(const Subcategory& d, int bound) {
  SubcatReport v = validate_subcategory(d);
  if (!v.valid) {
    throw Error("subcategory " + d.name() + " fails validation (" +
                v.violations.front().condition + ": " +
                v.violations.front().witness + "); refusing to build quotient");
  }
  const FusionRing& ring = d.ring();
  const std::vector<Label> labels = ring.labels_up_to(bound);

  // union-find over all related pairs; relatedness is an equivalence once D
  // is validated, the full pair sweep keeps the partition honest regardless
  std::vector<int> parent(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (related(d, labels[i], labels[j])) {
        parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
      }
    }
  }

  std::map<int, std::vector<Label>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    groups[find(static_cast<int>(i))].push_back(labels[i]);
  }
  std::vector<QuotientClass> out;
  for (auto& [root, mem] : groups) {
    QuotientClass qc;
    std::sort(mem.begin(), mem.end(), [&](const Label& a, const Label& b) {
      return std::pair(ring.degree(a), a) < std::pair(ring.degree(b), b);
    });
    qc.representative = mem.front();
    qc.id = "[" + ring.label_name(qc.representative) + "]";
    qc.members = std::move(mem);
    out.push_back(std::move(qc));
  }
  std::sort(out.begin(), out.end(), [&](const QuotientClass& a, const QuotientClass& b) {
    return std::pair(ring.degree(a.representative), a.representative) <
           std::pair(ring.degree(b.representative), b.representative);
  });
  return out;
}

FusionElement project_trivial_block(const Subcategory& d, const FusionElement& x) {
  const FusionRing& ring = d.ring();
  FusionElement out(ring.id());
  const Label one = ring.unit();
  for (const auto& [lab, m] : x.terms()) {
    if (related(d, one, lab)) out.add(lab, m);
  }
  return out;
}

Subcategory even_ao_subcategory(const FusionRing& ao_ring, int bound,
                                std::string name) {
  std::vector<Label> members;
  for (const Label& lab : ao_ring.labels_up_to(bound)) {
    if (lab.k % 2 == 0) members.push_back(lab);
  }
  return Subcategory(ao_ring, std::move(members), bound, std::move(name));
}

Subcategory subgroup_dual_subcategory(const FusionRing& dual,
                                      const GroupTable& table,
                                      const std::vector<int>& subgroup_elems,
                                      std::string name) {
  std::vector<Label> members;
  members.reserve(subgroup_elems.size());
  for (int e : subgroup_elems) {
    if (e < 0 || e >= table.size()) {
      throw Error("subgroup dual: element index out of range");
    }
    members.push_back(Label{dual.id(), e, 0});
  }
  int bound = dual.max_degree() >= 0 ? dual.max_degree() : 1;
  return Subcategory(dual, std::move(members), bound, std::move(name));
}

}  // namespace qka
