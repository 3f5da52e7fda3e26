#pragma once

#include <string>
#include <vector>

#include "core/fusion.hpp"

namespace qka {

/// A degree-bounded label set standing for a quantum subgroup: contains the
/// unit, closed under conjugation and under the constituents of member
/// fusions, all within the stated bound. Relatedness queries need the set
/// to be known up to the degree of the fusion they inspect, so the bound is
/// part of the value.
class Subcategory {
 public:
  Subcategory(FusionRing ring, std::vector<Label> members, int bound,
              std::string name = "subcat");

  const FusionRing& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  int bound() const { return bound_; }
  const std::vector<Label>& members() const { return members_; }
  bool member(const Label& r) const;

 private:
  FusionRing ring_;
  std::vector<Label> members_;  // sorted, unique, degrees <= bound_
  int bound_;
  std::string name_;
};

struct SubcatViolation {
  std::string condition;
  std::string witness;
};

struct SubcatReport {
  std::string subcat;
  bool valid = false;
  std::vector<SubcatViolation> violations;
};

/// Reports every violated closure condition with a witness.
SubcatReport validate_subcategory(const Subcategory& d);

/// r ~ r' iff some member of D appears in conj(r) x r'. Throws when the
/// stored member set cannot decide the query (bound too small).
bool related(const Subcategory& d, const Label& r, const Label& s);

struct QuotientClass {
  std::string id;         // printed least representative
  Label representative;   // least degree, then least label
  std::vector<Label> members;
};

/// Partition of all labels of degree <= bound into relatedness classes.
/// Refuses to run (throws) when D fails validation.
std::vector<QuotientClass> quotient_classes(const Subcategory& d, int bound);

/// Keeps exactly the labels lying in the class of the unit.
FusionElement project_trivial_block(const Subcategory& d, const FusionElement& x);

/// Convenience builders used by tests and the tree module.
Subcategory even_ao_subcategory(const FusionRing& ao_ring, int bound,
                                std::string name = "even");
Subcategory subgroup_dual_subcategory(const FusionRing& dual,
                                      const GroupTable& table,
                                      const std::vector<int>& subgroup_elems,
                                      std::string name = "subgroup");

}  // namespace qka
