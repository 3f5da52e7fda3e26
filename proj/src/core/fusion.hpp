#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/group_table.hpp"

namespace qka {

using RingId = std::uint32_t;

/// Identifier of an irreducible object. Payload meaning depends on the
/// family: group dual -> k = element index; cyclic -> k = power;
/// ao -> k = index; amalgam -> (k, l) = a-power and ao index.
struct Label {
  RingId ring = 0;
  i64 k = 0;
  i64 l = 0;

  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Finitely supported multiplicity map over the labels of one ring.
/// Zero multiplicities are never stored.
class FusionElement {
 public:
  FusionElement() = default;
  explicit FusionElement(RingId ring) : ring_(ring) {}

  RingId ring() const { return ring_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  i64 mult(const Label& r) const;
  void add(const Label& r, i64 delta);
  void add(const FusionElement& other, i64 scale = 1);
  const std::map<Label, i64>& terms() const { return terms_; }

  friend bool operator==(const FusionElement& a, const FusionElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  RingId ring_ = 0;
  std::map<Label, i64> terms_;
};

class RingImpl;

/// Enumerable based ring: unit, fusion, conjugation, dimension function.
/// Infinite rings are exposed through degree-bounded enumeration. Values
/// are immutable after construction; all operations are pure.
class FusionRing {
 public:
  RingId id() const { return id_; }
  const std::string& name() const { return name_; }
  std::string family() const;

  Label unit() const;
  bool contains(const Label& r) const;
  int degree(const Label& r) const;
  double dim(const Label& r) const;
  Label conj(const Label& r) const;
  FusionElement fuse(const Label& r, const Label& s) const;
  /// Bilinear extension; agrees with fuse on singletons.
  FusionElement fuse(const FusionElement& x, const FusionElement& y) const;

  /// All labels of degree <= bound, sorted by (degree, payload).
  std::vector<Label> labels_up_to(int degree_bound) const;
  /// Largest label degree, or -1 when the ring is infinite.
  int max_degree() const;

  std::string label_name(const Label& r) const;
  std::optional<Label> parse_label(std::string_view text) const;

  double dim(const FusionElement& x) const;

  friend FusionRing make_group_dual(GroupTable table, std::string name);
  friend FusionRing make_cyclic(std::string name);
  friend FusionRing make_cyclic_mod(int n, std::string name);
  friend FusionRing make_ao(double d1, std::string name);
  friend FusionRing make_amalgam_ring(double d1, std::string name);

 private:
  FusionRing(std::shared_ptr<const RingImpl> impl, std::string name);
  void require_member(const Label& r) const;

  std::shared_ptr<const RingImpl> impl_;
  RingId id_ = 0;
  std::string name_;
};

FusionRing make_group_dual(GroupTable table, std::string name = "group-dual");
FusionRing make_cyclic(std::string name = "cyclic");
FusionRing make_cyclic_mod(int n, std::string name = "");
FusionRing make_ao(double d1, std::string name = "");
FusionRing make_amalgam_ring(double d1, std::string name = "");

/// Axiom sweep over all labels up to a degree bound: associativity,
/// Frobenius reciprocity, unit multiplicity, conjugation involution,
/// unit laws and dimension multiplicativity.
struct AxiomOptions {
  u64 max_triples = 500000;  // beyond this the associativity sweep samples
  u64 seed = 0;
};

struct AxiomViolation {
  std::string axiom;
  std::string witness;
};

struct AxiomReport {
  std::string ring;
  int bound = 0;
  u64 labels = 0;
  u64 associativity_checked = 0;
  u64 frobenius_checked = 0;
  u64 unit_checked = 0;
  u64 dim_checked = 0;
  bool sampled = false;
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
};

AxiomReport check_axioms(const FusionRing& ring, int bound,
                         const AxiomOptions& opts = {});

constexpr double kDimRelTol = 1e-9;

std::string element_to_string(const FusionRing& ring, const FusionElement& x);

}  // namespace qka
