#include "core/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace qka {

i64 FusionElement::mult(const Label& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? 0 : it->second;
}

void FusionElement::add(const Label& r, i64 delta) {
  if (delta == 0) return;
  if (ring_ == 0) ring_ = r.ring;
  if (r.ring != ring_) throw Error("fusion element: label from a different ring");
  auto [it, inserted] = terms_.try_emplace(r, 0);
  it->second += delta;
  if (it->second == 0) terms_.erase(it);
}

void FusionElement::add(const FusionElement& other, i64 scale) {
  for (const auto& [lab, m] : other.terms()) add(lab, m * scale);
}

/// Family-specific behavior behind FusionRing.
class RingImpl {
 public:
  virtual ~RingImpl() = default;
  virtual std::string family() const = 0;
  virtual bool contains(i64 k, i64 l) const = 0;
  virtual int degree(i64 k, i64 l) const = 0;
  virtual double dim(i64 k, i64 l) const = 0;
  virtual std::pair<i64, i64> conj(i64 k, i64 l) const = 0;
  virtual void fuse(i64 k, i64 l, i64 k2, i64 l2,
                    std::vector<std::pair<std::pair<i64, i64>, i64>>& out) const = 0;
  virtual std::vector<std::pair<i64, i64>> enumerate(int degree_bound) const = 0;
  virtual int max_degree() const = 0;  // -1: infinite
  virtual std::string label_name(i64 k, i64 l) const = 0;
  virtual std::optional<std::pair<i64, i64>> parse_label(std::string_view s) const = 0;
};

namespace {

std::atomic<RingId> g_next_ring_id{1};

bool parse_int(std::string_view s, i64& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e;
}

class GroupDualImpl final : public RingImpl {
 public:
  explicit GroupDualImpl(GroupTable table) : table_(std::move(table)) {}

  std::string family() const override { return "group-dual"; }
  bool contains(i64 k, i64 l) const override {
    return l == 0 && k >= 0 && k < table_.size();
  }
  int degree(i64 k, i64) const override {
    return k == table_.identity() ? 0 : 1;
  }
  double dim(i64, i64) const override { return 1.0; }
  std::pair<i64, i64> conj(i64 k, i64) const override {
    int inv = table_.inverse(static_cast<int>(k));
    if (inv < 0) {
      throw Error("group dual: element " + table_.name(static_cast<int>(k)) +
                  " has no inverse");
    }
    return {inv, 0};
  }
  void fuse(i64 k, i64, i64 k2, i64,
            std::vector<std::pair<std::pair<i64, i64>, i64>>& out) const override {
    out.push_back({{table_.mul(static_cast<int>(k), static_cast<int>(k2)), 0}, 1});
  }
  std::vector<std::pair<i64, i64>> enumerate(int degree_bound) const override {
    std::vector<std::pair<i64, i64>> out;
    if (degree_bound >= 0) out.push_back({table_.identity(), 0});
    if (degree_bound >= 1) {
      for (int x = 0; x < table_.size(); ++x) {
        if (x != table_.identity()) out.push_back({x, 0});
      }
    }
    return out;
  }
  int max_degree() const override { return table_.size() > 1 ? 1 : 0; }
  std::string label_name(i64 k, i64) const override {
    return table_.name(static_cast<int>(k));
  }
  std::optional<std::pair<i64, i64>> parse_label(std::string_view s) const override {
    int idx = table_.index_of(s);
    if (idx < 0) return std::nullopt;
    return std::pair<i64, i64>{idx, 0};
  }

  const GroupTable& table() const { return table_; }

 private:
  GroupTable table_;
};

class CyclicImpl final : public RingImpl {
 public:
  explicit CyclicImpl(int mod) : mod_(mod) {}  // mod 0: the infinite cyclic group

  std::string family() const override {
    return mod_ == 0 ? "cyclic" : "cyclic(" + std::to_string(mod_) + ")";
  }
  bool contains(i64 k, i64 l) const override {
    if (l != 0) return false;
    return mod_ == 0 || (k >= 0 && k < mod_);
  }
  int degree(i64 k, i64) const override {
    if (mod_ == 0) return static_cast<int>(k < 0 ? -k : k);
    return static_cast<int>(std::min(k, mod_ - k));
  }
  double dim(i64, i64) const override { return 1.0; }
  std::pair<i64, i64> conj(i64 k, i64) const override {
    return {mod_ == 0 ? -k : (mod_ - k) % mod_, 0};
  }
  void fuse(i64 k, i64, i64 k2, i64,
            std::vector<std::pair<std::pair<i64, i64>, i64>>& out) const override {
    i64 sum = k + k2;
    if (mod_ != 0) sum = ((sum % mod_) + mod_) % mod_;
    out.push_back({{sum, 0}, 1});
  }
  std::vector<std::pair<i64, i64>> enumerate(int degree_bound) const override {
    std::vector<std::pair<i64, i64>> out;
    if (mod_ == 0) {
      out.push_back({0, 0});
      for (int d = 1; d <= degree_bound; ++d) {
        out.push_back({-d, 0});
        out.push_back({d, 0});
      }
    } else {
      for (i64 k = 0; k < mod_; ++k) {
        if (degree(k, 0) <= degree_bound) out.push_back({k, 0});
      }
      std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return std::pair(degree(a.first, 0), a.first) <
               std::pair(degree(b.first, 0), b.first);
      });
    }
    return out;
  }
  int max_degree() const override { return mod_ == 0 ? -1 : mod_ / 2; }
  std::string label_name(i64 k, i64) const override {
    return "a^" + std::to_string(k);
  }
  std::optional<std::pair<i64, i64>> parse_label(std::string_view s) const override {
    if (s.size() < 3 || s[0] != 'a' || s[1] != '^') return std::nullopt;
    i64 k = 0;
    if (!parse_int(s.substr(2), k)) return std::nullopt;
    if (mod_ != 0) {
      k = ((k % mod_) + mod_) % mod_;
    }
    return std::pair<i64, i64>{k, 0};
  }

 private:
  int mod_;
};

// v_k x v_l = v_|k-l| + v_{|k-l|+2} + ... + v_{k+l}, dims by the two-term
// recursion d_{k+1} = d1*d_k - d_{k-1}.
class AoImpl final : public RingImpl {
 public:
  explicit AoImpl(double d1) : d1_(d1) {}

  std::string family() const override { return "ao(" + fmt_double(d1_) + ")"; }
  bool contains(i64 k, i64 l) const override { return l == 0 && k >= 0; }
  int degree(i64 k, i64) const override { return static_cast<int>(k); }
  double dim(i64 k, i64) const override {
    double prev = 0.0, cur = 1.0;
    for (i64 i = 0; i < k; ++i) {
      double next = d1_ * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  std::pair<i64, i64> conj(i64 k, i64) const override { return {k, 0}; }
  void fuse(i64 k, i64, i64 k2, i64,
            std::vector<std::pair<std::pair<i64, i64>, i64>>& out) const override {
    for (i64 m = (k > k2 ? k - k2 : k2 - k); m <= k + k2; m += 2) {
      out.push_back({{m, 0}, 1});
    }
  }
  std::vector<std::pair<i64, i64>> enumerate(int degree_bound) const override {
    std::vector<std::pair<i64, i64>> out;
    for (i64 k = 0; k <= degree_bound; ++k) out.push_back({k, 0});
    return out;
  }
  int max_degree() const override { return -1; }
  std::string label_name(i64 k, i64) const override {
    return "v" + std::to_string(k);
  }
  std::optional<std::pair<i64, i64>> parse_label(std::string_view s) const override {
    if (s.size() < 2 || s[0] != 'v') return std::nullopt;
    i64 k = 0;
    if (!parse_int(s.substr(1), k) || k < 0) return std::nullopt;
    return std::pair<i64, i64>{k, 0};
  }

 private:
  double d1_;
};

}  // namespace

/// Labels (k, l) standing for the a-power k and ao index l; the closed-form
/// rules are validated against the generator-rewriting oracle before use
/// (see amalgam_ring.cpp).
class AmalgamRingImpl final : public RingImpl {
 public:
  explicit AmalgamRingImpl(double d1) : d1_(d1) {}

  std::string family() const override { return "amalgam(" + fmt_double(d1_) + ")"; }
  bool contains(i64, i64 l) const override { return l >= 0; }
  int degree(i64 k, i64 l) const override {
    return static_cast<int>((k < 0 ? -k : k) + l);
  }
  double dim(i64, i64 l) const override {
    double prev = 0.0, cur = 1.0;
    for (i64 i = 0; i < l; ++i) {
      double next = d1_ * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  std::pair<i64, i64> conj(i64 k, i64 l) const override {
    return {(l % 2 == 0) ? -k : k, l};
  }
  void fuse(i64 k, i64 l, i64 k2, i64 l2,
            std::vector<std::pair<std::pair<i64, i64>, i64>>& out) const override {
    const i64 kk = k + ((l % 2 == 0) ? k2 : -k2);
    for (i64 m = (l > l2 ? l - l2 : l2 - l); m <= l + l2; m += 2) {
      out.push_back({{kk, m}, 1});
    }
  }
  std::vector<std::pair<i64, i64>> enumerate(int degree_bound) const override {
    std::vector<std::pair<i64, i64>> out;
    for (int d = 0; d <= degree_bound; ++d) {
      for (i64 k = -d; k <= d; ++k) {
        out.push_back({k, d - (k < 0 ? -k : k)});
      }
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return std::tuple(degree(a.first, a.second), a.first, a.second) <
             std::tuple(degree(b.first, b.second), b.first, b.second);
    });
    return out;
  }
  int max_degree() const override { return -1; }
  std::string label_name(i64 k, i64 l) const override {
    if (k == 0 && l == 0) return "1";
    if (l == 0) return "a^" + std::to_string(k);
    if (k == 0) return "v" + std::to_string(l);
    return "a^" + std::to_string(k) + "*v" + std::to_string(l);
  }
  std::optional<std::pair<i64, i64>> parse_label(std::string_view s) const override {
    if (s == "1") return std::pair<i64, i64>{0, 0};
    auto star = s.find('*');
    if (star == std::string_view::npos) {
      if (s.size() >= 2 && s[0] == 'v') {
        i64 l = 0;
        if (parse_int(s.substr(1), l) && l >= 0) return std::pair<i64, i64>{0, l};
        return std::nullopt;
      }
      if (s.size() >= 3 && s[0] == 'a' && s[1] == '^') {
        i64 k = 0;
        if (parse_int(s.substr(2), k)) return std::pair<i64, i64>{k, 0};
      }
      return std::nullopt;
    }
    auto left = s.substr(0, star);
    auto right = s.substr(star + 1);
    if (left.size() < 3 || left[0] != 'a' || left[1] != '^') return std::nullopt;
    if (right.size() < 2 || right[0] != 'v') return std::nullopt;
    i64 k = 0, l = 0;
    if (!parse_int(left.substr(2), k)) return std::nullopt;
    if (!parse_int(right.substr(1), l) || l < 0) return std::nullopt;
    return std::pair<i64, i64>{k, l};
  }

 private:
  double d1_;
};

FusionRing::FusionRing(std::shared_ptr<const RingImpl> impl, std::string name)
    : impl_(std::move(impl)),
      id_(g_next_ring_id.fetch_add(1)),
      name_(std::move(name)) {}

std::string FusionRing::family() const { return impl_->family(); }

Label FusionRing::unit() const {
  auto labs = impl_->enumerate(0);
  if (labs.empty()) throw Error("ring has no unit label");
  return Label{id_, labs.front().first, labs.front().second};
}

bool FusionRing::contains(const Label& r) const {
  return r.ring == id_ && impl_->contains(r.k, r.l);
}

void FusionRing::require_member(const Label& r) const {
  if (r.ring != id_) {
    throw Error("ring " + name_ + ": label belongs to a different ring");
  }
  if (!impl_->contains(r.k, r.l)) {
    throw Error("ring " + name_ + ": invalid label payload");
  }
}

int FusionRing::degree(const Label& r) const {
  require_member(r);
  return impl_->degree(r.k, r.l);
}

double FusionRing::dim(const Label& r) const {
  require_member(r);
  return impl_->dim(r.k, r.l);
}

Label FusionRing::conj(const Label& r) const {
  require_member(r);
  auto [k, l] = impl_->conj(r.k, r.l);
  return Label{id_, k, l};
}

FusionElement FusionRing::fuse(const Label& r, const Label& s) const {
  require_member(r);
  require_member(s);
  std::vector<std::pair<std::pair<i64, i64>, i64>> terms;
  impl_->fuse(r.k, r.l, s.k, s.l, terms);
  FusionElement out(id_);
  for (const auto& [kl, m] : terms) out.add(Label{id_, kl.first, kl.second}, m);
  return out;
}

FusionElement FusionRing::fuse(const FusionElement& x, const FusionElement& y) const {
  if ((!x.empty() && x.ring() != id_) || (!y.empty() && y.ring() != id_)) {
    throw Error("ring " + name_ + ": fuse of elements from a different ring");
  }
  FusionElement out(id_);
  for (const auto& [r, mr] : x.terms()) {
    for (const auto& [s, ms] : y.terms()) {
      out.add(fuse(r, s), mr * ms);
    }
  }
  return out;
}

std::vector<Label> FusionRing::labels_up_to(int degree_bound) const {
  if (degree_bound < 0) return {};
  std::vector<Label> out;
  for (auto [k, l] : impl_->enumerate(degree_bound)) {
    out.push_back(Label{id_, k, l});
  }
  return out;
}

int FusionRing::max_degree() const { return impl_->max_degree(); }

std::string FusionRing::label_name(const Label& r) const {
  require_member(r);
  return impl_->label_name(r.k, r.l);
}

std::optional<Label> FusionRing::parse_label(std::string_view text) const {
  auto kl = impl_->parse_label(text);
  if (!kl) return std::nullopt;
  return Label{id_, kl->first, kl->second};
}

double FusionRing::dim(const FusionElement& x) const {
  double total = 0.0;
  for (const auto& [lab, m] : x.terms()) total += static_cast<double>(m) * dim(lab);
  return total;
}

FusionRing make_group_dual(GroupTable table, std::string name) {
  return FusionRing(std::make_shared<GroupDualImpl>(std::move(table)),
                    std::move(name));
}

FusionRing make_cyclic(std::string name) {
  return FusionRing(std::make_shared<CyclicImpl>(0), std::move(name));
}

FusionRing make_cyclic_mod(int n, std::string name) {
  if (n < 1) throw Error("cyclic(n): n must be >= 1");
  if (name.empty()) name = "cyclic" + std::to_string(n);
  return FusionRing(std::make_shared<CyclicImpl>(n), std::move(name));
}

FusionRing make_ao(double d1, std::string name) {
  if (!(d1 >= 2.0)) throw Error("ao(d1): parameter out of range, need d1 >= 2");
  if (name.empty()) name = "ao" + fmt_double(d1);
  return FusionRing(std::make_shared<AoImpl>(d1), std::move(name));
}

FusionRing make_amalgam_ring(double d1, std::string name) {
  if (!(d1 >= 2.0)) throw Error("amalgam ring: parameter out of range, need d1 >= 2");
  if (name.empty()) name = "amalgam" + fmt_double(d1);
  return FusionRing(std::make_shared<AmalgamRingImpl>(d1), std::move(name));
}

std::string element_to_string(const FusionRing& ring, const FusionElement& x) {
  if (x.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& [lab, m] : x.terms()) {
    if (!first) out += ", ";
    first = false;
    out += ring.label_name(lab) + ":" + std::to_string(m);
  }
  out += "}";
  return out;
}

namespace {

void record(AxiomReport& rep, const std::string& axiom, const std::string& witness) {
  if (rep.violations.size() < 200) rep.violations.push_back({axiom, witness});
}

}  // namespace

AxiomReport check_axioms(const FusionRing& ring, int bound, const AxiomOptions& opts) {
  AxiomReport rep;
  rep.ring = ring.name();
  rep.bound = bound;
  const std::vector<Label> labels = ring.labels_up_to(bound);
  rep.labels = labels.size();
  const Label one = ring.unit();

  // unit is self-conjugate, has dimension 1, and fuses trivially
  try {
    if (ring.conj(one) != one) record(rep, "unit", "conj(1) != 1");
    if (std::abs(ring.dim(one) - 1.0) > kDimRelTol) {
      record(rep, "unit", "dim(1) != 1");
    }
  } catch (const Error& e) {
    record(rep, "unit", std::string("error: ") + e.what());
  }

  for (const Label& r : labels) {
    try {
      FusionElement left = ring.fuse(one, r);
      FusionElement right = ring.fuse(r, one);
      FusionElement expect(ring.id());
      expect.add(r, 1);
      if (left != expect) {
        record(rep, "unit-law", "1*" + ring.label_name(r) + " = " +
               element_to_string(ring, left));
      }
      if (right != expect) {
        record(rep, "unit-law", ring.label_name(r) + "*1 = " +
               element_to_string(ring, right));
      }
      Label cc = ring.conj(ring.conj(r));
      if (cc != r) {
        record(rep, "conj-involution", ring.label_name(r) + " -> " +
               ring.label_name(ring.conj(r)) + " -> " + ring.label_name(cc));
      }
    } catch (const Error& e) {
      record(rep, "conj-involution", std::string("error: ") + e.what());
    }
  }

  // pair sweeps: unit multiplicity and dimension multiplicativity
  for (const Label& r : labels) {
    for (const Label& s : labels) {
      FusionElement rs = ring.fuse(r, s);
      i64 n1 = rs.mult(one);
      i64 want = 0;
      try {
        want = (s == ring.conj(r)) ? 1 : 0;
      } catch (const Error&) {
        want = -1;
      }
      ++rep.unit_checked;
      if (n1 != want) {
        record(rep, "unit-multiplicity",
               "N(" + ring.label_name(r) + "," + ring.label_name(s) + ";1) = " +
               std::to_string(n1) + ", expected " + std::to_string(want));
      }
      double lhs = ring.dim(rs);
      double rhs = ring.dim(r) * ring.dim(s);
      ++rep.dim_checked;
      if (std::abs(lhs - rhs) > kDimRelTol * std::max(1.0, std::abs(rhs))) {
        record(rep, "dim-multiplicativity",
               ring.label_name(r) + "*" + ring.label_name(s) + ": " +
               fmt_double(lhs) + " vs " + fmt_double(rhs));
      }
    }
  }

  // Frobenius reciprocity N_{r,s}^t = N_{conj r, t}^s = N_{t, conj s}^r,
  // with t running over everything a bounded pair can reach
  {
    int tb = 2 * bound;
    if (ring.max_degree() >= 0) tb = std::min(tb, ring.max_degree());
    const std::vector<Label> tlabels = ring.labels_up_to(tb);
    for (const Label& r : labels) {
      for (const Label& s : labels) {
        FusionElement rs = ring.fuse(r, s);
        Label rc{}, sc{};
        try {
          rc = ring.conj(r);
          sc = ring.conj(s);
        } catch (const Error& e) {
          record(rep, "frobenius", std::string("error: ") + e.what());
          continue;
        }
        for (const Label& t : tlabels) {
          i64 a = rs.mult(t);
          i64 b = ring.fuse(rc, t).mult(s);
          i64 c = ring.fuse(t, sc).mult(r);
          ++rep.frobenius_checked;
          if (a != b || a != c) {
            record(rep, "frobenius",
                   "N(" + ring.label_name(r) + "," + ring.label_name(s) + ";" +
                   ring.label_name(t) + ") = " + std::to_string(a) + ", N(" +
                   ring.label_name(rc) + "," + ring.label_name(t) + ";" +
                   ring.label_name(s) + ") = " + std::to_string(b) + ", N(" +
                   ring.label_name(t) + "," + ring.label_name(sc) + ";" +
                   ring.label_name(r) + ") = " + std::to_string(c));
          }
        }
      }
    }
  }

  // associativity (r*s)*t = r*(s*t), exhaustive unless the cube is too big
  {
    const u64 n = labels.size();
    const u64 cube = n * n * n;
    auto check_triple = [&](const Label& r, const Label& s, const Label& t) {
      FusionElement left = ring.fuse(ring.fuse(r, s), [&] {
        FusionElement e(ring.id());
        e.add(t, 1);
        return e;
      }());
      FusionElement right = ring.fuse([&] {
        FusionElement e(ring.id());
        e.add(r, 1);
        return e;
      }(), ring.fuse(s, t));
      ++rep.associativity_checked;
      if (left != right) {
        record(rep, "associativity",
               "(" + ring.label_name(r) + "*" + ring.label_name(s) + ")*" +
               ring.label_name(t) + " = " + element_to_string(ring, left) +
               " but " + ring.label_name(r) + "*(" + ring.label_name(s) + "*" +
               ring.label_name(t) + ") = " + element_to_string(ring, right));
      }
    };
    if (cube <= opts.max_triples) {
      for (const Label& r : labels) {
        for (const Label& s : labels) {
          for (const Label& t : labels) check_triple(r, s, t);
        }
      }
    } else {
      rep.sampled = true;
      SplitMix64 rng(opts.seed);
      for (u64 i = 0; i < opts.max_triples; ++i) {
        const Label& r = labels[rng.below(n)];
        const Label& s = labels[rng.below(n)];
        const Label& t = labels[rng.below(n)];
        check_triple(r, s, t);
      }
    }
  }

  return rep;
}

}  // namespace qka
