#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/group_table.hpp"

namespace qka {

// Line-oriented problem definitions:
//
//   ring NAME = ao(D1) | cyclic | cyclic(N) | group { TABLE }
//   subcat NAME in RING = { LABELS } bound B
//   amalgam NAME { group1 { TABLE } group2 { TABLE } embed { PAIRS }
//                  [transversal1 { ELEMS }] [transversal2 { ELEMS }] }
//   job KIND [REFS...] [key value ...]
//
// Group tables list one row per element, `g: g*a=b, ...`, with full closure.
// Comments start with '#'. Parsing is total: malformed input produces a
// list of located errors, never an exception.

struct ParseError {
  int line = 0;
  int col = 0;
  std::string message;
};

struct RingDef {
  enum class Kind { ao, cyclic, cyclic_mod, group };
  std::string name;
  int line = 0;
  Kind kind = Kind::ao;
  double d1 = 0.0;
  int mod = 0;
  std::optional<GroupTable> table;

  // line numbers are diagnostics, not content
  friend bool operator==(const RingDef& a, const RingDef& b) {
    return a.name == b.name && a.kind == b.kind && a.d1 == b.d1 &&
           a.mod == b.mod && a.table == b.table;
  }
};

struct SubcatDef {
  std::string name;
  int line = 0;
  std::string ring;
  std::vector<std::string> labels;
  int bound = 0;

  friend bool operator==(const SubcatDef& a, const SubcatDef& b) {
    return a.name == b.name && a.ring == b.ring && a.labels == b.labels &&
           a.bound == b.bound;
  }
};

struct AmalgamDef {
  std::string name;
  int line = 0;
  std::optional<GroupTable> group1;
  std::optional<GroupTable> group2;
  std::vector<std::pair<std::string, std::string>> embed;
  std::vector<std::string> transversal1;
  std::vector<std::string> transversal2;

  friend bool operator==(const AmalgamDef& a, const AmalgamDef& b) {
    return a.name == b.name && a.group1 == b.group1 && a.group2 == b.group2 &&
           a.embed == b.embed && a.transversal1 == b.transversal1 &&
           a.transversal2 == b.transversal2;
  }
};

struct JobDef {
  std::string kind;
  int line = 0;
  std::vector<std::string> refs;
  std::map<std::string, double> params;
  std::vector<std::string> expect;  // optional expected-result tokens

  friend bool operator==(const JobDef& a, const JobDef& b) {
    return a.kind == b.kind && a.refs == b.refs && a.params == b.params &&
           a.expect == b.expect;
  }
};

struct ProblemSpec {
  std::vector<RingDef> rings;
  std::vector<SubcatDef> subcats;
  std::vector<AmalgamDef> amalgams;
  std::vector<JobDef> jobs;

  const RingDef* find_ring(const std::string& name) const;
  const SubcatDef* find_subcat(const std::string& name) const;
  const AmalgamDef* find_amalgam(const std::string& name) const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

struct ParseResult {
  ProblemSpec spec;
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

ParseResult parse_spec(std::string_view text);

/// Canonical text form; parse(serialize(parse(x))) == parse(x).
std::string serialize_spec(const ProblemSpec& spec);

/// Job kinds understood by the runner, in fixed order.
const std::vector<std::string>& known_job_kinds();

}  // namespace qka
