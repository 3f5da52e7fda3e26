#include "core/specfile.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "core/amalgam_group.hpp"
#include "core/jobs.hpp"

namespace qka {

namespace {

struct Token {
  std::string text;
  int col = 0;
};

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '^' || c == '-' ||
         c == '+' || c == '.';
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    const int col = static_cast<int>(i) + 1;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      out.push_back({std::string(1, c), col});
      ++i;
    }
  }
  return out;
}

bool parse_i(const std::string& s, i64& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_d(const std::string& s, double& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

struct TableRow {
  std::string head;
  int line = 0;
  std::vector<std::array<std::string, 3>> items;  // left, right, result
};

struct TableAccum {
  int open_line = 0;
  std::vector<TableRow> rows;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text_.size()) {
      if (pos == text_.size() && line_no > 0) break;
      std::size_t nl = text_.find('\n', pos);
      std::string_view line = nl == std::string_view::npos
                                  ? text_.substr(pos)
                                  : text_.substr(pos, nl - pos);
      ++line_no;
      handle_line(line_no, tokenize(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (state_ != State::top) {
      error(line_no_of_open_, 1, "unterminated block (missing '}')");
    }
    finish();
    return std::move(result_);
  }

 private:
  enum class State { top, ring_table, amalgam, amalgam_table, amalgam_embed };

  void error(int line, int col, const std::string& msg) {
    if (result_.errors.size() < 1000) result_.errors.push_back({line, col, msg});
  }

  void handle_line(int ln, std::vector<Token> toks) {
    switch (state_) {
      case State::top: top_line(ln, toks); break;
      case State::ring_table:
      case State::amalgam_table: table_line(ln, toks); break;
      case State::amalgam: amalgam_line(ln, toks); break;
      case State::amalgam_embed: embed_line(ln, toks); break;
    }
  }

  void top_line(int ln, const std::vector<Token>& t) {
    if (t.empty()) return;
    const std::string& kw = t[0].text;
    if (kw == "ring") {
      ring_decl(ln, t);
    } else if (kw == "subcat") {
      subcat_decl(ln, t);
    } else if (kw == "amalgam") {
      amalgam_open(ln, t);
    } else if (kw == "job") {
      job_decl(ln, t);
    } else {
      error(ln, t[0].col, "expected 'ring', 'subcat', 'amalgam' or 'job', got '" +
                          kw + "'");
    }
  }

  void ring_decl(int ln, const std::vector<Token>& t) {
    if (t.size() < 4 || t[2].text != "=") {
      error(ln, t[0].col, "malformed ring declaration, expected 'ring NAME = ...'");
      return;
    }
    RingDef def;
    def.name = t[1].text;
    def.line = ln;
    const std::string& rhs = t[3].text;
    if (rhs == "ao") {
      def.kind = RingDef::Kind::ao;
      if (t.size() != 7 || t[4].text != "(" || t[6].text != ")") {
        error(ln, t[3].col, "expected ao(D1)");
        return;
      }
      if (!parse_d(t[5].text, def.d1)) {
        error(ln, t[5].col, "ao parameter is not a number");
        return;
      }
      if (!(def.d1 >= 2.0)) {
        error(ln, t[5].col, "ao parameter out of range (need d1 >= 2)");
        return;
      }
    } else if (rhs == "cyclic") {
      if (t.size() == 4) {
        def.kind = RingDef::Kind::cyclic;
      } else if (t.size() == 7 && t[4].text == "(" && t[6].text == ")") {
        def.kind = RingDef::Kind::cyclic_mod;
        i64 n = 0;
        if (!parse_i(t[5].text, n) || n < 1) {
          error(ln, t[5].col, "cyclic(N) needs a positive integer");
          return;
        }
        def.mod = static_cast<int>(n);
      } else {
        error(ln, t[3].col, "expected cyclic or cyclic(N)");
        return;
      }
    } else if (rhs == "group") {
      def.kind = RingDef::Kind::group;
      if (t.size() != 5 || t[4].text != "{") {
        error(ln, t[3].col, "expected 'group {' opening a table block");
        return;
      }
      state_ = State::ring_table;
      line_no_of_open_ = ln;
      table_ = TableAccum{ln, {}};
    } else {
      error(ln, t[3].col, "unknown builtin '" + rhs +
                          "' (expected ao, cyclic or group)");
      return;
    }
    pending_ring_ = def;
    if (def.kind != RingDef::Kind::group) {
      result_.spec.rings.push_back(*pending_ring_);
      pending_ring_.reset();
    }
  }

  void subcat_decl(int ln, const std::vector<Token>& t) {
    // subcat NAME in RING = { LABELS } bound B
    std::size_t i = 1;
    SubcatDef def;
    def.line = ln;
    auto need = [&](const char* what) -> bool {
      if (i >= t.size()) {
        error(ln, t.empty() ? 1 : t.back().col, std::string("expected ") + what);
        return false;
      }
      return true;
    };
    if (!need("subcategory name")) return;
    def.name = t[i++].text;
    if (!need("'in'") || t[i].text != "in") {
      error(ln, t[std::min(i, t.size() - 1)].col, "expected 'in RING'");
      return;
    }
    ++i;
    if (!need("ring name")) return;
    def.ring = t[i++].text;
    if (!need("'='") || t[i].text != "=") {
      error(ln, t[std::min(i, t.size() - 1)].col, "expected '='");
      return;
    }
    ++i;
    if (!need("'{'") || t[i].text != "{") {
      error(ln, t[std::min(i, t.size() - 1)].col, "expected '{ LABELS }'");
      return;
    }
    ++i;
    while (i < t.size() && t[i].text != "}") def.labels.push_back(t[i++].text);
    if (i >= t.size()) {
      error(ln, t.back().col, "missing '}' in label list");
      return;
    }
    ++i;
    if (i + 1 >= t.size() || t[i].text != "bound") {
      error(ln, i < t.size() ? t[i].col : t.back().col, "expected 'bound B'");
      return;
    }
    i64 b = 0;
    if (!parse_i(t[i + 1].text, b) || b < 0) {
      error(ln, t[i + 1].col, "bound must be a non-negative integer");
      return;
    }
    def.bound = static_cast<int>(b);
    if (i + 2 < t.size()) {
      error(ln, t[i + 2].col, "unexpected tokens after the bound");
      return;
    }
    result_.spec.subcats.push_back(std::move(def));
  }

  void amalgam_open(int ln, const std::vector<Token>& t) {
    if (t.size() != 3 || t[2].text != "{") {
      error(ln, t[0].col, "expected 'amalgam NAME {'");
      return;
    }
    pending_amalgam_ = AmalgamDef{};
    pending_amalgam_->name = t[1].text;
    pending_amalgam_->line = ln;
    state_ = State::amalgam;
    line_no_of_open_ = ln;
  }

  void amalgam_line(int ln, const std::vector<Token>& t) {
    if (t.empty()) return;
    const std::string& kw = t[0].text;
    if (kw == "}") {
      result_.spec.amalgams.push_back(std::move(*pending_amalgam_));
      pending_amalgam_.reset();
      state_ = State::top;
      return;
    }
    if (kw == "group1" || kw == "group2") {
      if (t.size() != 2 || t[1].text != "{") {
        error(ln, t[0].col, "expected '" + kw + " {'");
        return;
      }
      table_target_ = kw == "group1" ? 1 : 2;
      table_ = TableAccum{ln, {}};
      state_ = State::amalgam_table;
      return;
    }
    if (kw == "embed") {
      if (t.size() < 2 || t[1].text != "{") {
        error(ln, t[0].col, "expected 'embed {'");
        return;
      }
      if (t.back().text == "}") {
        // single-line form
        parse_embed_items(ln, t, 2, t.size() - 1);
      } else {
        state_ = State::amalgam_embed;
      }
      return;
    }
    if (kw == "transversal1" || kw == "transversal2") {
      if (t.size() < 3 || t[1].text != "{" || t.back().text != "}") {
        error(ln, t[0].col, "expected '" + kw + " { ELEMENTS }'");
        return;
      }
      auto& out = kw == "transversal1" ? pending_amalgam_->transversal1
                                       : pending_amalgam_->transversal2;
      for (std::size_t i = 2; i + 1 < t.size(); ++i) out.push_back(t[i].text);
      return;
    }
    error(ln, t[0].col, "unexpected '" + kw + "' inside amalgam block");
  }

  void embed_line(int ln, const std::vector<Token>& t) {
    if (t.empty()) return;
    if (t[0].text == "}") {
      state_ = State::amalgam;
      return;
    }
    parse_embed_items(ln, t, 0, t.size());
  }

  void parse_embed_items(int ln, const std::vector<Token>& t, std::size_t from,
                         std::size_t to) {
    std::size_t i = from;
    while (i < to) {
      if (t[i].text == ",") {
        ++i;
        continue;
      }
      if (i + 2 < to && t[i + 1].text == "=") {
        pending_amalgam_->embed.push_back({t[i].text, t[i + 2].text});
        i += 3;
      } else {
        error(ln, t[i].col, "expected 'A=B' pair in embed block");
        return;
      }
    }
  }

  void table_line(int ln, const std::vector<Token>& t) {
    if (t.empty()) return;
    if (t[0].text == "}") {
      finish_table(ln);
      return;
    }
    if (t.size() < 2 || t[1].text != ":") {
      error(ln, t[0].col, "expected table row 'g: g*a=b, ...' or '}'");
      return;
    }
    TableRow row;
    row.head = t[0].text;
    row.line = ln;
    std::size_t i = 2;
    while (i < t.size()) {
      if (t[i].text == ",") {
        ++i;
        continue;
      }
      if (i + 4 < t.size() && t[i + 1].text == "*" && t[i + 3].text == "=") {
        row.items.push_back({t[i].text, t[i + 2].text, t[i + 4].text});
        if (t[i].text != row.head) {
          error(ln, t[i].col, "row for '" + row.head +
                              "' lists a product with left operand '" + t[i].text + "'");
        }
        i += 5;
      } else {
        error(ln, t[i].col, "malformed table entry, expected 'a*b=c'");
        return;
      }
    }
    table_.rows.push_back(std::move(row));
  }

  void finish_table(int ln) {
    std::vector<std::string> names;
    for (const TableRow& row : table_.rows) names.push_back(row.head);
    std::set<std::string> name_set(names.begin(), names.end());
    if (name_set.size() != names.size()) {
      error(ln, 1, "duplicate row in group table");
    }
    const int n = static_cast<int>(names.size());
    auto idx = [&](const std::string& s) {
      for (int k = 0; k < n; ++k) {
        if (names[k] == s) return k;
      }
      return -1;
    };
    std::vector<std::vector<int>> prod(n, std::vector<int>(n, -1));
    bool bad = false;
    for (const TableRow& row : table_.rows) {
      const int a = idx(row.head);
      for (const auto& [l, r, res] : row.items) {
        const int b = idx(r);
        const int c = idx(res);
        if (b < 0 || c < 0) {
          error(row.line, 1, "table entry uses undeclared element '" +
                             (b < 0 ? r : res) + "'");
          bad = true;
          continue;
        }
        if (prod[a][b] != -1) {
          error(row.line, 1, "duplicate product " + l + "*" + r);
          bad = true;
        }
        prod[a][b] = c;
      }
    }
    for (int a = 0; a < n && !bad; ++a) {
      for (int b = 0; b < n; ++b) {
        if (prod[a][b] < 0) {
          error(table_.open_line, 1, "table misses the product " + names[a] + "*" +
                                     names[b]);
          bad = true;
          break;
        }
      }
    }
    std::optional<GroupTable> result;
    if (!bad && n > 0) {
      try {
        result = GroupTable::make(names, prod);
      } catch (const Error& e) {
        error(table_.open_line, 1, e.what());
      }
    } else if (n == 0) {
      error(table_.open_line, 1, "empty group table");
    }

    if (state_ == State::ring_table) {
      if (pending_ring_) {
        pending_ring_->table = std::move(result);
        if (pending_ring_->table) result_.spec.rings.push_back(*pending_ring_);
        pending_ring_.reset();
      }
      state_ = State::top;
    } else {
      if (table_target_ == 1) {
        pending_amalgam_->group1 = std::move(result);
      } else {
        pending_amalgam_->group2 = std::move(result);
      }
      state_ = State::amalgam;
    }
  }

  void job_decl(int ln, const std::vector<Token>& t) {
    JobDef def;
    def.line = ln;
    if (t.size() < 2) {
      error(ln, t[0].col, "expected 'job KIND ...'");
      return;
    }
    def.kind = t[1].text;
    static const std::set<std::string> keys = {
        "bound", "depth",  "margin",  "maxlen", "degree", "samples",
        "d1",    "kmax",   "lmax",    "wordlen", "index"};
    std::size_t i = 2;
    while (i < t.size()) {
      const std::string& tok = t[i].text;
      if (tok == "expect") {
        // expectation items may carry a ':' which tokenizes separately
        ++i;
        while (i < t.size()) {
          std::string item = t[i++].text;
          while (i + 1 < t.size() && t[i].text == ":") {
            item += ":" + t[i + 1].text;
            i += 2;
          }
          def.expect.push_back(std::move(item));
        }
        break;
      }
      if (keys.count(tok)) {
        if (i + 1 >= t.size()) {
          error(ln, t[i].col, "parameter '" + tok + "' needs a value");
          return;
        }
        double v = 0;
        if (!parse_d(t[i + 1].text, v)) {
          error(ln, t[i + 1].col, "parameter '" + tok + "' needs a numeric value");
          return;
        }
        def.params[tok] = v;
        i += 2;
      } else {
        def.refs.push_back(tok);
        ++i;
      }
    }
    result_.spec.jobs.push_back(std::move(def));
  }

  // reference resolution and range validation
  void finish() {
    ProblemSpec& spec = result_.spec;
    std::set<std::string> names;
    auto declare = [&](const std::string& n, int line) {
      if (!names.insert(n).second) {
        error(line, 1, "duplicate name '" + n + "'");
      }
    };
    for (const RingDef& r : spec.rings) declare(r.name, r.line);
    for (const SubcatDef& s : spec.subcats) declare(s.name, s.line);
    for (const AmalgamDef& a : spec.amalgams) declare(a.name, a.line);

    for (const SubcatDef& s : spec.subcats) {
      const RingDef* ring = spec.find_ring(s.ring);
      if (!ring) {
        error(s.line, 1, "subcat '" + s.name + "' references unknown ring '" +
                         s.ring + "'");
        continue;
      }
      try {
        FusionRing fr = make_ring_from_def(*ring);
        for (const std::string& lab : s.labels) {
          auto parsed = fr.parse_label(lab);
          if (!parsed) {
            error(s.line, 1, "label '" + lab + "' is not valid in ring '" +
                             s.ring + "'");
          } else if (fr.degree(*parsed) > s.bound) {
            error(s.line, 1, "label '" + lab + "' exceeds the declared bound " +
                             std::to_string(s.bound));
          }
        }
      } catch (const Error& e) {
        error(s.line, 1, e.what());
      }
    }

    for (const AmalgamDef& a : spec.amalgams) {
      if (!a.group1 || !a.group2) {
        error(a.line, 1, "amalgam '" + a.name + "' needs group1 and group2 blocks");
        continue;
      }
      if (a.embed.empty()) {
        error(a.line, 1, "amalgam '" + a.name + "' needs a nonempty embed block");
        continue;
      }
      bool refs_ok = true;
      for (const auto& [l, r] : a.embed) {
        if (a.group1->index_of(l) < 0) {
          error(a.line, 1, "embed element '" + l + "' is not in group1");
          refs_ok = false;
        }
        if (a.group2->index_of(r) < 0) {
          error(a.line, 1, "embed element '" + r + "' is not in group2");
          refs_ok = false;
        }
      }
      for (const std::string& nm : a.transversal1) {
        if (a.group1->index_of(nm) < 0) {
          error(a.line, 1, "transversal1 element '" + nm + "' is not in group1");
          refs_ok = false;
        }
      }
      for (const std::string& nm : a.transversal2) {
        if (a.group2->index_of(nm) < 0) {
          error(a.line, 1, "transversal2 element '" + nm + "' is not in group2");
          refs_ok = false;
        }
      }
      if (refs_ok) {
        try {
          (void)build_amalgam_from_def(a);
        } catch (const Error& e) {
          error(a.line, 1, e.what());
        }
      }
    }

    for (const JobDef& j : spec.jobs) validate_job(spec, j);
  }

  void validate_job(const ProblemSpec& spec, const JobDef& j) {
    const auto& kinds = known_job_kinds();
    if (std::find(kinds.begin(), kinds.end(), j.kind) == kinds.end()) {
      error(j.line, 1, "unknown job kind '" + j.kind + "'");
      return;
    }
    auto need_ring = [&](const std::string& n) {
      if (!spec.find_ring(n)) error(j.line, 1, "job references unknown ring '" + n + "'");
    };
    auto need_subcat = [&](const std::string& n) {
      if (!spec.find_subcat(n)) {
        error(j.line, 1, "job references unknown subcat '" + n + "'");
      }
    };
    auto need_amalgam = [&](const std::string& n) {
      if (!spec.find_amalgam(n)) {
        error(j.line, 1, "job references unknown amalgam '" + n + "'");
      }
    };
    for (const auto& [key, value] : j.params) {
      if ((key == "bound" || key == "depth" || key == "margin" || key == "maxlen" ||
           key == "degree" || key == "samples" || key == "kmax" || key == "lmax" ||
           key == "wordlen" || key == "index") &&
          (value < 0 || value != static_cast<double>(static_cast<i64>(value)))) {
        error(j.line, 1, "parameter '" + key + "' must be a non-negative integer");
      }
      if (key == "d1" && !(value >= 2.0)) {
        error(j.line, 1, "parameter d1 out of range (need d1 >= 2)");
      }
    }
    if (j.kind == "axioms") {
      if (j.refs.size() != 1) {
        error(j.line, 1, "axioms job expects one ring reference");
      } else {
        need_ring(j.refs[0]);
      }
    } else if (j.kind == "fuse") {
      if (j.refs.size() != 3) {
        error(j.line, 1, "fuse job expects 'fuse RING LABEL LABEL'");
      } else {
        need_ring(j.refs[0]);
      }
    } else if (j.kind == "quotient") {
      if (j.refs.size() != 1) {
        error(j.line, 1, "quotient job expects one subcat reference");
      } else {
        need_subcat(j.refs[0]);
      }
    } else if (j.kind == "freefuse") {
      if (j.refs.size() != 2) {
        error(j.line, 1, "freefuse job expects two ring references");
      } else {
        need_ring(j.refs[0]);
        need_ring(j.refs[1]);
      }
    } else if (j.kind == "amalgam-check") {
      if (!j.refs.empty()) error(j.line, 1, "amalgam-check job takes no references");
    } else if (j.kind == "tree" || j.kind == "jv-index") {
      if (j.refs.size() == 1) {
        need_amalgam(j.refs[0]);
      } else if (j.refs.size() == 3 && j.refs[0] == "quotient") {
        need_subcat(j.refs[1]);
        need_subcat(j.refs[2]);
      } else {
        error(j.line, 1, j.kind + " job expects 'AMALGAM' or 'quotient SUBCAT SUBCAT'");
      }
    } else if (j.kind == "commutators" || j.kind == "homotopy") {
      if (j.refs.size() != 1) {
        error(j.line, 1, j.kind + " job expects one amalgam reference");
      } else {
        need_amalgam(j.refs[0]);
      }
    }
  }

  std::string_view text_;
  ParseResult result_;
  State state_ = State::top;
  int line_no_of_open_ = 0;
  TableAccum table_;
  int table_target_ = 1;
  std::optional<RingDef> pending_ring_;
  std::optional<AmalgamDef> pending_amalgam_;
};

}  // namespace

const RingDef* ProblemSpec::find_ring(const std::string& name) const {
  for (const RingDef& r : rings) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const SubcatDef* ProblemSpec::find_subcat(const std::string& name) const {
  for (const SubcatDef& s : subcats) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const AmalgamDef* ProblemSpec::find_amalgam(const std::string& name) const {
  for (const AmalgamDef& a : amalgams) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

ParseResult parse_spec(std::string_view text) { return Parser(text).run(); }

const std::vector<std::string>& known_job_kinds() {
  static const std::vector<std::string> kinds = {
      "axioms", "quotient",      "fuse", "freefuse",    "amalgam-check",
      "tree",   "jv-index", "commutators", "homotopy"};
  return kinds;
}

namespace {

void serialize_table(std::string& out, const GroupTable& g, const std::string& indent) {
  for (int a = 0; a < g.size(); ++a) {
    out += indent + g.name(a) + ":";
    for (int b = 0; b < g.size(); ++b) {
      out += b == 0 ? " " : ", ";
      out += g.name(a) + "*" + g.name(b) + "=" + g.name(g.mul(a, b));
    }
    out += "\n";
  }
}

}  // namespace

std::string serialize_spec(const ProblemSpec& spec) {
  std::string out;
  for (const RingDef& r : spec.rings) {
    out += "ring " + r.name + " = ";
    switch (r.kind) {
      case RingDef::Kind::ao: out += "ao(" + fmt_double(r.d1) + ")\n"; break;
      case RingDef::Kind::cyclic: out += "cyclic\n"; break;
      case RingDef::Kind::cyclic_mod:
        out += "cyclic(" + std::to_string(r.mod) + ")\n";
        break;
      case RingDef::Kind::group:
        out += "group {\n";
        if (r.table) serialize_table(out, *r.table, "  ");
        out += "}\n";
        break;
    }
  }
  for (const SubcatDef& s : spec.subcats) {
    out += "subcat " + s.name + " in " + s.ring + " = {";
    for (const std::string& lab : s.labels) out += " " + lab;
    out += " } bound " + std::to_string(s.bound) + "\n";
  }
  for (const AmalgamDef& a : spec.amalgams) {
    out += "amalgam " + a.name + " {\n";
    if (a.group1) {
      out += "  group1 {\n";
      serialize_table(out, *a.group1, "    ");
      out += "  }\n";
    }
    if (a.group2) {
      out += "  group2 {\n";
      serialize_table(out, *a.group2, "    ");
      out += "  }\n";
    }
    out += "  embed {";
    for (std::size_t i = 0; i < a.embed.size(); ++i) {
      out += i == 0 ? " " : ", ";
      out += a.embed[i].first + "=" + a.embed[i].second;
    }
    out += " }\n";
    if (!a.transversal1.empty()) {
      out += "  transversal1 {";
      for (const std::string& t : a.transversal1) out += " " + t;
      out += " }\n";
    }
    if (!a.transversal2.empty()) {
      out += "  transversal2 {";
      for (const std::string& t : a.transversal2) out += " " + t;
      out += " }\n";
    }
    out += "}\n";
  }
  for (const JobDef& j : spec.jobs) {
    out += "job " + j.kind;
    for (const std::string& ref : j.refs) out += " " + ref;
    for (const auto& [key, value] : j.params) {
      out += " " + key + " " + fmt_double(value);
    }
    if (!j.expect.empty()) {
      out += " expect";
      for (const std::string& e : j.expect) out += " " + e;
    }
    out += "\n";
  }
  return out;
}

}  // namespace qka
