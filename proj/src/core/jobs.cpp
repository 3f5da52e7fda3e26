#include "core/jobs.hpp"

#include <algorithm>

#include "json.hpp"

#include "core/amalgam_ring.hpp"
#include "core/coset_tree.hpp"
#include "core/freeprod.hpp"
#include "core/jv.hpp"

namespace qka {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

FusionRing make_named_ring(const RingDef& def) {
  switch (def.kind) {
    case RingDef::Kind::ao: return make_ao(def.d1, def.name);
    case RingDef::Kind::cyclic: return make_cyclic(def.name);
    case RingDef::Kind::cyclic_mod: return make_cyclic_mod(def.mod, def.name);
    case RingDef::Kind::group:
      if (!def.table) throw Error("ring " + def.name + ": missing table");
      return make_group_dual(*def.table, def.name);
  }
  throw Error("ring " + def.name + ": unknown kind");
}

struct Ctx {
  const ProblemSpec& spec;
  const RunOptions& opts;
  std::map<std::string, FusionRing> rings;
  std::map<std::string, Subcategory> subcats;
  std::map<std::string, std::shared_ptr<const AmalgamGroup>> amalgams;

  const FusionRing& ring(const std::string& name) const {
    auto it = rings.find(name);
    if (it == rings.end()) throw Error("unknown ring '" + name + "'");
    return it->second;
  }
  const Subcategory& subcat(const std::string& name) const {
    auto it = subcats.find(name);
    if (it == subcats.end()) throw Error("unknown subcat '" + name + "'");
    return it->second;
  }
  std::shared_ptr<const AmalgamGroup> amalgam(const std::string& name) const {
    auto it = amalgams.find(name);
    if (it == amalgams.end()) throw Error("unknown amalgam '" + name + "'");
    return it->second;
  }

  int param(const JobDef& j, const std::string& key, int cli_value, bool cli_set,
            int fallback) const {
    if (cli_set) return cli_value;
    auto it = j.params.find(key);
    if (it != j.params.end()) return static_cast<int>(it->second);
    return fallback;
  }
  int depth(const JobDef& j) const {
    return param(j, "depth", opts.depth, opts.depth_set, opts.depth);
  }
  int bound(const JobDef& j) const {
    return param(j, "bound", opts.bound, opts.bound_set, opts.bound);
  }
  int margin(const JobDef& j) const {
    return param(j, "margin", opts.margin, opts.margin_set, opts.margin);
  }
  int samples(const JobDef& j) const {
    return param(j, "samples", opts.t_samples, opts.t_samples_set, opts.t_samples);
  }
};

struct JobOutcome {
  ordered_json json;
  std::string text;
  bool pass = true;
};

std::string verdict_str(bool pass) { return pass ? "PASS" : "FAIL"; }

JobOutcome run_axioms(Ctx& ctx, const JobDef& j) {
  const FusionRing& ring = ctx.ring(j.refs.at(0));
  int bound = ctx.bound(j);
  if (ring.max_degree() >= 0) bound = std::min(bound, ring.max_degree());
  AxiomOptions opts;
  opts.seed = ctx.opts.seed;
  AxiomReport rep = check_axioms(ring, bound, opts);

  JobOutcome out;
  out.pass = rep.ok();
  out.json["kind"] = "axioms";
  out.json["ring"] = ring.name();
  out.json["family"] = ring.family();
  out.json["bound"] = bound;
  out.json["labels"] = rep.labels;
  out.json["associativity_checked"] = rep.associativity_checked;
  out.json["frobenius_checked"] = rep.frobenius_checked;
  out.json["unit_checked"] = rep.unit_checked;
  out.json["dim_checked"] = rep.dim_checked;
  out.json["sampled"] = rep.sampled;
  out.json["violations"] = ordered_json::array();
  for (const AxiomViolation& v : rep.violations) {
    out.json["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  }
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[axioms] ring=" + ring.name() + " family=" + ring.family() +
             " bound=" + std::to_string(bound) +
             " labels=" + std::to_string(rep.labels) +
             " violations=" + std::to_string(rep.violations.size()) + " -> " +
             verdict_str(out.pass);
  return out;
}

JobOutcome run_quotient(Ctx& ctx, const JobDef& j) {
  const Subcategory& d = ctx.subcat(j.refs.at(0));
  const int bound = ctx.bound(j);
  std::vector<QuotientClass> classes = quotient_classes(d, bound);

  JobOutcome out;
  out.json["kind"] = "quotient";
  out.json["subcat"] = d.name();
  out.json["ring"] = d.ring().name();
  out.json["bound"] = bound;
  out.json["class_count"] = classes.size();
  out.json["classes"] = ordered_json::array();
  for (const QuotientClass& qc : classes) {
    ordered_json jc;
    jc["id"] = qc.id;
    jc["size"] = qc.members.size();
    jc["members"] = ordered_json::array();
    for (const Label& lab : qc.members) {
      jc["members"].push_back(d.ring().label_name(lab));
    }
    out.json["classes"].push_back(std::move(jc));
  }
  if (!j.expect.empty()) {
    i64 want = -1;
    try {
      want = std::stoll(j.expect.front());
    } catch (...) {
      throw Error("quotient job: expectation must be a class count");
    }
    out.json["expected_class_count"] = want;
    out.pass = static_cast<i64>(classes.size()) == want;
  }
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[quotient] subcat=" + d.name() + " bound=" + std::to_string(bound) +
             " classes=" + std::to_string(classes.size()) + " -> " +
             verdict_str(out.pass);
  return out;
}

JobOutcome run_fuse(Ctx& ctx, const JobDef& j) {
  const FusionRing& ring = ctx.ring(j.refs.at(0));
  auto left = ring.parse_label(j.refs.at(1));
  auto right = ring.parse_label(j.refs.at(2));
  if (!left || !right) {
    throw Error("fuse job: label '" + (left ? j.refs[2] : j.refs[1]) +
                "' is not valid in ring " + ring.name());
  }
  FusionElement result = ring.fuse(*left, *right);
  const double lhs = ring.dim(result);
  const double rhs = ring.dim(*left) * ring.dim(*right);
  bool dim_ok = std::abs(lhs - rhs) <= kDimRelTol * std::max(1.0, std::abs(rhs));

  JobOutcome out;
  out.pass = dim_ok;
  out.json["kind"] = "fuse";
  out.json["ring"] = ring.name();
  out.json["left"] = ring.label_name(*left);
  out.json["right"] = ring.label_name(*right);
  out.json["result"] = ordered_json::array();
  for (const auto& [lab, m] : result.terms()) {
    out.json["result"].push_back({{"label", ring.label_name(lab)}, {"mult", m}});
  }
  out.json["dim_product"] = rhs;
  out.json["dim_additive"] = dim_ok;
  if (!j.expect.empty()) {
    FusionElement want(ring.id());
    for (const std::string& tok : j.expect) {
      auto colon = tok.rfind(':');
      if (colon == std::string::npos) {
        throw Error("fuse job: expectation token '" + tok + "' is not LABEL:MULT");
      }
      auto lab = ring.parse_label(tok.substr(0, colon));
      i64 m = 0;
      try {
        m = std::stoll(tok.substr(colon + 1));
      } catch (...) {
        throw Error("fuse job: expectation token '" + tok + "' is not LABEL:MULT");
      }
      if (!lab) {
        throw Error("fuse job: expectation label in '" + tok + "' is invalid");
      }
      want.add(*lab, m);
    }
    const bool match = want == result;
    out.json["expected"] = element_to_string(ring, want);
    out.json["matches_expected"] = match;
    out.pass = out.pass && match;
  }
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[fuse] ring=" + ring.name() + " " + ring.label_name(*left) + "*" +
             ring.label_name(*right) + " = " + element_to_string(ring, result) +
             " -> " + verdict_str(out.pass);
  return out;
}

JobOutcome run_freefuse(Ctx& ctx, const JobDef& j) {
  const FusionRing& r1 = ctx.ring(j.refs.at(0));
  const FusionRing& r2 = ctx.ring(j.refs.at(1));
  const int maxlen = ctx.param(j, "maxlen", 0, false, 3);
  const int degree = ctx.param(j, "degree", ctx.opts.bound, ctx.opts.bound_set, 3);

  std::vector<AltWord> words = enumerate_words(r1, r2, maxlen, degree);
  const bool group_factors =
      r1.family() == "group-dual" && r2.family() == "group-dual";

  u64 pairs = 0;
  u64 bad_words = 0, bad_dims = 0, bad_conj = 0, bad_single = 0;
  for (const AltWord& a : words) {
    AltWord ac = free_conj(r1, r2, a);
    WordElement unit_side = free_fuse(r1, r2, ac, a);
    if (unit_side.mult(AltWord()) != 1) ++bad_conj;
    if (free_conj(r1, r2, ac) != a) ++bad_conj;
    for (const AltWord& b : words) {
      WordElement f = free_fuse(r1, r2, a, b);
      ++pairs;
      double total = 0.0;
      for (const auto& [w, m] : f.terms()) {
        if (!word_is_valid(r1, r2, w)) ++bad_words;
        total += static_cast<double>(m) * word_dim(r1, r2, w);
      }
      const double expect = word_dim(r1, r2, a) * word_dim(r1, r2, b);
      if (std::abs(total - expect) > kDimRelTol * std::max(1.0, std::abs(expect))) {
        ++bad_dims;
      }
      if (group_factors && (f.terms().size() != 1 || f.terms().begin()->second != 1)) {
        ++bad_single;
      }
    }
  }

  JobOutcome out;
  out.pass = bad_words == 0 && bad_dims == 0 && bad_conj == 0 && bad_single == 0;
  out.json["kind"] = "freefuse";
  out.json["ring1"] = r1.name();
  out.json["ring2"] = r2.name();
  out.json["maxlen"] = maxlen;
  out.json["degree"] = degree;
  out.json["words"] = words.size();
  out.json["pairs"] = pairs;
  out.json["invalid_result_words"] = bad_words;
  out.json["dim_multiplicativity_failures"] = bad_dims;
  out.json["conjugation_failures"] = bad_conj;
  if (group_factors) out.json["non_single_word_products"] = bad_single;
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[freefuse] rings=" + r1.name() + "," + r2.name() +
             " maxlen=" + std::to_string(maxlen) + " degree=" +
             std::to_string(degree) + " words=" + std::to_string(words.size()) +
             " pairs=" + std::to_string(pairs) + " -> " + verdict_str(out.pass);
  return out;
}

JobOutcome run_amalgam_check_job(Ctx& ctx, const JobDef& j) {
  const double d1 = [&] {
    auto it = j.params.find("d1");
    return it != j.params.end() ? it->second : 2.0;
  }();
  const i64 kmax = ctx.param(j, "kmax", 0, false, 3);
  const i64 lmax = ctx.param(j, "lmax", 0, false, 4);
  const int wordlen = ctx.param(j, "wordlen", 0, false, 4);
  const i64 index_max = ctx.param(j, "index", 0, false, 3);
  AmalgamCheckReport rep = run_amalgam_check(d1, kmax, lmax, wordlen, index_max);

  JobOutcome out;
  out.pass = rep.ok();
  out.json["kind"] = "amalgam-check";
  out.json["d1"] = d1;
  out.json["kmax"] = kmax;
  out.json["lmax"] = lmax;
  out.json["wordlen"] = wordlen;
  out.json["index_max"] = index_max;
  out.json["closed_form_matches_oracle"] = rep.closed_form_matches_oracle;
  out.json["oracle_pairs"] = rep.oracle_pairs;
  out.json["relation_ok"] = rep.relation_ok;
  out.json["conj_ok"] = rep.conj_ok;
  out.json["embed_ok"] = rep.embed_ok;
  out.json["box_axioms_ok"] = rep.box_axioms_ok;
  out.json["box_triples"] = rep.box_triples;
  out.json["dim_mult_ok"] = rep.dim_mult_ok;
  out.json["words_checked"] = rep.words_checked;
  out.json["witnesses"] = rep.witnesses;
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[amalgam-check] d1=" + fmt_double(d1) + " kmax=" + std::to_string(kmax) +
             " lmax=" + std::to_string(lmax) + " oracle_pairs=" +
             std::to_string(rep.oracle_pairs) + " words=" +
             std::to_string(rep.words_checked) + " -> " + verdict_str(out.pass);
  return out;
}

CosetTree build_tree_for_job(Ctx& ctx, const JobDef& j, int depth) {
  if (j.refs.size() == 3 && j.refs[0] == "quotient") {
    const Subcategory& d1 = ctx.subcat(j.refs[1]);
    const Subcategory& d2 = ctx.subcat(j.refs[2]);
    return build_quotient_tree(d1, d2, depth, ctx.bound(j),
                               j.refs[1] + "*" + j.refs[2]);
  }
  return build_classical_tree(ctx.amalgam(j.refs.at(0)), depth);
}

JobOutcome run_tree(Ctx& ctx, const JobDef& j) {
  const int depth = ctx.depth(j);
  CosetTree tree = build_tree_for_job(ctx, j, depth);
  TreeStructureReport rep = verify_tree_structure(tree);
  PsiBijectionReport psi1 = check_psi_bijection(tree, 1);
  PsiBijectionReport psi2 = check_psi_bijection(tree, 2);

  JobOutcome out;
  out.pass = rep.ok() && psi1.ok && psi2.ok;
  out.json["kind"] = "tree";
  out.json["tree"] = tree.name;
  out.json["tree_kind"] =
      tree.kind == CosetTree::Kind::classical ? "classical" : "quotient";
  out.json["depth"] = depth;
  out.json["edges"] = rep.edges;
  out.json["vertices"] = rep.vertices;
  out.json["branching"] = {tree.branching(1), tree.branching(2)};
  out.json["euler_ok"] = rep.euler_ok;
  out.json["adjacency_ok"] = rep.adjacency_ok;
  out.json["interior_degrees_ok"] = rep.interior_degrees_ok;
  out.json["psi_bijection_ok"] = psi1.ok && psi2.ok;
  out.json["problems"] = rep.problems;
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[tree] tree=" + tree.name + " depth=" + std::to_string(depth) +
             " edges=" + std::to_string(rep.edges) + " vertices=" +
             std::to_string(rep.vertices) + " -> " + verdict_str(out.pass);
  return out;
}

JobOutcome run_jv_index(Ctx& ctx, const JobDef& j) {
  const int depth = ctx.depth(j);
  CosetTree tree = build_tree_for_job(ctx, j, depth);
  FredholmReport f1 = fredholm_report(tree, 1);
  FredholmReport f2 = fredholm_report(tree, 2);

  JobOutcome out;
  out.pass = f1.ok() && f2.ok() && f1.bijection_ok && f2.bijection_ok;
  out.json["kind"] = "jv-index";
  out.json["tree"] = tree.name;
  out.json["tree_kind"] =
      tree.kind == CosetTree::Kind::classical ? "classical" : "quotient";
  out.json["depth"] = depth;
  out.json["edges"] = f1.edges;
  out.json["vertices"] = f1.vertices;
  for (const FredholmReport* f : {&f1, &f2}) {
    ordered_json jf;
    jf["rank"] = f->rank;
    jf["kernel_dim"] = f->kernel_dim;
    jf["cokernel_dim"] = f->cokernel_dim;
    jf["index"] = f->index;
    jf["bijection_ok"] = f->bijection_ok;
    out.json[f->phi_type == 1 ? "phi1" : "phi2"] = std::move(jf);
  }
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[jv-index] tree=" + tree.name + " depth=" + std::to_string(depth) +
             " index1=" + std::to_string(f1.index) + " kernel1=" +
             std::to_string(f1.kernel_dim) + " coker1=" +
             std::to_string(f1.cokernel_dim) + " index2=" +
             std::to_string(f2.index) + " -> " + verdict_str(out.pass);
  return out;
}

JobOutcome run_commutators(Ctx& ctx, const JobDef& j) {
  const int depth = ctx.depth(j);
  const int margin = ctx.margin(j);
  auto group = ctx.amalgam(j.refs.at(0));
  // three consecutive depths so the off-interior rank can be seen to stay
  // put as the ball grows
  std::vector<CosetTree> trees;
  for (int d : {depth, depth + 1, depth + 2}) {
    trees.push_back(build_classical_tree(group, d + margin));
  }

  JobOutcome out;
  out.pass = true;
  out.json["kind"] = "commutators";
  out.json["amalgam"] = group->name();
  out.json["depths"] = {depth, depth + 1, depth + 2};
  out.json["margin"] = margin;
  out.json["phi"] = 1;
  out.json["generators"] = ordered_json::array();
  i64 max_interior = 0;
  for (const GenLetter& gen : amalgam_generators(*group)) {
    std::vector<int> ranks;
    int nnz = 0;
    bool gen_ok = true;
    for (const CosetTree& tree : trees) {
      CommutatorReport rep =
          commutator_report(tree, 1, {{gen.factor, gen.elem}}, gen.name, margin);
      gen_ok = gen_ok && rep.ok();
      max_interior = std::max(max_interior, rep.interior_max_abs);
      ranks.push_back(rep.rank);
      nnz = std::max(nnz, rep.nnz);
    }
    const bool constant = ranks[0] == ranks[1] && ranks[1] == ranks[2];
    gen_ok = gen_ok && constant;
    out.pass = out.pass && gen_ok;
    out.json["generators"].push_back({{"g", gen.name},
                                      {"ranks", ranks},
                                      {"rank_constant", constant},
                                      {"nnz", nnz}});
  }
  out.json["max_interior_entry"] = max_interior;
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[commutators] amalgam=" + group->name() + " depths=" +
             std::to_string(depth) + ".." + std::to_string(depth + 2) +
             " margin=" + std::to_string(margin) + " generators=" +
             std::to_string(out.json["generators"].size()) +
             " max_interior=" + std::to_string(max_interior) + " -> " +
             verdict_str(out.pass);
  return out;
}

JobOutcome run_homotopy(Ctx& ctx, const JobDef& j) {
  const int depth = ctx.depth(j);
  const int margin = ctx.margin(j);
  const int samples = ctx.samples(j);
  auto group = ctx.amalgam(j.refs.at(0));
  CosetTree tree = build_classical_tree(group, depth + margin);
  HomotopyReport rep = homotopy_check(tree, samples, margin);

  JobOutcome out;
  out.pass = rep.ok();
  out.json["kind"] = "homotopy";
  out.json["amalgam"] = group->name();
  out.json["depth"] = depth;
  out.json["margin"] = margin;
  out.json["t_samples"] = ordered_json::array();
  double max_defect = 0;
  for (const HomotopySample& s : rep.samples) {
    max_defect = std::max(max_defect, s.unitarity_defect);
    out.json["t_samples"].push_back({{"t", s.t},
                                     {"unitarity_defect", s.unitarity_defect},
                                     {"pass", s.pass}});
  }
  out.json["u_commutes_with_h"] = rep.u_commutes_with_h;
  out.json["h_definitions_agree"] = rep.h_definitions_agree;
  out.json["endpoint_defect"] = rep.endpoint_defect;
  out.json["endpoint_evaluated"] = rep.endpoint_evaluated;
  out.json["t0_defect"] = rep.t0_defect;
  out.json["verdict"] = out.pass ? "pass" : "fail";
  out.text = "[homotopy] amalgam=" + group->name() + " depth=" +
             std::to_string(depth) + " samples=" + std::to_string(rep.samples.size()) +
             " max_unitarity_defect=" + fmt_double(max_defect) +
             " endpoint_defect=" + std::to_string(rep.endpoint_defect) +
             " t0_defect=" + std::to_string(rep.t0_defect) + " -> " +
             verdict_str(out.pass);
  return out;
}

JobOutcome run_one(Ctx& ctx, const JobDef& j) {
  if (j.kind == "axioms") return run_axioms(ctx, j);
  if (j.kind == "quotient") return run_quotient(ctx, j);
  if (j.kind == "fuse") return run_fuse(ctx, j);
  if (j.kind == "freefuse") return run_freefuse(ctx, j);
  if (j.kind == "amalgam-check") return run_amalgam_check_job(ctx, j);
  if (j.kind == "tree") return run_tree(ctx, j);
  if (j.kind == "jv-index") return run_jv_index(ctx, j);
  if (j.kind == "commutators") return run_commutators(ctx, j);
  if (j.kind == "homotopy") return run_homotopy(ctx, j);
  throw Error("unknown job kind '" + j.kind + "'");
}

std::vector<JobDef> select_jobs(const ProblemSpec& spec, const std::string& command) {
  std::vector<JobDef> jobs;
  if (command == "all") {
    jobs = spec.jobs;
    if (!jobs.empty()) return jobs;
    static const char* const default_kinds[] = {
        "axioms", "quotient", "tree", "jv-index", "commutators", "homotopy"};
    for (const char* kind : default_kinds) {
      try {
        auto sub = select_jobs(spec, kind);
        jobs.insert(jobs.end(), sub.begin(), sub.end());
      } catch (const Error&) {
        // nothing to synthesize for this kind
      }
    }
    if (jobs.empty()) {
      throw Error("the definition declares no objects or jobs to run");
    }
    return jobs;
  }
  const auto& kinds = known_job_kinds();
  if (std::find(kinds.begin(), kinds.end(), command) == kinds.end()) {
    throw Error("unknown command '" + command + "'");
  }
  for (const JobDef& j : spec.jobs) {
    if (j.kind == command) jobs.push_back(j);
  }
  if (!jobs.empty()) return jobs;

  // nothing declared: synthesize defaults from the declared objects
  auto synth = [&](std::vector<std::string> refs) {
    JobDef j;
    j.kind = command;
    j.refs = std::move(refs);
    jobs.push_back(std::move(j));
  };
  if (command == "axioms") {
    for (const RingDef& r : spec.rings) synth({r.name});
  } else if (command == "quotient") {
    for (const SubcatDef& s : spec.subcats) synth({s.name});
  } else if (command == "amalgam-check") {
    synth({});
  } else if (command == "tree" || command == "jv-index" ||
             command == "commutators" || command == "homotopy") {
    for (const AmalgamDef& a : spec.amalgams) synth({a.name});
  }
  if (jobs.empty()) {
    throw Error("no '" + command + "' jobs declared and none can be synthesized "
                "from the declared objects");
  }
  return jobs;
}

}  // namespace

FusionRing make_ring_from_def(const RingDef& def) { return make_named_ring(def); }

std::shared_ptr<const AmalgamGroup> build_amalgam_from_def(const AmalgamDef& def) {
  if (!def.group1 || !def.group2) {
    throw Error("amalgam " + def.name + ": missing group tables");
  }
  AmalgamGroupSpec spec;
  spec.name = def.name;
  spec.g1 = *def.group1;
  spec.g2 = *def.group2;
  for (const auto& [l, r] : def.embed) {
    const int a = spec.g1.index_of(l);
    const int b = spec.g2.index_of(r);
    if (a < 0 || b < 0) {
      throw Error("amalgam " + def.name + ": embed pair " + l + "=" + r +
                  " uses unknown elements");
    }
    spec.ident.push_back({a, b});
  }
  for (const std::string& nm : def.transversal1) {
    const int x = spec.g1.index_of(nm);
    if (x < 0) throw Error("amalgam " + def.name + ": unknown transversal element " + nm);
    spec.transversal1.push_back(x);
  }
  for (const std::string& nm : def.transversal2) {
    const int x = spec.g2.index_of(nm);
    if (x < 0) throw Error("amalgam " + def.name + ": unknown transversal element " + nm);
    spec.transversal2.push_back(x);
  }
  return AmalgamGroup::build(std::move(spec));
}

RunResult run_jobs(const ProblemSpec& spec, const std::string& command,
                   const RunOptions& options, u64 spec_hash) {
  Ctx ctx{spec, options, {}, {}, {}};
  for (const RingDef& r : spec.rings) {
    ctx.rings.emplace(r.name, make_ring_from_def(r));
  }
  for (const AmalgamDef& a : spec.amalgams) {
    ctx.amalgams.emplace(a.name, build_amalgam_from_def(a));
  }
  // subcats reference the rings built above, not fresh copies, so label
  // identities agree across all jobs of one run
  for (const SubcatDef& s : spec.subcats) {
    const FusionRing& ring = ctx.ring(s.ring);
    std::vector<Label> members;
    for (const std::string& lab : s.labels) {
      auto parsed = ring.parse_label(lab);
      if (!parsed) throw Error("subcat " + s.name + ": invalid label '" + lab + "'");
      members.push_back(*parsed);
    }
    ctx.subcats.emplace(s.name, Subcategory(ring, std::move(members), s.bound, s.name));
  }

  const std::vector<JobDef> jobs = select_jobs(spec, command);

  RunResult result;
  ordered_json doc;
  doc["tool"] = "qka";
  doc["version"] = kVersion;
  doc["spec_hash"] = hex64(spec_hash);
  doc["command"] = command;
  doc["options"] = {{"depth", options.depth},
                    {"bound", options.bound},
                    {"margin", options.margin},
                    {"t_samples", options.t_samples},
                    {"seed", options.seed}};
  doc["jobs"] = ordered_json::array();

  result.text = "qka " + std::string(kVersion) + "\nspec_hash: " + hex64(spec_hash) +
                "\ncommand: " + command + "\n";
  for (const JobDef& j : jobs) {
    JobOutcome out = run_one(ctx, j);
    result.pass = result.pass && out.pass;
    doc["jobs"].push_back(std::move(out.json));
    result.text += out.text + "\n";
  }
  doc["verdict"] = result.pass ? "pass" : "fail";
  result.text += "verdict: " + std::string(result.pass ? "PASS" : "FAIL") + "\n";
  result.json = doc.dump(2) + "\n";
  return result;
}

}  // namespace qka
