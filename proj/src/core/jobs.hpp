#pragma once

#include <map>
#include <memory>
#include <string>

#include "core/amalgam_group.hpp"
#include "core/fusion.hpp"
#include "core/specfile.hpp"
#include "core/subcat.hpp"

namespace qka {

FusionRing make_ring_from_def(const RingDef& def);
std::shared_ptr<const AmalgamGroup> build_amalgam_from_def(const AmalgamDef& def);

/// Option values for a run; `*_set` records an explicit command-line flag,
/// which then overrides per-job parameters.
struct RunOptions {
  int depth = 3;
  bool depth_set = false;
  int bound = 6;
  bool bound_set = false;
  int margin = 1;
  bool margin_set = false;
  int t_samples = 9;
  bool t_samples_set = false;
  u64 seed = 0;
};

struct RunResult {
  bool pass = true;          // every executed verdict passed
  std::string text;          // human-readable report
  std::string json;          // machine-readable report (one JSON document)
};

/// Runs the jobs of the requested kind ("all" = every declared job, in file
/// order). When the file declares no job of the kind, default jobs are
/// synthesized from the declared objects where that is meaningful. Throws
/// Error on unresolvable input (exit-code-2 class failures).
RunResult run_jobs(const ProblemSpec& spec, const std::string& command,
                   const RunOptions& options, u64 spec_hash);

}  // namespace qka
