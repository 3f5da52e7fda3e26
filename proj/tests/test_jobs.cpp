#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "core/jobs.hpp"

using namespace qka;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemSpec load(const std::string& name) {
  ParseResult r = parse_spec(read_file(std::string(QKA_SPECS_DIR) + "/" + name));
  REQUIRE(r.ok());
  return std::move(r.spec);
}

}  // namespace

TEST_CASE("quotient job on the shipped even-subcategory file finds 2 classes") {
  ProblemSpec spec = load("ao_even.spec");
  RunResult res = run_jobs(spec, "quotient", RunOptions{}, 1);
  CHECK(res.pass);
  auto doc = nlohmann::json::parse(res.json);
  REQUIRE(doc["jobs"].size() == 1);
  CHECK(doc["jobs"][0]["class_count"] == 2);
  CHECK(doc["jobs"][0]["verdict"] == "pass");
}

TEST_CASE("jv-index job on the shipped s3 file reports index one") {
  ProblemSpec spec = load("s3_c2_s3.spec");
  RunResult res = run_jobs(spec, "jv-index", RunOptions{}, 2);
  CHECK(res.pass);
  auto doc = nlohmann::json::parse(res.json);
  REQUIRE(doc["jobs"].size() == 1);
  CHECK(doc["jobs"][0]["phi1"]["index"] == 1);
  CHECK(doc["jobs"][0]["phi1"]["kernel_dim"] == 1);
  CHECK(doc["jobs"][0]["phi2"]["index"] == 1);
}

TEST_CASE("all jobs of the shipped files pass") {
  for (const char* name : {"ao_even.spec", "z2_z2.spec", "ao_amalgam.spec"}) {
    ProblemSpec spec = load(name);
    RunResult res = run_jobs(spec, "all", RunOptions{}, 3);
    INFO(name << "\n" << res.text);
    CHECK(res.pass);
  }
}

TEST_CASE("reports are byte-identical across repeated runs") {
  ProblemSpec spec = load("ao_even.spec");
  RunOptions opts;
  opts.seed = 42;
  RunResult a = run_jobs(spec, "all", opts, 7);
  RunResult b = run_jobs(spec, "all", opts, 7);
  CHECK(a.text == b.text);
  CHECK(a.json == b.json);
}

TEST_CASE("report JSON round-trips through a reader") {
  ProblemSpec spec = load("ao_even.spec");
  RunResult res = run_jobs(spec, "all", RunOptions{}, 9);
  auto doc = nlohmann::ordered_json::parse(res.json);
  CHECK(doc.dump(2) + "\n" == res.json);
  CHECK(doc["tool"] == "qka");
  CHECK(doc["verdict"] == "pass");
}

TEST_CASE("explicit flags override job parameters") {
  ProblemSpec spec = load("ao_even.spec");
  RunOptions opts;
  opts.bound = 5;
  opts.bound_set = true;
  RunResult res = run_jobs(spec, "quotient", opts, 4);
  auto doc = nlohmann::json::parse(res.json);
  CHECK(doc["jobs"][0]["bound"] == 5);
  CHECK(doc["jobs"][0]["class_count"] == 2);
}

TEST_CASE("failing expectations drive the verdict, honestly") {
  ParseResult r = parse_spec(
      "ring A = ao(2)\n"
      "subcat D in A = { v0 v2 v4 v6 v8 v10 } bound 10\n"
      "job quotient D bound 5 expect 3\n");
  REQUIRE(r.ok());
  RunResult res = run_jobs(r.spec, "quotient", RunOptions{}, 5);
  CHECK_FALSE(res.pass);
  auto doc = nlohmann::json::parse(res.json);
  CHECK(doc["jobs"][0]["class_count"] == 2);
  CHECK(doc["jobs"][0]["verdict"] == "fail");
  CHECK(doc["verdict"] == "fail");
}

TEST_CASE("fuse job expectation matching") {
  ParseResult r = parse_spec(
      "ring A = ao(2)\n"
      "job fuse A v1 v2 expect v1:1 v3:1\n");
  REQUIRE(r.ok());
  RunResult res = run_jobs(r.spec, "fuse", RunOptions{}, 6);
  CHECK(res.pass);

  ParseResult bad = parse_spec(
      "ring A = ao(2)\n"
      "job fuse A v1 v2 expect v1:2\n");
  REQUIRE(bad.ok());
  RunResult res2 = run_jobs(bad.spec, "fuse", RunOptions{}, 6);
  CHECK_FALSE(res2.pass);
}

TEST_CASE("jobs are synthesized from objects when none are declared") {
  ParseResult r = parse_spec("ring A = ao(2)\n");
  REQUIRE(r.ok());
  RunResult res = run_jobs(r.spec, "axioms", RunOptions{}, 8);
  CHECK(res.pass);
  auto doc = nlohmann::json::parse(res.json);
  CHECK(doc["jobs"].size() == 1);
  CHECK(doc["jobs"][0]["ring"] == "A");

  CHECK_THROWS_AS((void)run_jobs(r.spec, "jv-index", RunOptions{}, 8), Error);
}

TEST_CASE("insufficient subcategory bound is an input error, not a verdict") {
  ParseResult r = parse_spec(
      "ring A = ao(2)\n"
      "subcat D in A = { v0 v2 } bound 2\n"
      "job quotient D bound 9\n");
  REQUIRE(r.ok());
  CHECK_THROWS_AS((void)run_jobs(r.spec, "quotient", RunOptions{}, 10), Error);
}

TEST_CASE("a file with objects but no jobs synthesizes the full battery on all") {
  ParseResult r = parse_spec(
      "ring A = ao(2)\n"
      "subcat D in A = { v0 v2 v4 v6 v8 } bound 8\n");
  REQUIRE(r.ok());
  RunOptions opts;
  opts.bound = 4;
  opts.bound_set = true;
  RunResult res = run_jobs(r.spec, "all", opts, 13);
  CHECK(res.pass);
  auto doc = nlohmann::json::parse(res.json);
  REQUIRE(doc["jobs"].size() == 2);  // axioms for A, quotient for D
  CHECK(doc["jobs"][0]["kind"] == "axioms");
  CHECK(doc["jobs"][1]["kind"] == "quotient");
}

TEST_CASE("freefuse and homotopy jobs from shipped files pass") {
  ProblemSpec spec = load("ao_amalgam.spec");
  RunResult ff = run_jobs(spec, "freefuse", RunOptions{}, 11);
  CHECK(ff.pass);

  ProblemSpec s3 = load("s3_c2_s3.spec");
  RunResult ho = run_jobs(s3, "homotopy", RunOptions{}, 12);
  CHECK(ho.pass);
  auto doc = nlohmann::json::parse(ho.json);
  CHECK(doc["jobs"][0]["endpoint_defect"] == 0);
  CHECK(doc["jobs"][0]["t0_defect"] > 0);
}

TEST_CASE("the t-samples flag changes the homotopy sampling") {
  ProblemSpec spec = load("s3_c2_s3.spec");
  RunOptions opts;
  opts.t_samples = 5;
  opts.t_samples_set = true;
  opts.depth = 2;
  opts.depth_set = true;
  RunResult res = run_jobs(spec, "homotopy", opts, 14);
  CHECK(res.pass);
  auto doc = nlohmann::json::parse(res.json);
  CHECK(doc["jobs"][0]["t_samples"].size() == 5);
}

TEST_CASE("an invalid label in a fuse job is an input error") {
  ParseResult r = parse_spec("ring A = ao(2)\n");
  REQUIRE(r.ok());
  JobDef j;
  j.kind = "fuse";
  j.refs = {"A", "v1", "w9"};
  r.spec.jobs.push_back(j);
  CHECK_THROWS_AS((void)run_jobs(r.spec, "fuse", RunOptions{}, 15), Error);
}
