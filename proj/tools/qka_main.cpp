// Command-line front end. Talks to the kit exclusively through the C API in
// qka/qka.h; all computation lives behind the shared library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qka/qka.h"

namespace {

struct SessionDeleter {
  void operator()(qka_session *s) const { qka_session_destroy(s); }
};

int run_command(const std::string &command, const std::string &spec_path,
                int depth, bool depth_set, int bound, bool bound_set, int margin,
                bool margin_set, int t_samples, bool t_samples_set,
                long long seed, const std::string &json_path) {
  std::unique_ptr<qka_session, SessionDeleter> session(qka_session_create());
  if (!session) {
    std::cerr << "error: cannot create session\n";
    return 2;
  }
  qka_session *s = session.get();

  if (qka_load_spec_file(s, spec_path.c_str()) != QKA_OK) {
    std::cerr << "error: " << qka_last_error(s) << "\n";
    return qka_exit_code(s);
  }
  if (depth_set) qka_set_option(s, "depth", depth);
  if (bound_set) qka_set_option(s, "bound", bound);
  if (margin_set) qka_set_option(s, "margin", margin);
  if (t_samples_set) qka_set_option(s, "t_samples", t_samples);
  qka_set_option(s, "seed", seed);

  const int rc = qka_run(s, command.c_str());
  if (rc != QKA_OK && rc != QKA_ERROR_VERDICT_FAILED) {
    std::cerr << "error: " << qka_last_error(s) << "\n";
    return qka_exit_code(s);
  }
  if (const char *text = qka_report_text(s)) std::cout << text;
  if (!json_path.empty()) {
    const char *json = qka_report_json(s);
    std::ofstream out(json_path, std::ios::binary);
    if (!out || !json) {
      std::cerr << "error: cannot write JSON report to '" << json_path << "'\n";
      return 2;
    }
    out << json;
  }
  return qka_exit_code(s);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{std::string("qka ") + qka_version() +
               " - fusion rings, quotient classes, Bass-Serre trees and "
               "Julg-Valette verification"};
  app.require_subcommand(1);

  const std::vector<std::string> commands = {
      "axioms",      "quotient", "fuse",        "freefuse", "amalgam-check",
      "tree",        "jv-index", "commutators", "homotopy", "all"};
  const std::vector<std::string> descriptions = {
      "based-ring axiom sweep per declared ring",
      "quotient classes of declared subcategories",
      "run the declared fuse jobs",
      "alternating-word fusion checks for ring pairs",
      "derive and verify the amalgam example ring",
      "build truncated trees and verify their structure",
      "Julg-Valette Fredholm index reports",
      "commutator compactness reports per generator",
      "unitary homotopy verification",
      "every job declared in the file"};

  struct Flags {
    std::string spec_path;
    int depth = 3;
    int bound = 6;
    int margin = 1;
    int t_samples = 9;
    long long seed = 0;
    std::string json_path;
  };
  auto flags = std::make_shared<Flags>();

  for (std::size_t i = 0; i < commands.size(); ++i) {
    CLI::App *sub = app.add_subcommand(commands[i], descriptions[i]);
    sub->add_option("spec", flags->spec_path, "problem definition file")
        ->required();
    sub->add_option("--depth", flags->depth, "tree truncation depth");
    sub->add_option("--bound", flags->bound, "label degree bound");
    sub->add_option("--margin", flags->margin, "interior margin for operators");
    sub->add_option("--t-samples", flags->t_samples, "homotopy parameter samples");
    sub->add_option("--seed", flags->seed, "seed for sampled sweeps");
    sub->add_option("--json", flags->json_path, "write the JSON report here");
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App *sub = app.get_subcommands().front();
  return run_command(sub->get_name(), flags->spec_path, flags->depth,
                     sub->count("--depth") > 0, flags->bound,
                     sub->count("--bound") > 0, flags->margin,
                     sub->count("--margin") > 0, flags->t_samples,
                     sub->count("--t-samples") > 0, flags->seed,
                     flags->json_path);
}
