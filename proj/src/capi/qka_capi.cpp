#include "qka/qka.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "core/jobs.hpp"
#include "core/specfile.hpp"

struct qka_session {
  std::string last_error;
  std::optional<qka::ProblemSpec> spec;
  qka::u64 spec_hash = 0;
  qka::RunOptions options;
  std::optional<qka::RunResult> result;
  int exit_code = 0;
};

namespace {

int fail(qka_session *s, int code, std::string message) {
  if (s) {
    s->last_error = std::move(message);
    if (code == QKA_ERROR_VERDICT_FAILED) {
      s->exit_code = 1;
    } else if (code != QKA_OK) {
      s->exit_code = 2;
    }
  }
  return code;
}

int load_text(qka_session *s, std::string_view text) {
  qka::ParseResult parsed = qka::parse_spec(text);
  if (!parsed.ok()) {
    std::ostringstream msg;
    for (const qka::ParseError &e : parsed.errors) {
      msg << "line " << e.line << ":" << e.col << ": " << e.message << "\n";
    }
    s->spec.reset();
    return fail(s, QKA_ERROR_PARSE, msg.str());
  }
  s->spec = std::move(parsed.spec);
  s->spec_hash = qka::fnv1a64(text);
  s->result.reset();
  s->last_error.clear();
  s->exit_code = 0;
  return QKA_OK;
}

}  // namespace

extern "C" {

const char *qka_version(void) { return "0.1.0"; }

qka_session *qka_session_create(void) { return new (std::nothrow) qka_session(); }

void qka_session_destroy(qka_session *s) { delete s; }

int qka_load_spec_text(qka_session *s, const char *text, size_t len) {
  if (!s) return QKA_ERROR_INVALID_ARGUMENT;
  if (!text) return fail(s, QKA_ERROR_INVALID_ARGUMENT, "null text");
  try {
    return load_text(s, std::string_view(text, len));
  } catch (const std::exception &e) {
    return fail(s, QKA_ERROR_INPUT, e.what());
  }
}

int qka_load_spec_file(qka_session *s, const char *path) {
  if (!s) return QKA_ERROR_INVALID_ARGUMENT;
  if (!path) return fail(s, QKA_ERROR_INVALID_ARGUMENT, "null path");
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return fail(s, QKA_ERROR_IO, std::string("cannot read '") + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_text(s, buf.str());
  } catch (const std::exception &e) {
    return fail(s, QKA_ERROR_INPUT, e.what());
  }
}

int qka_set_option(qka_session *s, const char *name, long long value) {
  if (!s) return QKA_ERROR_INVALID_ARGUMENT;
  if (!name) return fail(s, QKA_ERROR_INVALID_ARGUMENT, "null option name");
  const std::string key = name;
  if (key == "seed") {
    s->options.seed = static_cast<qka::u64>(value);
    return QKA_OK;
  }
  if (value < 0 || value > 1'000'000'000) {
    return fail(s, QKA_ERROR_INVALID_ARGUMENT,
                "option '" + key + "' out of range");
  }
  if (key == "depth") {
    s->options.depth = static_cast<int>(value);
    s->options.depth_set = true;
  } else if (key == "bound") {
    s->options.bound = static_cast<int>(value);
    s->options.bound_set = true;
  } else if (key == "margin") {
    s->options.margin = static_cast<int>(value);
    s->options.margin_set = true;
  } else if (key == "t_samples") {
    s->options.t_samples = static_cast<int>(value);
    s->options.t_samples_set = true;
  } else {
    return fail(s, QKA_ERROR_INVALID_ARGUMENT, "unknown option '" + key + "'");
  }
  return QKA_OK;
}

int qka_run(qka_session *s, const char *command) {
  if (!s) return QKA_ERROR_INVALID_ARGUMENT;
  if (!command) return fail(s, QKA_ERROR_INVALID_ARGUMENT, "null command");
  if (!s->spec) return fail(s, QKA_ERROR_STATE, "no problem definition loaded");
  try {
    s->result = qka::run_jobs(*s->spec, command, s->options, s->spec_hash);
  } catch (const qka::Error &e) {
    s->result.reset();
    return fail(s, QKA_ERROR_INPUT, e.what());
  } catch (const std::exception &e) {
    s->result.reset();
    return fail(s, QKA_ERROR_INPUT, e.what());
  }
  s->last_error.clear();
  if (!s->result->pass) {
    s->exit_code = 1;
    return QKA_ERROR_VERDICT_FAILED;
  }
  s->exit_code = 0;
  return QKA_OK;
}

const char *qka_report_text(qka_session *s) {
  if (!s || !s->result) return nullptr;
  return s->result->text.c_str();
}

const char *qka_report_json(qka_session *s) {
  if (!s || !s->result) return nullptr;
  return s->result->json.c_str();
}

const char *qka_last_error(qka_session *s) {
  if (!s) return "";
  return s->last_error.c_str();
}

int qka_exit_code(qka_session *s) {
  if (!s) return 2;
  return s->exit_code;
}

}  // extern "C"
