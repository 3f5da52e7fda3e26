#ifndef QKA_H
#define QKA_H

/* C interface to the qka verification kit. A session owns one parsed
 * problem definition plus the reports of the last run. All returned
 * strings are owned by the session and stay valid until the next call on
 * the same session or its destruction. Sessions are not thread-safe;
 * distinct sessions are independent. */

#include <stddef.h>

#if defined(_WIN32)
#define QKA_API __declspec(dllexport)
#else
#define QKA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qka_session qka_session;

enum {
  QKA_OK = 0,
  QKA_ERROR_INVALID_ARGUMENT = 1,
  QKA_ERROR_PARSE = 2,          /* malformed problem definition */
  QKA_ERROR_IO = 3,             /* file not readable */
  QKA_ERROR_INPUT = 4,          /* well-formed but unusable input (bounds, refs) */
  QKA_ERROR_VERDICT_FAILED = 5, /* run completed, some verdict failed */
  QKA_ERROR_STATE = 6           /* call out of order (no spec loaded, ...) */
};

QKA_API const char *qka_version(void);

QKA_API qka_session *qka_session_create(void);
QKA_API void qka_session_destroy(qka_session *s);

/* Load a problem definition. On QKA_ERROR_PARSE the diagnostics (one per
 * line, each with a line number) are available via qka_last_error. */
QKA_API int qka_load_spec_text(qka_session *s, const char *text, size_t len);
QKA_API int qka_load_spec_file(qka_session *s, const char *path);

/* Options: "depth", "bound", "margin", "t_samples", "seed". Values set here
 * override per-job parameters from the loaded definition. */
QKA_API int qka_set_option(qka_session *s, const char *name, long long value);

/* Run one command: a job kind ("axioms", "quotient", "fuse", "freefuse",
 * "amalgam-check", "tree", "jv-index", "commutators", "homotopy") or "all".
 * QKA_OK when every verdict passed, QKA_ERROR_VERDICT_FAILED when the run
 * completed with a failing verdict (reports are available either way). */
QKA_API int qka_run(qka_session *s, const char *command);

/* Reports of the last completed run. NULL before the first run. */
QKA_API const char *qka_report_text(qka_session *s);
QKA_API const char *qka_report_json(qka_session *s);

/* Message for the last failed call on this session; empty if none. */
QKA_API const char *qka_last_error(qka_session *s);

/* Process exit code the CLI maps results to: 0 pass, 1 verdict failure,
 * 2 input error. */
QKA_API int qka_exit_code(qka_session *s);

#ifdef __cplusplus
}
#endif

#endif /* QKA_H */
