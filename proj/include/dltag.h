/* dltag -- discourse-level lexicalized TAG engine.
 *
 * C API over the analysis pipeline: opaque handles, integer status codes,
 * UTF-8 strings owned by the handle that produced them. A dltag_engine
 * holds the connective lexicon and is immutable during analysis, so one
 * engine may serve concurrent analyses from different threads; each
 * dltag_analysis is confined to the thread that created it.
 */

#ifndef DLTAG_H
#define DLTAG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DLTAG_API __declspec(dllexport)
#else
#define DLTAG_API __attribute__((visibility("default")))
#endif

typedef struct dltag_engine dltag_engine_t;
typedef struct dltag_analysis dltag_analysis_t;

typedef enum {
  DLTAG_OK = 0,
  DLTAG_ERR_IO = 1,
  DLTAG_ERR_PARSE = 2,
  DLTAG_ERR_ANALYSIS = 3
} dltag_status_t;

typedef enum {
  DLTAG_MODE_DERIVE = 0,
  DLTAG_MODE_COMPOSE = 1,
  DLTAG_MODE_RESOLVE = 2,
  DLTAG_MODE_CHECK_CROSSING = 3
} dltag_mode_t;

typedef enum {
  DLTAG_EMIT_LF = 0,
  DLTAG_EMIT_DERIVATION = 1,
  DLTAG_EMIT_DERIVED_DOT = 2,
  DLTAG_EMIT_DERIVATION_DOT = 3,
  DLTAG_EMIT_TRACE = 4,
  DLTAG_EMIT_CROSSING = 5
} dltag_emit_t;

DLTAG_API const char *dltag_version(void);

/* Engine with the built-in connective lexicon. Never returns NULL except
 * on allocation failure. */
DLTAG_API dltag_engine_t *dltag_engine_new(void);
DLTAG_API void dltag_engine_free(dltag_engine_t *engine);

/* Merges a lexicon file over the built-in entries. */
DLTAG_API dltag_status_t dltag_engine_load_lexicon(dltag_engine_t *engine,
                                                   const char *path);

/* Plausibility predicate applied during resolution ("" clears it; a
 * COMPAT record in the input still applies when none is set here). */
DLTAG_API dltag_status_t dltag_engine_set_compat(dltag_engine_t *engine,
                                                 const char *name);

/* Message for the engine's most recent failure. Owned by the engine. */
DLTAG_API const char *dltag_engine_last_error(const dltag_engine_t *engine);

/* Analyze a discourse token stream (see README for the format). Returns
 * NULL on failure; consult dltag_engine_last_error. */
DLTAG_API dltag_analysis_t *dltag_analyze(dltag_engine_t *engine, const char *text,
                                          dltag_mode_t mode);
DLTAG_API dltag_analysis_t *dltag_analyze_file(dltag_engine_t *engine,
                                               const char *path, dltag_mode_t mode);
DLTAG_API void dltag_analysis_free(dltag_analysis_t *analysis);

/* Emitted artifact, or NULL when the mode did not produce it. The string
 * is owned by the analysis. */
DLTAG_API const char *dltag_analysis_emit(dltag_analysis_t *analysis,
                                          dltag_emit_t what);

/* Number of crossing structural dependencies (check-crossing / resolve). */
DLTAG_API int dltag_analysis_violations(const dltag_analysis_t *analysis);

#ifdef __cplusplus
}
#endif

#endif /* DLTAG_H */
