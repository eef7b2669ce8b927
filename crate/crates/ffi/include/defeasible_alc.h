#ifndef DEFEASIBLE_ALC_H
#define DEFEASIBLE_ALC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DalcMethod {
  DALC_METHOD_CLASSICAL = 0,
  DALC_METHOD_RC = 1,
  DALC_METHOD_MP = 2,
  DALC_METHOD_LEX = 3,
  DALC_METHOD_ORACLE_RC = 4,
  DALC_METHOD_ORACLE_S = 5,
} DalcMethod;

/**
 * Result of every fallible call.
 */
typedef enum DalcStatus {
  DALC_STATUS_OK = 0,
  /**
   * A null pointer, invalid UTF-8 or an out-of-range method.
   */
  DALC_STATUS_INVALID_ARGUMENT = 1,
  DALC_STATUS_PARSE = 2,
  DALC_STATUS_INCONSISTENT_ABOX = 3,
  DALC_STATUS_RESOURCE_LIMIT = 4,
  /**
   * The KB or query is outside the oracle's fragment or bounds.
   */
  DALC_STATUS_ORACLE_BOUNDS = 5,
  DALC_STATUS_PANIC = 6,
  /**
   * Unsupported query form, or an oracle that found no model.
   */
  DALC_STATUS_FAILED = 7,
} DalcStatus;

/**
 * A parsed knowledge base with its ranking.
 */
typedef struct DalcKb DalcKb;

/**
 * Resource bounds; obtain defaults from `dalc_limits_default`.
 */
typedef struct DalcLimits {
  size_t max_nodes;
  size_t max_atoms;
  size_t max_domain;
} DalcLimits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

struct DalcLimits dalc_limits_default(void);

/**
 * Parses `text`, checks ABox consistency and computes the ranking.
 * `limits` may be null for the defaults. On success `*out` receives a
 * handle to free with `dalc_kb_free`; on failure it is set to null.
 *
 * # Safety
 * `text` must be a NUL-terminated string, `limits` null or valid, and `out`
 * a valid pointer.
 */
enum DalcStatus dalc_kb_parse(const char *text,
                              const struct DalcLimits *limits,
                              struct DalcKb **out);

/**
 * # Safety
 * `kb` is null or a handle from `dalc_kb_parse` not yet freed.
 */
void dalc_kb_free(struct DalcKb *kb);

/**
 * Parses `text` and reports whether its ABox is consistent with the strict
 * axioms, without computing a ranking.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `consistent` a valid pointer.
 */
enum DalcStatus dalc_check(const char *text, bool *consistent);

/**
 * Rank of `concept`; `*rank` is -1 for the infinite rank.
 *
 * # Safety
 * `kb` must be a live handle, `concept` a NUL-terminated string and `rank`
 * a valid pointer.
 */
enum DalcStatus dalc_concept_rank(const struct DalcKb *kb, const char *concept, int64_t *rank);

/**
 * Decides `query` (`C <= D` or `T(C) <= D`) with `method`, a `DalcMethod`
 * value.
 *
 * # Safety
 * `kb` must be a live handle, `query` a NUL-terminated string and
 * `entailed` a valid pointer.
 */
enum DalcStatus dalc_entails(const struct DalcKb *kb,
                             uint32_t method,
                             const char *query,
                             bool *entailed);

/**
 * Like `dalc_entails`, but returns the full result (ranks, bases and
 * per-base verdicts) as a JSON object in `*json`.
 *
 * # Safety
 * As `dalc_entails`; `json` must be a valid pointer.
 */
enum DalcStatus dalc_entails_json(const struct DalcKb *kb,
                                  uint32_t method,
                                  const char *query,
                                  char **json);

/**
 * The maximal bases for `concept` under `method` (`Mp` or `Lex`) as a JSON
 * object whose `bases` field is an array of arrays of printed inclusions.
 *
 * # Safety
 * `kb` must be a live handle, `concept` a NUL-terminated string and `json`
 * a valid pointer.
 */
enum DalcStatus dalc_bases_json(const struct DalcKb *kb,
                                uint32_t method,
                                const char *concept,
                                char **json);

/**
 * # Safety
 * `s` is null or a string returned by this library, not yet freed.
 */
void dalc_string_free(char *s);

/**
 * Message of the last failed call on this thread, or the empty string.
 * Valid until the next call into the library on the same thread.
 */
const char *dalc_last_error_message(void);

const char *dalc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEFEASIBLE_ALC_H */
