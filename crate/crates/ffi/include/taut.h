#ifndef TAUT_H
#define TAUT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TautStatus {
  TAUT_STATUS_OK = 0,
  TAUT_STATUS_NULL_POINTER = 1,
  TAUT_STATUS_INVALID_UTF8 = 2,
  TAUT_STATUS_PARSE = 3,
  TAUT_STATUS_DOMAIN = 4,
  TAUT_STATUS_UNSUPPORTED = 5,
  TAUT_STATUS_OVERFLOW = 6,
  TAUT_STATUS_PANIC = 7,
} TautStatus;

typedef enum TautVerdict {
  TAUT_VERDICT_EXCELLENT = 0,
  TAUT_VERDICT_TOTAL_L_SPACE = 1,
} TautVerdict;

typedef struct TautPresentation TautPresentation;

typedef struct TautSeifert TautSeifert;

/**
 * Result of the horizontal foliation decision. `horizontal` is 1, 0, or -1
 * when the criterion does not apply. Witness fields are meaningful only
 * when `has_witness` is nonzero.
 */
typedef struct TautDecision {
  int32_t horizontal;
  uint8_t condition;
  uint8_t has_witness;
  uint8_t reversed;
  int64_t m;
  int64_t a;
  uint32_t first;
  uint32_t second;
} TautDecision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *taut_version(void);

/**
 * Message of the last failure on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *taut_last_error_message(void);

/**
 * Stable error code of the last failure on this thread, or null.
 */
const char *taut_last_error_code(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void taut_string_free(char *s);

/**
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` writable.
 */
enum TautStatus taut_seifert_parse(const char *text, struct TautSeifert **out);

/**
 * # Safety
 * `si` must be null or a handle from this library, freed at most once.
 */
void taut_seifert_free(struct TautSeifert *si);

/**
 * # Safety
 * `si` must be a live handle and `out` writable.
 */
enum TautStatus taut_seifert_normalize(const struct TautSeifert *si, struct TautSeifert **out);

/**
 * # Safety
 * `si` must be a live handle and `out` writable.
 */
enum TautStatus taut_seifert_reverse(const struct TautSeifert *si, struct TautSeifert **out);

/**
 * # Safety
 * `si` must be a live handle and `out` writable.
 */
enum TautStatus taut_seifert_to_string(const struct TautSeifert *si, char **out);

/**
 * Number of exceptional fibers.
 *
 * # Safety
 * `si` must be a live handle and `out` writable.
 */
enum TautStatus taut_seifert_fiber_count(const struct TautSeifert *si, size_t *out);

/**
 * Euler number as text, e.g. `-1/30`.
 *
 * # Safety
 * `si` must be a live handle and `out` writable.
 */
enum TautStatus taut_seifert_euler(const struct TautSeifert *si, char **out);

/**
 * Order of the first homology, or `infinite`.
 *
 * # Safety
 * `si` must be a live handle and `out` writable.
 */
enum TautStatus taut_seifert_h1(const struct TautSeifert *si, char **out);

/**
 * # Safety
 * `si` must be a live handle and `out` writable.
 */
enum TautStatus taut_seifert_decide(const struct TautSeifert *si, struct TautDecision *out);

/**
 * # Safety
 * `si` must be a live handle and `out` writable.
 */
enum TautStatus taut_seifert_excellence(const struct TautSeifert *si, enum TautVerdict *out);

/**
 * Verdict for the n-fold cyclic branched cover of T(p, q). `exception` is
 * set to 1..5 for the listed exceptions and 0 otherwise; it may be null.
 *
 * # Safety
 * `out` must be writable; `exception` null or writable.
 */
enum TautStatus taut_classify(uint64_t n,
                              uint64_t p,
                              uint64_t q,
                              enum TautVerdict *out,
                              uint8_t *exception);

/**
 * Seifert invariants of the n-fold cyclic branched cover of T(p, q);
 * `Unsupported` when no formula applies.
 *
 * # Safety
 * `out` must be writable.
 */
enum TautStatus taut_torus_cover_invariants(uint64_t n,
                                            uint64_t p,
                                            uint64_t q,
                                            struct TautSeifert **out);

/**
 * Parses `gens: a b; rel: a b a^-1`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` writable.
 */
enum TautStatus taut_presentation_parse(const char *text, struct TautPresentation **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum TautStatus taut_presentation_pretzel(int64_t k,
                                          int64_t l,
                                          int64_t m,
                                          struct TautPresentation **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum TautStatus taut_presentation_two_bridge(int64_t k,
                                             int64_t l,
                                             size_t n,
                                             struct TautPresentation **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, freed at most once.
 */
void taut_presentation_free(struct TautPresentation *p);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum TautStatus taut_presentation_to_string(const struct TautPresentation *p, char **out);

/**
 * Sign obstruction. `obstructed` receives 1 or 0; when `survivors` is not
 * null it receives the surviving assignments as `++--,+--+` (empty when
 * obstructed).
 *
 * # Safety
 * `p` must be a live handle, `obstructed` writable, `survivors` null or
 * writable.
 */
enum TautStatus taut_presentation_obstruction(const struct TautPresentation *p,
                                              size_t cap,
                                              uint8_t *obstructed,
                                              char **survivors);

/**
 * Runs one command line, given as a JSON array of arguments without the
 * program name, and returns the JSON document. `exit_code` receives the
 * exit status the command line would have produced.
 *
 * # Safety
 * `args_json` must be a valid NUL-terminated string; `out` and
 * `exit_code` writable.
 */
enum TautStatus taut_run_json(const char *args_json, char **out, int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TAUT_H */
