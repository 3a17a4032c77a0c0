#ifndef LOCALDIM_H
#define LOCALDIM_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every function.
 */
typedef enum LdStatus {
  LD_STATUS_OK = 0,
  /**
   * A verification found a violation.
   */
  LD_STATUS_VIOLATION = 1,
  /**
   * Input text failed to parse.
   */
  LD_STATUS_PARSE = 2,
  /**
   * A solver budget or time limit was exceeded.
   */
  LD_STATUS_BUDGET = 3,
  /**
   * An argument was out of range or a construction precondition failed.
   */
  LD_STATUS_INVALID_ARGUMENT = 4,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  LD_STATUS_NULL_POINTER = 5,
  /**
   * The library panicked; this is a bug.
   */
  LD_STATUS_PANIC = 6,
} LdStatus;

/**
 * Opaque poset handle.
 */
typedef struct LdPoset LdPoset;

/**
 * Opaque realizer handle (a family of partial linear extensions).
 */
typedef struct LdRealizer LdRealizer;

/**
 * Solver limits. Zero fields take the solver's default.
 */
typedef struct LdBudget {
  size_t max_size;
  uint64_t node_limit;
  uint64_t time_limit_ms;
} LdBudget;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on this thread.
 */
const char *ld_last_error_message(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ld_string_free(char *s);

/**
 * Parses a poset from its text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum LdStatus ld_poset_parse(const char *text, struct LdPoset **out);

/**
 * Generates a named family: `chain`, `antichain`, `standard` or `boolean`,
 * with parameter `n`.
 *
 * # Safety
 * `family` must be a NUL-terminated string and `out` writable.
 */
enum LdStatus ld_poset_generate(const char *family, size_t n, struct LdPoset **out);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t ld_poset_len(const struct LdPoset *p);

/**
 * Writes the poset in its text format.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum LdStatus ld_poset_to_text(const struct LdPoset *p, char **out);

/**
 * # Safety
 * `p` must be null or a live handle, which is invalid afterwards.
 */
void ld_poset_free(struct LdPoset *p);

/**
 * Exact dimension. `budget` may be null; `witness` may be null, otherwise
 * it receives a realizer of linear extensions.
 *
 * # Safety
 * Pointers must be null where allowed, live, or writable.
 */
enum LdStatus ld_exact_dim(const struct LdPoset *p,
                           const struct LdBudget *budget,
                           size_t *value,
                           struct LdRealizer **witness);

/**
 * Exact local dimension. `budget` and `witness` may be null.
 *
 * # Safety
 * Pointers must be null where allowed, live, or writable.
 */
enum LdStatus ld_exact_ldim(const struct LdPoset *p,
                            const struct LdBudget *budget,
                            size_t *value,
                            struct LdRealizer **witness);

/**
 * Parses a realizer over a ground set of `n` elements.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum LdStatus ld_realizer_parse(const char *text, size_t n, struct LdRealizer **out);

/**
 * Writes the realizer in its text format.
 *
 * # Safety
 * `r` must be a live handle and `out` writable.
 */
enum LdStatus ld_realizer_to_text(const struct LdRealizer *r, char **out);

/**
 * Largest element frequency, or 0 for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
size_t ld_realizer_mu(const struct LdRealizer *r);

/**
 * # Safety
 * `r` must be null or a live handle, which is invalid afterwards.
 */
void ld_realizer_free(struct LdRealizer *r);

/**
 * Checks `r` as a local realizer of `p`. Returns `Ok` and writes the
 * maximum frequency to `mu` (which may be null), or `Violation` with the
 * reason in the last error message.
 *
 * # Safety
 * `p` and `r` must be live handles; `mu` null or writable.
 */
enum LdStatus ld_verify_local_realizer(const struct LdPoset *p,
                                       const struct LdRealizer *r,
                                       size_t *mu);

/**
 * Local realizer of a poset of height at most two from a biclique
 * partition of its critical pairs.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum LdStatus ld_height2_local_realizer(const struct LdPoset *p, struct LdRealizer **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOCALDIM_H */
