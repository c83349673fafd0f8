#ifndef RANK2_H
#define RANK2_H

/* Generated by cbindgen from rank2-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every entry point. `NotIsomorphic` mirrors the
// CLI's exit-code convention for mathematical negatives and is not an
// error.
typedef enum Rank2Status {
  RANK2_STATUS_OK = 0,
  RANK2_STATUS_NOT_ISOMORPHIC = 1,
  RANK2_STATUS_USAGE_ERROR = 2,
  RANK2_STATUS_INTERNAL_ERROR = 3,
  RANK2_STATUS_NULL_ARGUMENT = 4,
  RANK2_STATUS_UNDECIDED = 5,
} Rank2Status;

// Opaque ring handle.
typedef struct Rank2Ring Rank2Ring;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message for the most recent non-OK status on this thread, or null.
// The pointer stays valid until the next failing call on the same thread;
// do not free it.
const char *rank2_last_error_message(void);

// Frees a string returned by this library.
//
// # Safety
// `s` must be a pointer previously returned by a `rank2_*` function that
// documents string ownership transfer, and must not have been freed.
void rank2_string_free(char *s);

// Parses a ring spec (e.g. `"zmod(4)"`, `"gf(3,2,[1,0,1])"`) into a handle.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be a valid pointer.
enum Rank2Status rank2_ring_parse(const char *spec, struct Rank2Ring **out);

// Releases a ring handle.
//
// # Safety
// `ring` must come from [`rank2_ring_parse`] and must not be used again.
void rank2_ring_free(struct Rank2Ring *ring);

// Canonical text form of the ring spec; free with [`rank2_string_free`].
//
// # Safety
// `ring` must be a live handle; `out` must be valid.
enum Rank2Status rank2_ring_canonical(const struct Rank2Ring *ring, char **out);

// Number of elements; `UsageError` for the infinite `zsqrt` rings.
//
// # Safety
// `ring` must be a live handle; `out` must be valid.
enum Rank2Status rank2_ring_order(const struct Rank2Ring *ring, uint64_t *out);

// Moduli table of a property (`"F"`, `"SF"`, `"R"`, `"SR"`, `"AS"`,
// `"SAS"`) as JSON; free with [`rank2_string_free`].
//
// # Safety
// `ring` must be a live handle; `property` a NUL-terminated string; `out`
// valid.
enum Rank2Status rank2_classify_json(const struct Rank2Ring *ring,
                                     const char *property,
                                     char **out);

// Same table as CSV text.
//
// # Safety
// As for [`rank2_classify_json`].
enum Rank2Status rank2_classify_csv(const struct Rank2Ring *ring, const char *property, char **out);

// Isomorphism decision between `(a, b)` and `(c, d)`; element literals are
// JSON. Returns `Ok` (isomorphic), `NotIsomorphic`, or `Undecided` (only
// over `zsqrt` rings); `out_json` carries
// `{"isomorphic": ..., "solutions": [...], "certificate": ...}` in every
// decided case. Free with [`rank2_string_free`].
//
// # Safety
// `ring` must be a live handle; the element strings NUL-terminated; `out`
// valid.
enum Rank2Status rank2_iso_json(const struct Rank2Ring *ring,
                                const char *a,
                                const char *b,
                                const char *c,
                                const char *d,
                                char **out_json);

// Order of the automorphism group of `(a, b)`.
//
// # Safety
// `ring` must be a live handle; elements NUL-terminated; `out` valid.
enum Rank2Status rank2_aut_order(const struct Rank2Ring *ring,
                                 const char *a,
                                 const char *b,
                                 uint64_t *out);

// The `Z[sqrt(5)]` counterexample as JSON. Returns `NotIsomorphic` on the
// expected (proven) outcome. Free the string with [`rank2_string_free`].
//
// # Safety
// `out_json` must be valid.
enum Rank2Status rank2_counterexample_json(char **out_json);

// Runs verification suites over comma-separated ring specs (null or empty
// for the default battery). `suite` may be a single suite name or `"all"`.
// Returns `Ok` when every check passes, `InternalError` otherwise, with
// the full line report in `out_report`.
//
// # Safety
// `suite` must be NUL-terminated; `rings_csv` may be null; `out_report`
// must be valid.
enum Rank2Status rank2_verify(const char *rings_csv,
                              const char *suite,
                              uint64_t seed,
                              char **out_report);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RANK2_H */
