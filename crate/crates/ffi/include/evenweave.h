/* C ABI for the evenweave library.
 *
 * Systems are opaque handles created by ew_build and released by ew_free.
 * All functions are null-safe. Strings returned by ew_render_text are
 * owned by the caller and must be released with ew_string_free.
 */

#ifndef EVENWEAVE_H
#define EVENWEAVE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum EwStatus {
  EW_OK = 0,
  /* (v, t) violates the admissibility condition. */
  EW_NOT_ADMISSIBLE = 1,
  /* A required pointer argument was null. */
  EW_NULL_POINTER = 2,
  /* A verification (decomposition or certificate) check failed. */
  EW_VERIFY_FAILED = 3,
  /* The search budget was exhausted before a definite answer. */
  EW_BUDGET_EXCEEDED = 4,
} EwStatus;

/* Opaque: a built system together with its certificate. */
typedef struct EwSystem EwSystem;

/* Builds an unparalleled CS(v, 2t). On success stores a fresh handle in
 * *out and returns EW_OK; *out is untouched otherwise. */
EwStatus ew_build(uint32_t v, uint32_t t, EwSystem **out);

/* Releases a handle returned by ew_build. Null is a no-op. */
void ew_free(EwSystem *handle);

/* Number of cycles in the system, or 0 for a null handle. */
uint64_t ew_cycle_count(const EwSystem *handle);

/* Number of vertices, or 0 for a null handle. */
uint32_t ew_order(const EwSystem *handle);

/* Renders the system as its canonical text document. Returns a fresh
 * NUL-terminated string (release with ew_string_free) or null for a null
 * handle. */
char *ew_render_text(const EwSystem *handle);

/* Releases a string returned by ew_render_text. Null is a no-op. */
void ew_string_free(char *s);

/* Re-checks the edge decomposition of the handle's system. */
EwStatus ew_verify(const EwSystem *handle);

/* Re-validates the certificate produced alongside the system. */
EwStatus ew_certify(const EwSystem *handle);

/* Exhaustive parallel-class search with a node budget. On a definite
 * answer stores 1 (found) or 0 (none) in *found and returns EW_OK. */
EwStatus ew_hunt(const EwSystem *handle, uint64_t max_nodes, int32_t *found);

#ifdef __cplusplus
}
#endif

#endif /* EVENWEAVE_H */
