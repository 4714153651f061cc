#ifndef RELCOMP_H
#define RELCOMP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum RcStatus {
  RC_STATUS_OK = 0,
  RC_STATUS_NULL_POINTER = 1,
  RC_STATUS_INVALID_ARGUMENT = 2,
  RC_STATUS_HYPOTHESIS = 3,
  RC_STATUS_RESOURCE_BOUND = 4,
  RC_STATUS_PARSE = 5,
  RC_STATUS_NOT_FAITHFUL = 6,
  RC_STATUS_ARITHMETIC = 7,
  RC_STATUS_PANIC = 8,
} RcStatus;

// A group acting on the m-subspaces, with cached stabilizer data.
typedef struct RcAction RcAction;

// A finite field.
typedef struct RcField RcField;

// A group `SL_n(q) ⊴ H ≤ ΓL_n(q)`.
typedef struct RcGroup RcGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on this thread.
const char *rc_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void rc_string_free(char *s);

// `GF(p^f)`.
//
// # Safety
// `out` must be writable.
enum RcStatus rc_field_new(uint64_t p, uint32_t f, struct RcField **out);

// Field order `q`.
//
// # Safety
// `field` must be a live handle or null (which yields 0).
uint32_t rc_field_order(const struct RcField *field);

// # Safety
// `field` must come from [`rc_field_new`] and not be freed twice.
void rc_field_free(struct RcField *field);

// A group given by preset name (`PSL`, `PGL`, `PSigmaL`, `PGammaL`),
// `param:d,e` or `file:PATH`.
//
// # Safety
// `spec` must be a NUL-terminated string, `field` a live handle, `out` writable.
enum RcStatus rc_group_new(const char *spec,
                           size_t n,
                           const struct RcField *field,
                           struct RcGroup **out);

// # Safety
// `group` must come from [`rc_group_new`] and not be freed twice.
void rc_group_free(struct RcGroup *group);

// Materializes the action on m-subspaces.
//
// # Safety
// `group` must be a live handle and `out` writable.
enum RcStatus rc_action_new(const struct RcGroup *group, size_t m, struct RcAction **out);

// Number of points acted on.
//
// # Safety
// `action` must be a live handle or null (which yields 0).
size_t rc_action_degree(const struct RcAction *action);

// # Safety
// `action` must come from [`rc_action_new`] and not be freed twice.
void rc_action_free(struct RcAction *action);

// Relational complexity report as JSON. `budget_ms = 0` means no budget.
//
// # Safety
// `action` must be a live handle and `out_json` writable.
enum RcStatus rc_compute_json(const struct RcAction *action,
                              uint64_t budget_ms,
                              bool with_ibase,
                              char **out_json);

// # Safety
// `action` must be a live handle and `out` writable.
enum RcStatus rc_height(const struct RcAction *action, size_t *out);

// # Safety
// `action` must be a live handle and `out` writable.
enum RcStatus rc_ibase(const struct RcAction *action, size_t *out);

// Number of distinct prime divisors of `k ≥ 1`.
//
// # Safety
// `out` must be writable.
enum RcStatus rc_omega_primes(uint64_t k, uint32_t *out);

// Closed-form bounds `{lower, upper, sources, diagnostic}` as JSON.
//
// # Safety
// `group` must be a live handle and `out_json` writable.
enum RcStatus rc_bounds_json(const struct RcGroup *group, size_t m, char **out_json);

// Builds the witness package named by `tag` for `group` and writes its JSON.
//
// # Safety
// `tag` must be a NUL-terminated string, `group` a live handle, `out_json` writable.
enum RcStatus rc_witness_json(const char *tag,
                              const struct RcGroup *group,
                              size_t m,
                              char **out_json);

// Verifies a package given as JSON. `out_passed` receives the verdict and
// `out_report` (may be null) the full report as JSON.
//
// # Safety
// `package_json` must be a NUL-terminated string and `out_passed` writable;
// `out_report` must be writable or null.
enum RcStatus rc_verify_json(const char *package_json, bool *out_passed, char **out_report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELCOMP_H */
