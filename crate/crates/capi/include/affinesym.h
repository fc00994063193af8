#ifndef AFFINESYM_H
#define AFFINESYM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Call outcome. `Ok` is zero; everything else names the first violated
// precondition.
typedef enum AfsStatus {
  AFS_STATUS_OK = 0,
  AFS_STATUS_NULL_POINTER,
  AFS_STATUS_INVALID_UTF8,
  AFS_STATUS_PARSE_ERROR,
  AFS_STATUS_RANK_TOO_SMALL,
  AFS_STATUS_INDEX_OUT_OF_RANGE,
  AFS_STATUS_RANK_MISMATCH,
  AFS_STATUS_RESIDUE_COLLISION,
  AFS_STATUS_WINDOW_SUM,
  AFS_STATUS_NOT_REDUCED,
  AFS_STATUS_NOT_FULLY_COMMUTATIVE,
  AFS_STATUS_CLASS_CAP_EXCEEDED,
  AFS_STATUS_BUDGET_EXCEEDED,
  AFS_STATUS_INVALID_TRIPLE,
  AFS_STATUS_BUFFER_TOO_SMALL,
  AFS_STATUS_INTERNAL,
} AfsStatus;

// Opaque extended affine permutation handle.
typedef struct AfsExt AfsExt;

// Opaque affine permutation handle.
typedef struct AfsPerm AfsPerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *afs_version(void);

// Creates the identity of rank `n` (n >= 3).
//
// # Safety
// `out` must be a valid pointer.
enum AfsStatus afs_perm_identity(size_t n, struct AfsPerm **out);

// Creates the generator s_i, 1 <= i <= n.
//
// # Safety
// `out` must be a valid pointer.
enum AfsStatus afs_perm_generator(size_t n, size_t i, struct AfsPerm **out);

// Creates an element from a window of `len` entries.
//
// # Safety
// `values` must point to `len` readable entries; `out` must be valid.
enum AfsStatus afs_perm_from_window(const int64_t *values, size_t len, struct AfsPerm **out);

// Parses window notation such as `[2,1,3]`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be valid.
enum AfsStatus afs_perm_parse(const char *text, struct AfsPerm **out);

// Copies a handle.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
enum AfsStatus afs_perm_clone(const struct AfsPerm *p, struct AfsPerm **out);

// Releases a handle; null is ignored.
//
// # Safety
// `p` must be null or a handle not freed before.
void afs_perm_free(struct AfsPerm *p);

// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_perm_rank(const struct AfsPerm *p, size_t *out);

// Copies the window into `buf`, which must hold exactly `len` = rank
// entries.
//
// # Safety
// `p` must be a live handle; `buf` must point to `len` writable entries.
enum AfsStatus afs_perm_window(const struct AfsPerm *p, int64_t *buf, size_t len);

// Image of `t` under the permutation.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_perm_apply(const struct AfsPerm *p, int64_t t, int64_t *out);

// Product a * b (a applied after b). Ranks must match.
//
// # Safety
// `a` and `b` must be live handles; `out` must be valid.
enum AfsStatus afs_perm_compose(const struct AfsPerm *a,
                                const struct AfsPerm *b,
                                struct AfsPerm **out);

// # Safety
// `p` must be a live handle; `out` must be valid.
enum AfsStatus afs_perm_inverse(const struct AfsPerm *p, struct AfsPerm **out);

// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_perm_length(const struct AfsPerm *p, size_t *out);

// # Safety
// `a`, `b` and `out` must be valid pointers.
enum AfsStatus afs_perm_equal(const struct AfsPerm *a, const struct AfsPerm *b, bool *out);

// True iff w(i) > w(i+1); i must lie in 1..=n.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_perm_is_right_descent(const struct AfsPerm *p, size_t i, bool *out);

// Writes the canonical reduced word into `buf` (capacity `cap` letters)
// and stores the letter count in `written`. Returns `BufferTooSmall`
// leaving `written` at the required size when `cap` is insufficient.
//
// # Safety
// `p` and `written` must be valid; `buf` must hold `cap` entries.
enum AfsStatus afs_perm_canonical_word(const struct AfsPerm *p,
                                       size_t *buf,
                                       size_t cap,
                                       size_t *written);

// Writes the window notation as a NUL-terminated string. `written`
// receives the byte count including the terminator.
//
// # Safety
// `p` and `written` must be valid; `buf` must hold `cap` bytes.
enum AfsStatus afs_perm_format(const struct AfsPerm *p, char *buf, size_t cap, size_t *written);

// Full commutativity via the commutation class of the canonical word.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_perm_is_fully_commutative(const struct AfsPerm *p, bool *out);

// 321-avoidance via the bounded scan.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_perm_is_321_avoiding(const struct AfsPerm *p, bool *out);

// Inversion pair criterion.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_perm_pair_criterion(const struct AfsPerm *p, bool *out);

// Inversion-set root criterion.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_perm_root_criterion(const struct AfsPerm *p, bool *out);

// Least 321 instance, if any: `found` reports whether `a`, `b`, `c` were
// written.
//
// # Safety
// All pointers must be valid.
enum AfsStatus afs_perm_find_321(const struct AfsPerm *p,
                                 int64_t *a,
                                 int64_t *b,
                                 int64_t *c,
                                 bool *found);

// Writes the parts of the cell partition into `buf` and their count into
// `written`; two-call protocol as for `afs_perm_canonical_word`.
//
// # Safety
// `p` and `written` must be valid; `buf` must hold `cap` entries.
enum AfsStatus afs_perm_sigma(const struct AfsPerm *p, uint32_t *buf, size_t cap, size_t *written);

// The rotation rho of rank n, window [2, ..., n+1].
//
// # Safety
// `out` must be a valid pointer.
enum AfsStatus afs_ext_rho(size_t n, struct AfsExt **out);

// Extended identity of rank n.
//
// # Safety
// `out` must be a valid pointer.
enum AfsStatus afs_ext_identity(size_t n, struct AfsExt **out);

// Extended element from a window; the shift is read off the window sum.
//
// # Safety
// `values` must point to `len` readable entries; `out` must be valid.
enum AfsStatus afs_ext_from_window(const int64_t *values, size_t len, struct AfsExt **out);

// rho^shift * body.
//
// # Safety
// `body` must be a live handle; `out` must be valid.
enum AfsStatus afs_ext_from_parts(int64_t shift, const struct AfsPerm *body, struct AfsExt **out);

// Releases a handle; null is ignored.
//
// # Safety
// `p` must be null or a handle not freed before.
void afs_ext_free(struct AfsExt *p);

// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_ext_shift(const struct AfsExt *p, int64_t *out);

// Clones the body (the affine part) of the decomposition.
//
// # Safety
// `p` must be a live handle; `out` must be valid.
enum AfsStatus afs_ext_body(const struct AfsExt *p, struct AfsPerm **out);

// Copies the window into `buf` of `len` >= rank entries.
//
// # Safety
// `p` must be a live handle; `buf` must hold `len` entries.
enum AfsStatus afs_ext_window(const struct AfsExt *p, int64_t *buf, size_t len);

// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_ext_apply(const struct AfsExt *p, int64_t t, int64_t *out);

// Product a * b. Ranks must match.
//
// # Safety
// `a` and `b` must be live handles; `out` must be valid.
enum AfsStatus afs_ext_compose(const struct AfsExt *a, const struct AfsExt *b, struct AfsExt **out);

// # Safety
// `p` must be a live handle; `out` must be valid.
enum AfsStatus afs_ext_inverse(const struct AfsExt *p, struct AfsExt **out);

// Coxeter length of the body.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_ext_length(const struct AfsExt *p, size_t *out);

// # Safety
// `a`, `b` and `out` must be valid pointers.
enum AfsStatus afs_ext_equal(const struct AfsExt *a, const struct AfsExt *b, bool *out);

// 321-avoidance, delegated to the body.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_ext_is_321_avoiding(const struct AfsExt *p, bool *out);

// Full commutativity, delegated to the body.
//
// # Safety
// `p` and `out` must be valid pointers.
enum AfsStatus afs_ext_is_fully_commutative(const struct AfsExt *p, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFFINESYM_H */
