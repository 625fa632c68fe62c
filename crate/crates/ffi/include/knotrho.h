#ifndef KNOTRHO_H
#define KNOTRHO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum KnotrhoStatus {
  KNOTRHO_STATUS_OK = 0,
  KNOTRHO_STATUS_NULL_POINTER = 1,
  KNOTRHO_STATUS_INVALID_MATRIX = 2,
  KNOTRHO_STATUS_INVALID_ARGUMENT = 3,
  KNOTRHO_STATUS_PRECONDITION = 4,
  KNOTRHO_STATUS_INTERNAL = 5,
  KNOTRHO_STATUS_PANIC = 6,
} KnotrhoStatus;

// Opaque Seifert matrix handle.
typedef struct KnotrhoSeifert KnotrhoSeifert;

// The message for the last failing call on this thread. Valid until the
// next failing call; never null.
const char *knotrho_last_error(void);

// Builds a handle from `dim * dim` row-major entries. `dim = 0` (with any
// `entries`) gives the unknot.
//
// # Safety
// `entries` must point to `dim * dim` readable values when `dim > 0`;
// `out` must be writable.
enum KnotrhoStatus knotrho_seifert_new(const int64_t *entries,
                                       size_t dim,
                                       struct KnotrhoSeifert **out);

// The genus-one knot `J_m` with matrix `[[1, 0], [1, 2m]]`.
//
// # Safety
// `out` must be writable.
enum KnotrhoStatus knotrho_seifert_jm(uint64_t m, struct KnotrhoSeifert **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void knotrho_seifert_free(struct KnotrhoSeifert *s);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void knotrho_string_free(char *s);

// # Safety
// `s` must be a live handle and `out` writable.
enum KnotrhoStatus knotrho_seifert_genus(const struct KnotrhoSeifert *s, size_t *out);

// Canonical Alexander polynomial string, e.g. `2t^-1-3+2t`.
//
// # Safety
// `s` must be a live handle and `out` writable.
enum KnotrhoStatus knotrho_alexander(const struct KnotrhoSeifert *s, char **out);

// `|Delta(-1)|` as a decimal string (it may exceed 64 bits).
//
// # Safety
// `s` must be a live handle and `out` writable.
enum KnotrhoStatus knotrho_determinant(const struct KnotrhoSeifert *s, char **out);

// # Safety
// `s` must be a live handle and `out` writable.
enum KnotrhoStatus knotrho_arf(const struct KnotrhoSeifert *s, uint8_t *out);

// Signature of `S + S^T`.
//
// # Safety
// `s` must be a live handle and `out` writable.
enum KnotrhoStatus knotrho_ordinary_signature(const struct KnotrhoSeifert *s, int64_t *out);

// Levine-Tristram signature at `omega = x + i sqrt(1 - x^2)` with
// `x = num / den` in `[-1, 1]`.
//
// # Safety
// `s` must be a live handle and `out` writable.
enum KnotrhoStatus knotrho_signature_at(const struct KnotrhoSeifert *s,
                                        int64_t num,
                                        int64_t den,
                                        int64_t *out);

// Integrated signature. `lo` and `hi` receive a floating-point enclosure
// (rounded outward from an exact one of width at most `tol`); `symbolic`,
// if not null, receives the closed form.
//
// # Safety
// `s` must be a live handle; `lo` and `hi` writable; `symbolic` null or
// writable.
enum KnotrhoStatus knotrho_rho(const struct KnotrhoSeifert *s,
                               double tol,
                               double *lo,
                               double *hi,
                               char **symbolic);

// Block sum, modelling connected sum.
//
// # Safety
// `a` and `b` must be live handles and `out` writable.
enum KnotrhoStatus knotrho_connected_sum(const struct KnotrhoSeifert *a,
                                         const struct KnotrhoSeifert *b,
                                         struct KnotrhoSeifert **out);

// Concordance inverse `-S^T`.
//
// # Safety
// `s` must be a live handle and `out` writable.
enum KnotrhoStatus knotrho_inverse(const struct KnotrhoSeifert *s, struct KnotrhoSeifert **out);

// Number of nonzero exponent vectors with entries in `[-bound, bound]`
// whose power product of the first `n` family units is real.
//
// # Safety
// `violations` must be writable.
enum KnotrhoStatus knotrho_independence(size_t n, uint32_t bound, size_t *violations);

#endif  /* KNOTRHO_H */
