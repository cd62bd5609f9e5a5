#ifndef KRAWTCHOUK_H
#define KRAWTCHOUK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum KrStatus {
  KR_STATUS_OK = 0,
  KR_STATUS_NULL_POINTER = 1,
  KR_STATUS_INVALID_ARGUMENT = 2,
  KR_STATUS_DOMAIN = 3,
  KR_STATUS_DIMENSION = 4,
  KR_STATUS_INVARIANT = 5,
  KR_STATUS_RESOURCE = 6,
  KR_STATUS_PARSE = 7,
  KR_STATUS_INTERNAL = 8,
} KrStatus;

/**
 * Which matrix of a basis to copy out.
 */
typedef enum KrBasisPart {
  KR_BASIS_PART_PHI = 0,
  KR_BASIS_PART_WEIGHTS = 1,
  KR_BASIS_PART_NORMS = 2,
  KR_BASIS_PART_INVERSE = 3,
} KrBasisPart;

/**
 * Direction of a basis transform.
 */
typedef enum KrDirection {
  /**
   * Φ · data
   */
  KR_DIRECTION_FORWARD = 0,
  /**
   * data · Φ
   */
  KR_DIRECTION_LEFT = 1,
  /**
   * Φ⁻¹ · data
   */
  KR_DIRECTION_INVERSE = 2,
} KrDirection;

/**
 * Univariate Kravchuk basis at a fixed level and probability.
 */
typedef struct KrBasis KrBasis;

/**
 * Dense matrix of exact rationals.
 */
typedef struct KrMatrix KrMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL after a success.
 * The pointer stays valid until the next library call on this thread.
 */
const char *kr_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string obtained from this library, not yet freed.
 */
void kr_string_free(char *s);

/**
 * Builds the basis of level `level` for probability `p` (a rational string in (0, 1)).
 *
 * # Safety
 * `p` must be NULL or a valid C string; `out` must be NULL or writable.
 */
enum KrStatus kr_basis_new(size_t level, const char *p, struct KrBasis **out);

/**
 * # Safety
 * `basis` must be NULL or a handle from `kr_basis_new`, not yet freed.
 */
void kr_basis_free(struct KrBasis *basis);

/**
 * Copies one of the basis matrices into a new handle.
 *
 * # Safety
 * `basis` must be a live handle; `out` must be writable.
 */
enum KrStatus kr_basis_matrix(const struct KrBasis *basis,
                              enum KrBasisPart part,
                              struct KrMatrix **out);

/**
 * Writes det Φ as a string.
 *
 * # Safety
 * `basis` must be a live handle; `out` must be writable.
 */
enum KrStatus kr_basis_determinant(const struct KrBasis *basis, char **out);

/**
 * Checks orthogonality, the involution identity and agreement of the two
 * inverse formulas. `*holds` is set to whether all of them hold exactly.
 *
 * # Safety
 * `basis` must be a live handle; `holds` must be writable.
 */
enum KrStatus kr_basis_verify(const struct KrBasis *basis, bool *holds);

/**
 * Transforms every column of `data` (or every row, for `Left`).
 *
 * # Safety
 * `basis` and `data` must be live handles; `out` must be writable.
 */
enum KrStatus kr_basis_transform(const struct KrBasis *basis,
                                 enum KrDirection direction,
                                 const struct KrMatrix *data,
                                 struct KrMatrix **out);

/**
 * Parses a matrix from its JSON form `{"rows":r,"cols":c,"entries":[[...]]}`.
 *
 * # Safety
 * `json` must be a valid C string; `out` must be writable.
 */
enum KrStatus kr_matrix_from_json(const char *json, struct KrMatrix **out);

/**
 * Builds a `rows` × `cols` matrix from `rows * cols` row-major scalar strings.
 *
 * # Safety
 * `entries` must point to `rows * cols` valid C strings; `out` must be writable.
 */
enum KrStatus kr_matrix_new(size_t rows,
                            size_t cols,
                            const char *const *entries,
                            struct KrMatrix **out);

/**
 * # Safety
 * `m` must be NULL or a handle from this library, not yet freed.
 */
void kr_matrix_free(struct KrMatrix *m);

/**
 * Number of rows, or 0 for NULL.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
size_t kr_matrix_rows(const struct KrMatrix *m);

/**
 * Number of columns, or 0 for NULL.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
size_t kr_matrix_cols(const struct KrMatrix *m);

/**
 * Writes entry (i, j) as a string.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum KrStatus kr_matrix_entry(const struct KrMatrix *m, size_t i, size_t j, char **out);

/**
 * Writes the JSON form of `m` (sorted keys, byte-stable).
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum KrStatus kr_matrix_to_json(const struct KrMatrix *m, char **out);

/**
 * Matrix product `a · b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum KrStatus kr_matrix_mul(const struct KrMatrix *a,
                            const struct KrMatrix *b,
                            struct KrMatrix **out);

/**
 * Sets `*equal` to whether `a` and `b` have the same shape and entries.
 *
 * # Safety
 * `a` and `b` must be live handles; `equal` must be writable.
 */
enum KrStatus kr_matrix_equal(const struct KrMatrix *a, const struct KrMatrix *b, bool *equal);

/**
 * Induced matrix of `a` on homogeneous polynomials of degree `level`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum KrStatus kr_sympower(const struct KrMatrix *a, size_t level, struct KrMatrix **out);

/**
 * Multivariate Kravchuk matrix for base `a`, probabilities `probs[0..count]`
 * and level `level`.
 *
 * # Safety
 * `a` must be a live handle; `probs` must point to `count` valid C strings;
 * `out` must be writable.
 */
enum KrStatus kr_multivariate_phi(const struct KrMatrix *a,
                                  const char *const *probs,
                                  size_t count,
                                  size_t level,
                                  struct KrMatrix **out);

/**
 * Coding-theory Krawtchouk matrix K_i(j; level, s).
 *
 * # Safety
 * `out` must be writable.
 */
enum KrStatus kr_coding_matrix(size_t level, uint64_t s, struct KrMatrix **out);

/**
 * Expansion coefficients of the polynomial with coefficients `poly`
 * (a row or column, constant term first) in the level-`level` basis at `p`.
 * The result is a column of length `level + 1`.
 *
 * # Safety
 * `poly` must be a live handle; `p` a valid C string; `out` writable.
 */
enum KrStatus kr_expansion_coefficients(const struct KrMatrix *poly,
                                        size_t level,
                                        const char *p,
                                        struct KrMatrix **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KRAWTCHOUK_H */
