#ifndef LATDIM_H
#define LATDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which sum or product `latdim_product` builds.
typedef enum LatdimOp {
  LATDIM_SUM = 0,
  LATDIM_CARTESIAN = 1,
  LATDIM_LEX = 2,
  LATDIM_RECT = 3,
} LatdimOp;

// Result code of every fallible call.
typedef enum LatdimStatus {
  LATDIM_OK = 0,
  LATDIM_NULL_POINTER = 1,
  LATDIM_INVALID_UTF8 = 2,
  // Malformed JSON.
  LATDIM_PARSE = 3,
  // Well-formed input that is not a bounded lattice, or similar.
  LATDIM_VALIDATION = 4,
  LATDIM_SIZE_LIMIT = 5,
  LATDIM_INVALID_ARGUMENT = 6,
  LATDIM_PANIC = 7,
} LatdimStatus;

// Opaque handle to a validated, immutable lattice.
typedef struct LatdimLattice LatdimLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *latdim_last_error(void);

// Parse and validate lattice JSON (`{"name", "elements", "covers"}`).
//
// # Safety
// `json` must be a NUL-terminated string and `out` a writable pointer.
enum LatdimStatus latdim_lattice_from_json(const char *json, struct LatdimLattice **out);

// Release a handle. Null is ignored.
//
// # Safety
// `l` must come from this library and not be used afterwards.
void latdim_lattice_free(struct LatdimLattice *l);

// # Safety
// `l` must be a live handle and `out` writable.
enum LatdimStatus latdim_lattice_size(const struct LatdimLattice *l, size_t *out);

// # Safety
// `l` must be a live handle and `out` writable.
enum LatdimStatus latdim_ind_large(const struct LatdimLattice *l, int64_t *out);

// # Safety
// `l` must be a live handle and `out` writable.
enum LatdimStatus latdim_ind_small(const struct LatdimLattice *l, int64_t *out);

// Covering dimension; −1 for the one-element lattice.
//
// # Safety
// `l` must be a live handle and `out` writable.
enum LatdimStatus latdim_dim_covering(const struct LatdimLattice *l, int64_t *out);

// Krull dimension. `*present` is false when there are no prime filters,
// and `*out` is then set to 0.
//
// # Safety
// `l` must be a live handle; `out` and `present` writable.
enum LatdimStatus latdim_kdim(const struct LatdimLattice *l, size_t *out, bool *present);

// # Safety
// `l` must be a live handle and `out` writable.
enum LatdimStatus latdim_height(const struct LatdimLattice *l, size_t *out);

// Full dimension report with witnesses, as JSON. Free with
// `latdim_string_free`.
//
// # Safety
// `l` must be a live handle and `out` writable.
enum LatdimStatus latdim_report_json(const struct LatdimLattice *l, char **out);

// The lattice in the same JSON form `latdim_lattice_from_json` reads.
//
// # Safety
// `l` must be a live handle and `out` writable.
enum LatdimStatus latdim_lattice_to_json(const struct LatdimLattice *l, char **out);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void latdim_string_free(char *s);

// Sum or product of two lattices as a new handle.
//
// # Safety
// `a` and `b` must be live handles and `out` writable.
enum LatdimStatus latdim_product(const struct LatdimLattice *a,
                                 const struct LatdimLattice *b,
                                 enum LatdimOp op,
                                 struct LatdimLattice **out);

// `l` with a new top element adjoined.
//
// # Safety
// `l` must be a live handle and `out` writable.
enum LatdimStatus latdim_add_top(const struct LatdimLattice *l, struct LatdimLattice **out);

// The family member with `Ind = k`, `k >= 1`.
//
// # Safety
// `out` must be writable.
enum LatdimStatus latdim_ind_k_family(size_t k, struct LatdimLattice **out);

// The graft with `(ind, Ind) = (k - 1, k)`, `k >= 2`.
//
// # Safety
// `out` must be writable.
enum LatdimStatus latdim_graft_m(size_t k, struct LatdimLattice **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATDIM_H */
