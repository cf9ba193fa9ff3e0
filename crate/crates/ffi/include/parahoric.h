#ifndef PARAHORIC_H
#define PARAHORIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ParahoricStatus {
  PARAHORIC_STATUS_OK = 0,
  PARAHORIC_STATUS_NULL_POINTER = 1,
  PARAHORIC_STATUS_INVALID_UTF8 = 2,
  PARAHORIC_STATUS_INVALID_JSON = 3,
  PARAHORIC_STATUS_INVALID_SPEC = 4,
  PARAHORIC_STATUS_INVALID_ARGUMENT = 5,
  PARAHORIC_STATUS_NOT_DOMINANT = 6,
  PARAHORIC_STATUS_TOO_LARGE = 7,
  PARAHORIC_STATUS_DOMAIN = 8,
  PARAHORIC_STATUS_INTERNAL = 9,
  PARAHORIC_STATUS_PANIC = 10,
} ParahoricStatus;

// Opaque handle to a root datum and its cached group data.
typedef struct ParahoricDatum ParahoricDatum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a datum from the same JSON accepted by the command line, e.g.
// `{"cartan":{"family":"C","rank":2},"lattice":"adjoint"}`.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum ParahoricStatus parahoric_datum_new(const char *json, struct ParahoricDatum **out);

// # Safety
// `d` must come from [`parahoric_datum_new`] and not be used afterwards.
void parahoric_datum_free(struct ParahoricDatum *d);

// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum ParahoricStatus parahoric_datum_rank(const struct ParahoricDatum *d, size_t *out);

// Length of coweight vectors for this datum.
//
// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum ParahoricStatus parahoric_datum_dim(const struct ParahoricDatum *d, size_t *out);

// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum ParahoricStatus parahoric_weyl_order(const struct ParahoricDatum *d, size_t *out);

// # Safety
// `mu` must point to `mu_len` integers.
enum ParahoricStatus parahoric_adm_size(const struct ParahoricDatum *d,
                                        const int64_t *mu,
                                        size_t mu_len,
                                        size_t *out);

// `Adm(mu)` as JSON. With `at_level` set, lists the double-coset minimal
// representatives for the level `k` instead.
//
// # Safety
// `mu` and `k` must point to `mu_len` and `k_len` entries.
enum ParahoricStatus parahoric_adm_json(const struct ParahoricDatum *d,
                                        const int64_t *mu,
                                        size_t mu_len,
                                        bool at_level,
                                        const size_t *k,
                                        size_t k_len,
                                        char **out);

// # Safety
// `mu` and `k` must point to `mu_len` and `k_len` entries.
enum ParahoricStatus parahoric_is_irreducible(const struct ParahoricDatum *d,
                                              const int64_t *mu,
                                              size_t mu_len,
                                              const size_t *k,
                                              size_t k_len,
                                              bool *out);

// # Safety
// `mu` and `k` must point to `mu_len` and `k_len` entries.
enum ParahoricStatus parahoric_components_json(const struct ParahoricDatum *d,
                                               const int64_t *mu,
                                               size_t mu_len,
                                               const size_t *k,
                                               size_t k_len,
                                               char **out);

// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum ParahoricStatus parahoric_classify_json(const struct ParahoricDatum *d, char **out);

// # Safety
// `mu`, `k1` and `k2` must point to the given number of entries.
enum ParahoricStatus parahoric_fibers_json(const struct ParahoricDatum *d,
                                           const int64_t *mu,
                                           size_t mu_len,
                                           const size_t *k1,
                                           size_t k1_len,
                                           const size_t *k2,
                                           size_t k2_len,
                                           char **out);

// # Safety
// `gamma` must point to `gamma_len` integers.
enum ParahoricStatus parahoric_zgamma_json(const struct ParahoricDatum *d,
                                           const int64_t *gamma,
                                           size_t gamma_len,
                                           char **out);

// Shortest-path weight from `x` to `y`, both given as words like `"121"`
// or `"e"`.
//
// # Safety
// `x` and `y` must be NUL-terminated strings.
enum ParahoricStatus parahoric_wt_json(const struct ParahoricDatum *d,
                                       const char *x,
                                       const char *y,
                                       char **out);

// Vertex and edge counts of the quantum Bruhat graph as JSON.
//
// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum ParahoricStatus parahoric_qbg_json(const struct ParahoricDatum *d, char **out);

// # Safety
// `d` must be a live handle and `out` a valid pointer.
enum ParahoricStatus parahoric_qbg_dot(const struct ParahoricDatum *d, char **out);

// Message for the last failed call on this thread, or NULL after a
// success. Valid until the next call into the library on this thread.
const char *parahoric_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library, freed once.
void parahoric_string_free(char *s);

const char *parahoric_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARAHORIC_H */
