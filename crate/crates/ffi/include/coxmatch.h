#ifndef COXMATCH_H
#define COXMATCH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CoxStatus {
  COX_STATUS_OK = 0,
  COX_STATUS_NULL_ARGUMENT = 1,
  COX_STATUS_INVALID_UTF8 = 2,
  COX_STATUS_PARSE = 3,
  COX_STATUS_INVALID_MATRIX = 4,
  COX_STATUS_CAP_EXCEEDED = 5,
  COX_STATUS_NOT_IN_INTERVAL = 6,
  COX_STATUS_NOT_A_MATCHING = 7,
  COX_STATUS_INDEX_OUT_OF_RANGE = 8,
  COX_STATUS_INTERNAL = 9,
} CoxStatus;

/**
 * A lower Bruhat interval `[e, w]`.
 */
typedef struct CoxInterval CoxInterval;

/**
 * Matchings of one interval, each an involution on its element indices.
 */
typedef struct CoxMatchingList CoxMatchingList;

/**
 * A Coxeter system.
 */
typedef struct CoxSystem CoxSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Free with
 * [`cox_string_free`].
 */
char *cox_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void cox_string_free(char *s);

/**
 * `A{n}`, `B{n}` or `I2:{m}` (`I2:0` is the infinite dihedral group).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum CoxStatus cox_system_named(const char *name, struct CoxSystem **out);

/**
 * A system from a row-major `rank × rank` matrix; `0` stands for `∞`.
 * Generators are named `s1, …, sn`.
 *
 * # Safety
 * `entries` must point to `rank * rank` values; `out` must be writable.
 */
enum CoxStatus cox_system_from_matrix(const uint32_t *entries, size_t rank, struct CoxSystem **out);

/**
 * # Safety
 * `sys` must be a live handle.
 */
size_t cox_system_rank(const struct CoxSystem *sys);

/**
 * # Safety
 * `sys` must be null or a handle not yet freed.
 */
void cox_system_free(struct CoxSystem *sys);

/**
 * `[e, w]` for `w` given as a word such as `"s1-s2-s1"` (`""` is the identity).
 * The interval keeps its own copy of the system.
 *
 * # Safety
 * `sys` must be a live handle, `word` a NUL-terminated string, `out` writable.
 */
enum CoxStatus cox_interval_build(const struct CoxSystem *sys,
                                  const char *word,
                                  struct CoxInterval **out);

/**
 * Rebuilds an interval from its JSON document, validating elements and covers.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CoxStatus cox_interval_from_json(const char *json, struct CoxInterval **out);

/**
 * # Safety
 * `iv` must be null or a handle not yet freed.
 */
void cox_interval_free(struct CoxInterval *iv);

/**
 * Number of elements; 0 for a null handle.
 *
 * # Safety
 * `iv` must be null or a live handle.
 */
size_t cox_interval_len(const struct CoxInterval *iv);

/**
 * Index of the top element `w`.
 *
 * # Safety
 * `iv` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_interval_top(const struct CoxInterval *iv, size_t *out);

/**
 * Length of element `i`.
 *
 * # Safety
 * `iv` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_interval_rank_of(const struct CoxInterval *iv, size_t i, size_t *out);

/**
 * Bruhat comparison `i ≤ j`.
 *
 * # Safety
 * `iv` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_interval_leq(const struct CoxInterval *iv, size_t i, size_t j, bool *out);

/**
 * Canonical word of element `i`. Free with [`cox_string_free`].
 *
 * # Safety
 * `iv` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_interval_element(const struct CoxInterval *iv, size_t i, char **out);

/**
 * Index of the element spelled by `word` (any word, reduced or not).
 * Fails with `COX_STATUS_NOT_IN_INTERVAL` if it is not below `w`.
 *
 * # Safety
 * `iv` must be a live handle, `word` a NUL-terminated string, `out` writable.
 */
enum CoxStatus cox_interval_index_of(const struct CoxInterval *iv, const char *word, size_t *out);

/**
 * JSON document of the interval. Free with [`cox_string_free`].
 *
 * # Safety
 * `iv` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_interval_to_json(const struct CoxInterval *iv, char **out);

/**
 * Graphviz rendering of the Hasse diagram. Free with [`cox_string_free`].
 *
 * # Safety
 * `iv` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_interval_to_dot(const struct CoxInterval *iv, char **out);

/**
 * All special matchings, by exhaustive search.
 *
 * # Safety
 * `iv` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_special_matchings(const struct CoxInterval *iv, struct CoxMatchingList **out);

/**
 * The distinct matchings induced by right and left systems.
 *
 * # Safety
 * `iv` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_system_matchings(const struct CoxInterval *iv, struct CoxMatchingList **out);

/**
 * # Safety
 * `list` must be null or a live handle.
 */
size_t cox_matching_list_len(const struct CoxMatchingList *list);

/**
 * Partner of element `u` under matching `k`.
 *
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_matching_list_partner(const struct CoxMatchingList *list,
                                         size_t k,
                                         size_t u,
                                         size_t *out);

/**
 * Matching `k` as a JSON document of index pairs. Free with [`cox_string_free`].
 *
 * # Safety
 * `list` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_matching_list_to_json(const struct CoxMatchingList *list, size_t k, char **out);

/**
 * # Safety
 * `list` must be null or a handle not yet freed.
 */
void cox_matching_list_free(struct CoxMatchingList *list);

/**
 * Whether `pairing` (partner of each element, `len` = interval size) is a
 * special matching. Fails with `COX_STATUS_NOT_A_MATCHING` if it is not an
 * involution along Hasse edges.
 *
 * # Safety
 * `iv` must be a live handle, `pairing` must point to `len` values, `out` writable.
 */
enum CoxStatus cox_matching_is_special(const struct CoxInterval *iv,
                                       const size_t *pairing,
                                       size_t len,
                                       bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COXMATCH_H */
