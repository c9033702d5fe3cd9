#ifndef DF0L_H
#define DF0L_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum Df0lStatus {
  DF0L_STATUS_OK = 0,
  DF0L_STATUS_NULL_POINTER = 1,
  DF0L_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed system text, unknown letter or other input error.
   */
  DF0L_STATUS_INPUT = 3,
  /**
   * An analysis precondition failed (erasing system, word outside the language, ...).
   */
  DF0L_STATUS_PRECONDITION = 4,
  DF0L_STATUS_PANIC = 5,
} Df0lStatus;

typedef enum Df0lThresholdKind {
  DF0L_THRESHOLD_KIND_FOUND = 0,
  DF0L_THRESHOLD_KIND_CUTOFF_EXCEEDED = 1,
  DF0L_THRESHOLD_KIND_NOT_STRONGLY_CIRCULAR = 2,
} Df0lThresholdKind;

/**
 * Opaque system handle.
 */
typedef struct Df0lSystem Df0lSystem;

/**
 * `value` is the threshold for `FOUND` and the last level for `CUTOFF_EXCEEDED`.
 */
typedef struct Df0lThreshold {
  enum Df0lThresholdKind kind;
  size_t value;
} Df0lThreshold;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *df0l_last_error_message(void);

/**
 * Parses a system file's contents into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum Df0lStatus df0l_system_parse(const char *text, struct Df0lSystem **out);

/**
 * Releases a handle; NULL is ignored.
 *
 * # Safety
 * `handle` must come from [`df0l_system_parse`] and not have been freed.
 */
void df0l_system_free(struct Df0lSystem *handle);

/**
 * Number of letters, or 0 for NULL.
 *
 * # Safety
 * `handle` must be NULL or a live handle.
 */
size_t df0l_system_letter_count(const struct Df0lSystem *handle);

/**
 * Whether the morphism is non-erasing.
 *
 * # Safety
 * `handle` must be NULL or a live handle.
 */
bool df0l_system_is_pdf0l(const struct Df0lSystem *handle);

/**
 * Renders the system in the file format. Free the result with [`df0l_string_free`].
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum Df0lStatus df0l_system_render(const struct Df0lSystem *handle, char **out);

/**
 * Builds the power system `S^k` as a new handle.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum Df0lStatus df0l_system_power(const struct Df0lSystem *handle,
                                  size_t k,
                                  struct Df0lSystem **out);

/**
 * Membership of a space-separated word in the language.
 *
 * # Safety
 * `handle` must be a live handle, `word` NUL-terminated and `out` valid.
 */
enum Df0lStatus df0l_contains(const struct Df0lSystem *handle, const char *word, bool *out);

/**
 * Weak circularity threshold search up to `cutoff`.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum Df0lStatus df0l_weak_threshold(const struct Df0lSystem *handle,
                                    size_t cutoff,
                                    struct Df0lThreshold *out);

/**
 * Strong circularity threshold search up to `cutoff`.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum Df0lStatus df0l_strong_threshold(const struct Df0lSystem *handle,
                                      size_t cutoff,
                                      bool skip_repetition_check,
                                      struct Df0lThreshold *out);

/**
 * Whether a certificate of unbounded repetitiveness exists within
 * `period_bound` (0 selects the default bound).
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum Df0lStatus df0l_is_repetitive(const struct Df0lSystem *handle, size_t period_bound, bool *out);

/**
 * Threshold search result as JSON (`strong` selects the mode). Free the
 * result with [`df0l_string_free`].
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum Df0lStatus df0l_threshold_json(const struct Df0lSystem *handle,
                                    bool strong,
                                    size_t cutoff,
                                    char **out);

/**
 * Minimal interpretations of a word as JSON. Free the result with [`df0l_string_free`].
 *
 * # Safety
 * `handle` must be a live handle, `word` NUL-terminated and `out` valid.
 */
enum Df0lStatus df0l_interpretations_json(const struct Df0lSystem *handle,
                                          const char *word,
                                          char **out);

/**
 * Releases a string returned by this library; NULL is ignored.
 *
 * # Safety
 * `text` must come from this library and not have been freed.
 */
void df0l_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DF0L_H */
