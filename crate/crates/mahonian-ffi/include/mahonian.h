/* C interface to the mahonian word-statistics library. */

#ifndef MAHONIAN_H
#define MAHONIAN_H

/* Generated by cbindgen from the mahonian-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of an identity check (see [`mh_check`]).
typedef enum MhCheckStatus {
  // Every cell matched; for difference claims, a witness was found.
  MH_CHECK_STATUS_PASS = 0,
  // Some cell disagreed; the JSON report carries the witness.
  MH_CHECK_STATUS_FAIL = 1,
  // A claimed difference produced no witness within the bounds searched.
  MH_CHECK_STATUS_WARN = 2,
} MhCheckStatus;

// Status code returned by every fallible function in this interface.
typedef enum MhStatus {
  // The call succeeded.
  MH_STATUS_OK = 0,
  // A required pointer argument was null.
  MH_STATUS_NULL_POINTER = 1,
  // An argument failed to parse or was out of range.
  MH_STATUS_INVALID_ARGUMENT = 2,
  // The input was outside the domain of the requested map or statistic.
  MH_STATUS_DOMAIN = 3,
  // A string argument was not valid UTF-8.
  MH_STATUS_INVALID_UTF8 = 4,
  // The library panicked internally; this indicates a bug.
  MH_STATUS_INTERNAL = 5,
} MhStatus;

// Opaque handle to a word: a nonempty sequence of positive integer letters.
typedef struct MhWord MhWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on the calling thread.
//
// The pointer is owned by the library and stays valid until the next call
// into it from this thread. It is never null; after a successful call it
// points at an empty string.
const char *mh_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer previously returned through a string
// out-parameter of this library, not yet freed.
void mh_string_free(char *s);

// Parses a word literal: either a run of decimal digits (`2111`) or a
// comma-separated list of letters (`10,2,10,1`). On success `*out` owns a
// new handle that must be released with [`mh_word_free`].
//
// # Safety
// `text` must be null or a valid NUL-terminated string; `out` must be null
// or valid for writes.
enum MhStatus mh_word_parse(const char *text, struct MhWord **out);

// Builds a word from `len` letters. Letters are positive integers and the
// sequence must be nonempty. On success `*out` owns a new handle.
//
// # Safety
// `letters` must be null or valid for reads of `len` values; `out` must be
// null or valid for writes.
enum MhStatus mh_word_from_letters(const uint32_t *letters, size_t len, struct MhWord **out);

// Releases a word handle. Null is ignored.
//
// # Safety
// `word` must be null or a handle returned by this library, not yet freed.
void mh_word_free(struct MhWord *word);

// Number of letters in the word; 0 when `word` is null.
//
// # Safety
// `word` must be null or a live handle returned by this library.
size_t mh_word_len(const struct MhWord *word);

// Copies the letters of the word into `buf`, which must hold at least
// [`mh_word_len`] values. Positions are 1-based in the word; the buffer is
// filled left to right.
//
// # Safety
// `word` must be null or a live handle; `buf` must be null or valid for
// writes of `cap` values.
enum MhStatus mh_word_copy_letters(const struct MhWord *word, uint32_t *buf, size_t cap);

// Renders the word in the literal syntax accepted by [`mh_word_parse`]:
// a digit string when every letter is at most 9, a comma list otherwise.
// The string in `*out` must be released with [`mh_string_free`].
//
// # Safety
// `word` must be null or a live handle; `out` must be null or valid for
// writes.
enum MhStatus mh_word_to_string(const struct MhWord *word, char **out);

// Evaluates a statistic on a word and stores the value in `*out`.
//
// `name` accepts the same tokens as the command line: `inv`, `maj`, `den`,
// `mak`, `mad`, `stat`, `des`, `exc`, `rlmin`, `rlwmin`, `lrmin`, `lrmax`,
// `runs`, the parameterized family `inv_r`, `rmaj`, `rdes`, `rexc`, `rden`
// (which read the `r` argument), and the inverse forms `iinv_r`, `imaj`,
// `imak`, `imad`, `iden`, `istat`, `irmaj`, `irden` (defined on
// permutations only).
//
// # Safety
// `word` must be null or a live handle; `name` must be null or a valid
// NUL-terminated string; `out` must be null or valid for writes.
enum MhStatus mh_stat(const struct MhWord *word, const char *name, uint32_t r, uint64_t *out);

// Applies a named bijection to a word. On success `*out` owns the image.
//
// `bijection` is one of `foata_r`, `rawlings`, `hrden` (all three read
// `r`), `phi`, `phi_qi` (defined on Stirling words only), or `theta_inv`.
// The descent-set-directed map takes an extra argument and lives in
// [`mh_theta`].
//
// # Safety
// `word` must be null or a live handle; `bijection` must be null or a
// valid NUL-terminated string; `out` must be null or valid for writes.
enum MhStatus mh_map(const struct MhWord *word,
                     const char *bijection,
                     uint32_t r,
                     struct MhWord **out);

// Applies the descent-set-directed map to a permutation `word` whose
// descent set is contained in the 1-based positions
// `positions[0..positions_len]`. On success `*out` owns the image word.
//
// # Safety
// `word` must be null or a live handle; `positions` must be null or valid
// for reads of `positions_len` values; `out` must be null or valid for
// writes.
enum MhStatus mh_theta(const struct MhWord *word,
                       const size_t *positions,
                       size_t positions_len,
                       struct MhWord **out);

// Computes the joint distribution of statistics over a word family and
// renders the polynomial as text, for example `1 + 2*q + 2*q^2 + q^3`.
//
// `family` uses the same syntax as the command line, for example
// `words:alpha=3,1` or `deseq:n=4:S=1,3`; `stats` assigns statistics to
// the variables `t`, `q`, `x`, for example `des:t,maj:q`; parameterized
// statistic tokens read `r`. The string in `*out` must be released with
// [`mh_string_free`].
//
// # Safety
// `family` and `stats` must each be null or valid NUL-terminated strings;
// `out` must be null or valid for writes.
enum MhStatus mh_dist(const char *family, const char *stats, uint32_t r, char **out);

// Checks one distribution identity (or `all` of them) over every instance
// with total size up to `n_max` and parameter values `r = 1..=r_max`.
//
// `*out_status` receives the verdict. When `out_report_json` is non-null,
// `*out_report_json` receives the full report (for `all`, an array of
// reports) as a JSON string owned by the caller. A `Fail` verdict is
// reported through `out_status`, not the return value: the return value
// only signals whether the check could run.
//
// # Safety
// `identity` must be null or a valid NUL-terminated string; `out_status`
// must be null or valid for writes; `out_report_json` must be null or
// valid for writes.
enum MhStatus mh_check(const char *identity,
                       size_t n_max,
                       uint32_t r_max,
                       enum MhCheckStatus *out_status,
                       char **out_report_json);

// Stores the registered identity names, one per line, in `*out`. The
// string must be released with [`mh_string_free`].
//
// # Safety
// `out` must be null or valid for writes.
enum MhStatus mh_identity_ids(char **out);

// Stores the Euler number `E_n` (the count of alternating permutations of
// `n` letters) as a decimal string in `*out`, since the values outgrow
// fixed-width integers quickly. The string must be released with
// [`mh_string_free`].
//
// # Safety
// `out` must be null or valid for writes.
enum MhStatus mh_euler(size_t n, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MAHONIAN_H */
