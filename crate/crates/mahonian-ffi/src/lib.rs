//! C ABI for the word-statistics library.
//!
//! Calling conventions:
//!
//! * Every fallible function returns an [`MhStatus`]; zero (`Ok`) means
//!   success and the out-parameters are filled in.
//! * Words are opaque handles created by [`mh_word_parse`] or
//!   [`mh_word_from_letters`] and released with [`mh_word_free`].
//! * Strings returned through out-parameters are NUL-terminated UTF-8 owned
//!   by the caller, who must release each one with [`mh_string_free`].
//! * After a failing call, [`mh_last_error`] returns a human-readable
//!   message. The pointer stays valid on the calling thread until the next
//!   call into this library from that thread.
//! * No function unwinds across the boundary: an internal panic is caught
//!   and surfaced as [`MhStatus::Internal`].
//!
//! The header `include/mahonian.h` is generated from this file by cbindgen
//! at build time.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use mahonian::families::FamilySpec;
use mahonian::stats::StatName;
use mahonian::verify::{self, CheckStatus, StatAssignment};
use mahonian::word::{theta, theta_inv, Permutation, Word};
use mahonian::{bij, Error};

/// Status code returned by every fallible function in this interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MhStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument failed to parse or was out of range.
    InvalidArgument = 2,
    /// The input was outside the domain of the requested map or statistic.
    Domain = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
    /// The library panicked internally; this indicates a bug.
    Internal = 5,
}

/// Outcome of an identity check (see [`mh_check`]).
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MhCheckStatus {
    /// Every cell matched; for difference claims, a witness was found.
    Pass = 0,
    /// Some cell disagreed; the JSON report carries the witness.
    Fail = 1,
    /// A claimed difference produced no witness within the bounds searched.
    Warn = 2,
}

/// Opaque handle to a word: a nonempty sequence of positive integer letters.
pub struct MhWord {
    inner: Word,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized: Vec<u8> = message.bytes().filter(|&b| b != 0).collect();
    let message = CString::new(sanitized).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn clear_error() {
    LAST_ERROR.with(|slot| {
        let mut slot = slot.borrow_mut();
        if !slot.as_bytes().is_empty() {
            *slot = CString::default();
        }
    });
}

fn fail(status: MhStatus, message: &str) -> MhStatus {
    set_error(message);
    status
}

fn fail_null(name: &str) -> MhStatus {
    fail(MhStatus::NullPointer, &format!("argument `{name}` is null"))
}

/// Maps library errors onto the coarse C status classes: inputs outside a
/// map's or statistic's domain are `Domain`, everything else is a malformed
/// argument.
fn fail_error(e: &Error) -> MhStatus {
    let status = match e {
        Error::NotStirling
        | Error::NotAPermutation
        | Error::DescentViolation
        | Error::NotDominatedCycle
        | Error::GapInAlphabet { .. } => MhStatus::Domain,
        _ => MhStatus::InvalidArgument,
    };
    fail(status, &e.to_string())
}

/// Runs a function body, translating panics into [`MhStatus::Internal`] so
/// that no unwind ever crosses the C boundary.
fn guarded(body: impl FnOnce() -> MhStatus) -> MhStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(MhStatus::Internal, "internal panic"),
    }
}

/// Reads a required C string argument as UTF-8.
///
/// # Safety
/// `text` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char, name: &str) -> Result<&'a str, MhStatus> {
    if text.is_null() {
        return Err(fail_null(name));
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        fail(
            MhStatus::InvalidUtf8,
            &format!("argument `{name}` is not valid UTF-8"),
        )
    })
}

fn give_word(word: Word, out: *mut *mut MhWord) -> MhStatus {
    let handle = Box::new(MhWord { inner: word });
    unsafe { *out = Box::into_raw(handle) };
    MhStatus::Ok
}

fn give_string(text: String, out: *mut *mut c_char) -> MhStatus {
    let sanitized: Vec<u8> = text.into_bytes().into_iter().filter(|&b| b != 0).collect();
    let c = CString::new(sanitized).expect("interior NULs removed");
    unsafe { *out = c.into_raw() };
    MhStatus::Ok
}

/// Message describing the most recent failure on the calling thread.
///
/// The pointer is owned by the library and stays valid until the next call
/// into it from this thread. It is never null; after a successful call it
/// points at an empty string.
#[no_mangle]
pub extern "C" fn mh_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer previously returned through a string
/// out-parameter of this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word literal: either a run of decimal digits (`2111`) or a
/// comma-separated list of letters (`10,2,10,1`). On success `*out` owns a
/// new handle that must be released with [`mh_word_free`].
///
/// # Safety
/// `text` must be null or a valid NUL-terminated string; `out` must be null
/// or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mh_word_parse(text: *const c_char, out: *mut *mut MhWord) -> MhStatus {
    guarded(|| {
        if out.is_null() {
            return fail_null("out");
        }
        let text = match read_str(text, "text") {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Word::parse_literal(text) {
            Ok(w) => give_word(w, out),
            Err(e) => fail_error(&e),
        }
    })
}

/// Builds a word from `len` letters. Letters are positive integers and the
/// sequence must be nonempty. On success `*out` owns a new handle.
///
/// # Safety
/// `letters` must be null or valid for reads of `len` values; `out` must be
/// null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mh_word_from_letters(
    letters: *const u32,
    len: usize,
    out: *mut *mut MhWord,
) -> MhStatus {
    guarded(|| {
        if out.is_null() {
            return fail_null("out");
        }
        if letters.is_null() {
            return fail_null("letters");
        }
        let letters = std::slice::from_raw_parts(letters, len).to_vec();
        match Word::new(letters) {
            Ok(w) => give_word(w, out),
            Err(e) => fail_error(&e),
        }
    })
}

/// Releases a word handle. Null is ignored.
///
/// # Safety
/// `word` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mh_word_free(word: *mut MhWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Number of letters in the word; 0 when `word` is null.
///
/// # Safety
/// `word` must be null or a live handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mh_word_len(word: *const MhWord) -> usize {
    if word.is_null() {
        return 0;
    }
    (*word).inner.len()
}

/// Copies the letters of the word into `buf`, which must hold at least
/// [`mh_word_len`] values. Positions are 1-based in the word; the buffer is
/// filled left to right.
///
/// # Safety
/// `word` must be null or a live handle; `buf` must be null or valid for
/// writes of `cap` values.
#[no_mangle]
pub unsafe extern "C" fn mh_word_copy_letters(
    word: *const MhWord,
    buf: *mut u32,
    cap: usize,
) -> MhStatus {
    guarded(|| {
        if word.is_null() {
            return fail_null("word");
        }
        if buf.is_null() {
            return fail_null("buf");
        }
        let letters = (*word).inner.letters();
        if cap < letters.len() {
            return fail(
                MhStatus::InvalidArgument,
                &format!("buffer holds {cap} letters, word has {}", letters.len()),
            );
        }
        std::slice::from_raw_parts_mut(buf, letters.len()).copy_from_slice(letters);
        MhStatus::Ok
    })
}

/// Renders the word in the literal syntax accepted by [`mh_word_parse`]:
/// a digit string when every letter is at most 9, a comma list otherwise.
/// The string in `*out` must be released with [`mh_string_free`].
///
/// # Safety
/// `word` must be null or a live handle; `out` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn mh_word_to_string(
    word: *const MhWord,
    out: *mut *mut c_char,
) -> MhStatus {
    guarded(|| {
        if word.is_null() {
            return fail_null("word");
        }
        if out.is_null() {
            return fail_null("out");
        }
        give_string((*word).inner.to_string(), out)
    })
}

/// Evaluates a statistic on a word and stores the value in `*out`.
///
/// `name` accepts the same tokens as the command line: `inv`, `maj`, `den`,
/// `mak`, `mad`, `stat`, `des`, `exc`, `rlmin`, `rlwmin`, `lrmin`, `lrmax`,
/// `runs`, the parameterized family `inv_r`, `rmaj`, `rdes`, `rexc`, `rden`
/// (which read the `r` argument), and the inverse forms `iinv_r`, `imaj`,
/// `imak`, `imad`, `iden`, `istat`, `irmaj`, `irden` (defined on
/// permutations only).
///
/// # Safety
/// `word` must be null or a live handle; `name` must be null or a valid
/// NUL-terminated string; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mh_stat(
    word: *const MhWord,
    name: *const c_char,
    r: u32,
    out: *mut u64,
) -> MhStatus {
    guarded(|| {
        if word.is_null() {
            return fail_null("word");
        }
        if out.is_null() {
            return fail_null("out");
        }
        let name = match read_str(name, "name") {
            Ok(t) => t,
            Err(status) => return status,
        };
        let stat = match StatName::parse(name, r) {
            Ok(s) => s,
            Err(e) => return fail_error(&e),
        };
        match stat.eval(&(*word).inner) {
            Ok(v) => {
                *out = v;
                MhStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

/// Applies a named bijection to a word. On success `*out` owns the image.
///
/// `bijection` is one of `foata_r`, `rawlings`, `hrden` (all three read
/// `r`), `phi`, `phi_qi` (defined on Stirling words only), or `theta_inv`.
/// The descent-set-directed map takes an extra argument and lives in
/// [`mh_theta`].
///
/// # Safety
/// `word` must be null or a live handle; `bijection` must be null or a
/// valid NUL-terminated string; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mh_map(
    word: *const MhWord,
    bijection: *const c_char,
    r: u32,
    out: *mut *mut MhWord,
) -> MhStatus {
    guarded(|| {
        if word.is_null() {
            return fail_null("word");
        }
        if out.is_null() {
            return fail_null("out");
        }
        let name = match read_str(bijection, "bijection") {
            Ok(t) => t,
            Err(status) => return status,
        };
        let w = &(*word).inner;
        let image = match name {
            "foata_r" => Ok(bij::foata_r(w, r)),
            "rawlings" => Ok(bij::rawlings_r(w, r)),
            "hrden" => Ok(bij::h_rden(w, r)),
            "phi" => Ok(bij::phi_alpha(w)),
            "phi_qi" => bij::phi_qi(w),
            "theta_inv" => Ok(theta_inv(w).into_word()),
            other => {
                return fail(
                    MhStatus::InvalidArgument,
                    &format!("unknown bijection `{other}`"),
                )
            }
        };
        match image {
            Ok(img) => give_word(img, out),
            Err(e) => fail_error(&e),
        }
    })
}

/// Applies the descent-set-directed map to a permutation `word` whose
/// descent set is contained in the 1-based positions
/// `positions[0..positions_len]`. On success `*out` owns the image word.
///
/// # Safety
/// `word` must be null or a live handle; `positions` must be null or valid
/// for reads of `positions_len` values; `out` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn mh_theta(
    word: *const MhWord,
    positions: *const usize,
    positions_len: usize,
    out: *mut *mut MhWord,
) -> MhStatus {
    guarded(|| {
        if word.is_null() {
            return fail_null("word");
        }
        if out.is_null() {
            return fail_null("out");
        }
        if positions.is_null() && positions_len > 0 {
            return fail_null("positions");
        }
        let s: Vec<usize> = if positions_len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(positions, positions_len).to_vec()
        };
        let pi = match Permutation::new((*word).inner.letters().to_vec()) {
            Ok(p) => p,
            Err(e) => return fail_error(&e),
        };
        match theta(&pi, &s) {
            Ok(img) => give_word(img, out),
            Err(e) => fail_error(&e),
        }
    })
}

/// Computes the joint distribution of statistics over a word family and
/// renders the polynomial as text, for example `1 + 2*q + 2*q^2 + q^3`.
///
/// `family` uses the same syntax as the command line, for example
/// `words:alpha=3,1` or `deseq:n=4:S=1,3`; `stats` assigns statistics to
/// the variables `t`, `q`, `x`, for example `des:t,maj:q`; parameterized
/// statistic tokens read `r`. The string in `*out` must be released with
/// [`mh_string_free`].
///
/// # Safety
/// `family` and `stats` must each be null or valid NUL-terminated strings;
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mh_dist(
    family: *const c_char,
    stats: *const c_char,
    r: u32,
    out: *mut *mut c_char,
) -> MhStatus {
    guarded(|| {
        if out.is_null() {
            return fail_null("out");
        }
        let family = match read_str(family, "family") {
            Ok(t) => t,
            Err(status) => return status,
        };
        let stats = match read_str(stats, "stats") {
            Ok(t) => t,
            Err(status) => return status,
        };
        let fam = match FamilySpec::parse(family) {
            Ok(f) => f,
            Err(e) => return fail_error(&e),
        };
        let sa = match StatAssignment::parse(stats, r) {
            Ok(s) => s,
            Err(e) => return fail_error(&e),
        };
        match verify::distribution(&fam, &sa) {
            Ok(poly) => give_string(poly.to_string(), out),
            Err(e) => fail_error(&e),
        }
    })
}

/// Checks one distribution identity (or `all` of them) over every instance
/// with total size up to `n_max` and parameter values `r = 1..=r_max`.
///
/// `*out_status` receives the verdict. When `out_report_json` is non-null,
/// `*out_report_json` receives the full report (for `all`, an array of
/// reports) as a JSON string owned by the caller. A `Fail` verdict is
/// reported through `out_status`, not the return value: the return value
/// only signals whether the check could run.
///
/// # Safety
/// `identity` must be null or a valid NUL-terminated string; `out_status`
/// must be null or valid for writes; `out_report_json` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mh_check(
    identity: *const c_char,
    n_max: usize,
    r_max: u32,
    out_status: *mut MhCheckStatus,
    out_report_json: *mut *mut c_char,
) -> MhStatus {
    guarded(|| {
        if out_status.is_null() {
            return fail_null("out_status");
        }
        let identity = match read_str(identity, "identity") {
            Ok(t) => t,
            Err(status) => return status,
        };
        if r_max == 0 {
            return fail(MhStatus::InvalidArgument, "r_max must be at least 1");
        }
        let r_set: Vec<u32> = (1..=r_max).collect();
        let (verdict, json) = if identity == "all" {
            match verify::check_all(n_max, &r_set) {
                Ok(reports) => {
                    let worst = reports
                        .iter()
                        .map(|rep| rep.status)
                        .max_by_key(|s| match s {
                            CheckStatus::Pass => 0,
                            CheckStatus::Warn => 1,
                            CheckStatus::Fail => 2,
                        })
                        .unwrap_or(CheckStatus::Pass);
                    let json = serde_json::to_string(&reports).expect("reports serialize");
                    (worst, json)
                }
                Err(e) => return fail_error(&e),
            }
        } else {
            match verify::check_identity(identity, n_max, &r_set) {
                Ok(report) => {
                    let json = serde_json::to_string(&report).expect("report serializes");
                    (report.status, json)
                }
                Err(e) => return fail_error(&e),
            }
        };
        *out_status = match verdict {
            CheckStatus::Pass => MhCheckStatus::Pass,
            CheckStatus::Fail => MhCheckStatus::Fail,
            CheckStatus::Warn => MhCheckStatus::Warn,
        };
        if !out_report_json.is_null() {
            return give_string(json, out_report_json);
        }
        MhStatus::Ok
    })
}

/// Stores the registered identity names, one per line, in `*out`. The
/// string must be released with [`mh_string_free`].
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mh_identity_ids(out: *mut *mut c_char) -> MhStatus {
    guarded(|| {
        if out.is_null() {
            return fail_null("out");
        }
        give_string(verify::identity_ids().join("\n"), out)
    })
}

/// Stores the Euler number `E_n` (the count of alternating permutations of
/// `n` letters) as a decimal string in `*out`, since the values outgrow
/// fixed-width integers quickly. The string must be released with
/// [`mh_string_free`].
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mh_euler(n: usize, out: *mut *mut c_char) -> MhStatus {
    guarded(|| {
        if out.is_null() {
            return fail_null("out");
        }
        let values = verify::euler_numbers(n);
        give_string(values[n].to_string(), out)
    })
}
