//! Exercises the C ABI end to end from Rust: handle lifecycle, statistic
//! and bijection dispatch, distribution and identity-check calls, error
//! classification, and the generated header.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use mahonian_ffi::{
    mh_check, mh_dist, mh_euler, mh_identity_ids, mh_last_error, mh_map, mh_stat, mh_string_free,
    mh_theta, mh_word_copy_letters, mh_word_free, mh_word_from_letters, mh_word_len,
    mh_word_parse, mh_word_to_string, MhCheckStatus, MhStatus, MhWord,
};

fn parse(text: &str) -> *mut MhWord {
    let text = CString::new(text).unwrap();
    let mut word = ptr::null_mut();
    let status = unsafe { mh_word_parse(text.as_ptr(), &mut word) };
    assert_eq!(status, MhStatus::Ok, "parse failed: {}", last_error());
    word
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(mh_last_error()) }
        .to_str()
        .expect("error messages are UTF-8")
        .to_owned()
}

/// Takes ownership of a library-allocated string and frees it.
fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let text = unsafe { CStr::from_ptr(p) }
        .to_str()
        .expect("library strings are UTF-8")
        .to_owned();
    unsafe { mh_string_free(p) };
    text
}

fn word_text(word: *const MhWord) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mh_word_to_string(word, &mut out) }, MhStatus::Ok);
    take_string(out)
}

fn stat(word: *const MhWord, name: &str, r: u32) -> u64 {
    let name = CString::new(name).unwrap();
    let mut value = 0u64;
    let status = unsafe { mh_stat(word, name.as_ptr(), r, &mut value) };
    assert_eq!(status, MhStatus::Ok, "stat failed: {}", last_error());
    value
}

#[test]
fn word_handles_round_trip_letters_and_text() {
    let w = parse("2111");
    assert_eq!(unsafe { mh_word_len(w) }, 4);
    let mut buf = [0u32; 4];
    assert_eq!(
        unsafe { mh_word_copy_letters(w, buf.as_mut_ptr(), buf.len()) },
        MhStatus::Ok
    );
    assert_eq!(buf, [2, 1, 1, 1]);
    assert_eq!(word_text(w), "2111");
    unsafe { mh_word_free(w) };

    let letters = [10u32, 2, 10, 1];
    let mut w = ptr::null_mut();
    assert_eq!(
        unsafe { mh_word_from_letters(letters.as_ptr(), letters.len(), &mut w) },
        MhStatus::Ok
    );
    assert_eq!(word_text(w), "10,2,10,1");
    unsafe { mh_word_free(w) };
}

#[test]
fn too_small_letter_buffers_are_rejected() {
    let w = parse("2111");
    let mut buf = [0u32; 2];
    assert_eq!(
        unsafe { mh_word_copy_letters(w, buf.as_mut_ptr(), buf.len()) },
        MhStatus::InvalidArgument
    );
    unsafe { mh_word_free(w) };
}

#[test]
fn statistics_match_the_library() {
    let w = parse("2111");
    assert_eq!(stat(w, "inv", 1), 3);
    assert_eq!(stat(w, "maj", 1), 1);
    assert_eq!(stat(w, "den", 1), 1);
    assert_eq!(stat(w, "mak", 1), 1);
    assert_eq!(stat(w, "mad", 1), 3);
    assert_eq!(stat(w, "stat", 1), 1);
    unsafe { mh_word_free(w) };

    let text = "3212315354646547577";
    let w = parse(text);
    let lib = mahonian::word::Word::parse_literal(text).unwrap();
    for name in ["inv", "maj", "rlwmin", "lrmax"] {
        let direct = mahonian::stats::StatName::parse(name, 1)
            .unwrap()
            .eval(&lib)
            .unwrap();
        assert_eq!(stat(w, name, 1), direct, "{name} disagrees");
    }
    for r in 1..=3 {
        let direct = mahonian::stats::StatName::parse("rmaj", r)
            .unwrap()
            .eval(&lib)
            .unwrap();
        assert_eq!(stat(w, "rmaj", r), direct, "rmaj at r={r} disagrees");
    }
    unsafe { mh_word_free(w) };
}

#[test]
fn inverse_statistics_need_permutations() {
    let w = parse("2111");
    let name = CString::new("imaj").unwrap();
    let mut value = 0u64;
    assert_eq!(
        unsafe { mh_stat(w, name.as_ptr(), 1, &mut value) },
        MhStatus::Domain
    );
    assert!(!last_error().is_empty());
    unsafe { mh_word_free(w) };
}

#[test]
fn unknown_statistic_names_are_invalid_arguments() {
    let w = parse("1");
    let name = CString::new("nonesuch").unwrap();
    let mut value = 0u64;
    assert_eq!(
        unsafe { mh_stat(w, name.as_ptr(), 1, &mut value) },
        MhStatus::InvalidArgument
    );
    assert!(last_error().contains("nonesuch"), "{}", last_error());
    unsafe { mh_word_free(w) };
}

#[test]
fn bijections_reproduce_the_worked_examples() {
    let cases = [
        ("foata_r", 1, "1121", "2111"),
        ("phi", 1, "16327458", "13762458"),
    ];
    for (name, r, input, expected) in cases {
        let w = parse(input);
        let cname = CString::new(name).unwrap();
        let mut image = ptr::null_mut();
        assert_eq!(
            unsafe { mh_map(w, cname.as_ptr(), r, &mut image) },
            MhStatus::Ok,
            "{name}: {}",
            last_error()
        );
        assert_eq!(word_text(image), expected, "{name} image");
        unsafe { mh_word_free(image) };
        unsafe { mh_word_free(w) };
    }
}

#[test]
fn theta_matches_the_worked_example_and_checks_descents() {
    let w = parse("245136789");
    let positions = [3usize, 5];
    let mut image = ptr::null_mut();
    assert_eq!(
        unsafe { mh_theta(w, positions.as_ptr(), positions.len(), &mut image) },
        MhStatus::Ok,
        "{}",
        last_error()
    );
    assert_eq!(word_text(image), "212113333");
    unsafe { mh_word_free(image) };

    let mut rejected = ptr::null_mut();
    assert_eq!(
        unsafe { mh_theta(w, ptr::null(), 0, &mut rejected) },
        MhStatus::Domain,
        "descent set not contained in the empty set"
    );
    unsafe { mh_word_free(w) };
}

#[test]
fn stirling_domain_violations_are_reported() {
    let w = parse("212");
    let name = CString::new("phi_qi").unwrap();
    let mut image = ptr::null_mut();
    assert_eq!(
        unsafe { mh_map(w, name.as_ptr(), 1, &mut image) },
        MhStatus::Domain
    );
    assert!(last_error().contains("Stirling"), "{}", last_error());
    unsafe { mh_word_free(w) };
}

#[test]
fn distributions_render_as_polynomial_text() {
    let family = CString::new("words:alpha=3,1").unwrap();
    let stats = CString::new("inv:q").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { mh_dist(family.as_ptr(), stats.as_ptr(), 1, &mut out) },
        MhStatus::Ok,
        "{}",
        last_error()
    );
    assert_eq!(take_string(out), "1 + q + q^2 + q^3");

    let family = CString::new("nonesuch:n=1").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { mh_dist(family.as_ptr(), stats.as_ptr(), 1, &mut out) },
        MhStatus::InvalidArgument
    );
}

#[test]
fn identity_checks_pass_and_report_json() {
    let id = CString::new("mahonian-words").unwrap();
    let mut verdict = MhCheckStatus::Fail;
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { mh_check(id.as_ptr(), 4, 2, &mut verdict, &mut report) },
        MhStatus::Ok,
        "{}",
        last_error()
    );
    assert_eq!(verdict, MhCheckStatus::Pass);
    let report: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(report["identity"], "mahonian-words");
    assert_eq!(report["status"], "pass");

    let mut verdict = MhCheckStatus::Fail;
    assert_eq!(
        unsafe { mh_check(id.as_ptr(), 3, 1, &mut verdict, ptr::null_mut()) },
        MhStatus::Ok,
        "report pointer is optional"
    );
    assert_eq!(verdict, MhCheckStatus::Pass);
}

#[test]
fn checking_all_identities_returns_an_array_report() {
    let id = CString::new("all").unwrap();
    let mut verdict = MhCheckStatus::Fail;
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { mh_check(id.as_ptr(), 4, 2, &mut verdict, &mut report) },
        MhStatus::Ok,
        "{}",
        last_error()
    );
    assert_eq!(verdict, MhCheckStatus::Pass);
    let reports: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    let reports = reports.as_array().expect("array of reports");
    assert_eq!(reports.len(), 67);

    // At n <= 3 some claimed differences have no witness yet, and the
    // aggregate verdict surfaces the weakest row.
    let mut verdict = MhCheckStatus::Fail;
    assert_eq!(
        unsafe { mh_check(id.as_ptr(), 3, 2, &mut verdict, ptr::null_mut()) },
        MhStatus::Ok
    );
    assert_eq!(verdict, MhCheckStatus::Warn);
}

#[test]
fn unknown_identities_and_zero_r_are_invalid() {
    let id = CString::new("BOGUS").unwrap();
    let mut verdict = MhCheckStatus::Pass;
    assert_eq!(
        unsafe { mh_check(id.as_ptr(), 3, 1, &mut verdict, ptr::null_mut()) },
        MhStatus::InvalidArgument
    );
    assert!(last_error().contains("BOGUS"), "{}", last_error());

    let id = CString::new("mahonian-words").unwrap();
    assert_eq!(
        unsafe { mh_check(id.as_ptr(), 3, 0, &mut verdict, ptr::null_mut()) },
        MhStatus::InvalidArgument
    );
}

#[test]
fn identity_ids_list_one_name_per_line() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mh_identity_ids(&mut out) }, MhStatus::Ok);
    let ids = take_string(out);
    let lines: Vec<&str> = ids.lines().collect();
    assert_eq!(lines.len(), 67);
    assert!(lines.contains(&"mahonian-words"));
    assert!(lines.contains(&"runs-lrmax-pairs"));
}

#[test]
fn euler_numbers_arrive_as_decimal_strings() {
    for (n, expected) in [(0, "1"), (4, "5"), (6, "61"), (9, "7936")] {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { mh_euler(n, &mut out) }, MhStatus::Ok);
        assert_eq!(take_string(out), expected, "E_{n}");
    }
}

#[test]
fn null_pointers_are_classified_and_described() {
    let mut word = ptr::null_mut();
    assert_eq!(
        unsafe { mh_word_parse(ptr::null(), &mut word) },
        MhStatus::NullPointer
    );
    assert!(last_error().contains("text"), "{}", last_error());

    let text = CString::new("1").unwrap();
    assert_eq!(
        unsafe { mh_word_parse(text.as_ptr(), ptr::null_mut()) },
        MhStatus::NullPointer
    );

    let name = CString::new("inv").unwrap();
    let mut value = 0u64;
    assert_eq!(
        unsafe { mh_stat(ptr::null(), name.as_ptr(), 1, &mut value) },
        MhStatus::NullPointer
    );

    assert_eq!(unsafe { mh_word_len(ptr::null()) }, 0);
    unsafe { mh_word_free(ptr::null_mut()) };
    unsafe { mh_string_free(ptr::null_mut()) };
}

#[test]
fn non_utf8_text_is_rejected() {
    let bytes = [0xffu8, 0];
    let text = CStr::from_bytes_with_nul(&bytes).unwrap();
    let mut word = ptr::null_mut();
    assert_eq!(
        unsafe { mh_word_parse(text.as_ptr(), &mut word) },
        MhStatus::InvalidUtf8
    );
}

#[test]
fn malformed_literals_are_invalid_arguments() {
    let text = CString::new("1a2").unwrap();
    let mut word = ptr::null_mut();
    assert_eq!(
        unsafe { mh_word_parse(text.as_ptr(), &mut word) },
        MhStatus::InvalidArgument
    );
    let mut zero = ptr::null_mut();
    let letters = [1u32, 0, 2];
    assert_eq!(
        unsafe { mh_word_from_letters(letters.as_ptr(), letters.len(), &mut zero) },
        MhStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { mh_word_from_letters(letters.as_ptr(), 0, &mut zero) },
        MhStatus::InvalidArgument,
        "empty words are rejected"
    );
}

#[test]
fn generated_header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/mahonian.h"
    ))
    .expect("build script wrote the header");
    for needle in [
        "#ifndef MAHONIAN_H",
        "typedef struct MhWord MhWord;",
        "MH_STATUS_OK = 0",
        "MH_CHECK_STATUS_PASS = 0",
        "enum MhStatus mh_word_parse(const char *text, struct MhWord **out);",
        "enum MhStatus mh_check(",
        "const char *mh_last_error(void);",
        "void mh_string_free(char *s);",
    ] {
        assert!(header.contains(needle), "header lacks `{needle}`");
    }
}
