//! Exercises the C ABI end to end from Rust: handle lifecycle, status
//! codes, rendered text, the JSON round trip, and error reporting.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cdindex_ffi::{
    cdx_last_error_message, cdx_poset_ab_index, cdx_poset_cd_index,
    cdx_poset_complete_eulerian, cdx_poset_element_count, cdx_poset_free,
    cdx_poset_is_eulerian, cdx_poset_parse, cdx_poset_rank_span, cdx_poset_to_json,
    cdx_string_free, CdxPoset, CdxStatus,
};

const ONE_GON: &str = r#"{
  "elements": [
    {"id": "0", "rank": 0},
    {"id": "v", "rank": 1},
    {"id": "e", "rank": 2},
    {"id": "1", "rank": 3}
  ],
  "covers": [["0", "v"], ["v", "e"], ["e", "1"]],
  "bottom": "0",
  "top": "1",
  "zeta": [{"from": "v", "to": "e", "value": "2"}]
}"#;

const CHAIN3_CLASSICAL: &str = r#"{
  "elements": [
    {"id": "x", "rank": 0},
    {"id": "y", "rank": 1},
    {"id": "z", "rank": 2}
  ],
  "covers": [["x", "y"], ["y", "z"]],
  "bottom": "x",
  "top": "z"
}"#;

fn parse(json: &str) -> *mut CdxPoset {
    let json = CString::new(json).unwrap();
    let mut handle: *mut CdxPoset = ptr::null_mut();
    let status = unsafe { cdx_poset_parse(json.as_ptr(), &mut handle) };
    assert_eq!(status, CdxStatus::Ok, "error: {}", last_error());
    assert!(!handle.is_null());
    handle
}

fn take_string(text: *mut c_char) -> String {
    assert!(!text.is_null());
    let owned = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_string();
    unsafe { cdx_string_free(text) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cdx_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn one_gon_lifecycle_and_indices() {
    let handle = parse(ONE_GON);

    let mut count = 0usize;
    assert_eq!(
        unsafe { cdx_poset_element_count(handle, &mut count) },
        CdxStatus::Ok
    );
    assert_eq!(count, 4);

    let mut span = 0i64;
    assert_eq!(
        unsafe { cdx_poset_rank_span(handle, &mut span) },
        CdxStatus::Ok
    );
    assert_eq!(span, 3);

    let mut eulerian = false;
    assert_eq!(
        unsafe { cdx_poset_is_eulerian(handle, &mut eulerian) },
        CdxStatus::Ok
    );
    assert!(eulerian);
    assert_eq!(last_error(), "");

    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cdx_poset_ab_index(handle, &mut text) },
        CdxStatus::Ok
    );
    assert_eq!(take_string(text), "a^2 + b^2");

    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cdx_poset_cd_index(handle, &mut text) },
        CdxStatus::Ok
    );
    assert_eq!(take_string(text), "c^2 - d");

    unsafe { cdx_poset_free(handle) };
}

#[test]
fn json_round_trip_is_exact() {
    let handle = parse(ONE_GON);
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cdx_poset_to_json(handle, &mut text) },
        CdxStatus::Ok
    );
    let emitted = take_string(text);

    let again = parse(&emitted);
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cdx_poset_to_json(again, &mut text) },
        CdxStatus::Ok
    );
    assert_eq!(take_string(text), emitted);

    unsafe { cdx_poset_free(again) };
    unsafe { cdx_poset_free(handle) };
}

#[test]
fn classical_chain_reports_failures_and_completes() {
    let handle = parse(CHAIN3_CLASSICAL);

    let mut eulerian = true;
    assert_eq!(
        unsafe { cdx_poset_is_eulerian(handle, &mut eulerian) },
        CdxStatus::Ok
    );
    assert!(!eulerian);

    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cdx_poset_cd_index(handle, &mut text) },
        CdxStatus::NotCdExpressible
    );
    assert!(text.is_null());
    assert!(!last_error().is_empty());

    let mut completed: *mut CdxPoset = ptr::null_mut();
    assert_eq!(
        unsafe { cdx_poset_complete_eulerian(handle, &mut completed) },
        CdxStatus::Ok
    );
    let mut eulerian = false;
    assert_eq!(
        unsafe { cdx_poset_is_eulerian(completed, &mut eulerian) },
        CdxStatus::Ok
    );
    assert!(eulerian);

    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cdx_poset_cd_index(completed, &mut text) },
        CdxStatus::Ok
    );
    assert_eq!(take_string(text), "1/2*c");

    unsafe { cdx_poset_free(completed) };
    unsafe { cdx_poset_free(handle) };
}

#[test]
fn parse_failures_set_the_error_message() {
    let json = CString::new("not json").unwrap();
    let mut handle: *mut CdxPoset = ptr::null_mut();
    assert_eq!(
        unsafe { cdx_poset_parse(json.as_ptr(), &mut handle) },
        CdxStatus::ParseError
    );
    assert!(handle.is_null());
    assert!(!last_error().is_empty());

    let not_utf8 = [0xffu8, 0xfe, 0x00];
    assert_eq!(
        unsafe { cdx_poset_parse(not_utf8.as_ptr().cast(), &mut handle) },
        CdxStatus::InvalidUtf8
    );
    assert!(handle.is_null());
}

#[test]
fn generated_header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/cdindex.h"
    ))
    .expect("the build script writes include/cdindex.h");
    for name in [
        "CDX_STATUS_OK",
        "CDX_STATUS_NOT_CD_EXPRESSIBLE",
        "typedef struct CdxPoset CdxPoset;",
        "cdx_poset_parse",
        "cdx_poset_cd_index",
        "cdx_poset_complete_eulerian",
        "cdx_string_free",
        "cdx_last_error_message",
    ] {
        assert!(header.contains(name), "missing from header: {name}");
    }
}
