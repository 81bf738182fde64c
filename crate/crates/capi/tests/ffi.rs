//! Exercises the C surface exactly as a foreign caller would: JSON in,
//! status codes and owned pointers out.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use cosetid_capi::*;

fn solve_json(doc: &str, t_max: u32) -> (CidStatus, *mut CidReport) {
    let input = CString::new(doc).unwrap();
    let mut report: *mut CidReport = ptr::null_mut();
    let status = cid_solve(input.as_ptr(), t_max, &mut report);
    (status, report)
}

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    cid_string_free(ptr);
    s
}

fn last_error() -> String {
    let mut msg: *mut c_char = ptr::null_mut();
    assert_eq!(cid_last_error(&mut msg), CidStatus::CidOk);
    if msg.is_null() {
        String::new()
    } else {
        take_string(msg)
    }
}

#[test]
fn solve_and_inspect_a_coset_problem() {
    let (status, report) = solve_json(
        r#"{
            "group": {"family": "symmetric", "params": {"n": 4}},
            "mode": {"coset": {"subgroup": "klein4"}}
        }"#,
        2,
    );
    assert_eq!(status, CidStatus::CidOk);

    let mut gamma = 0i64;
    assert_eq!(cid_report_gamma(report, &mut gamma), CidStatus::CidOk);
    assert_eq!(gamma, 2);

    let mut gamma_bdd = 0i64;
    assert_eq!(cid_report_gamma_bdd(report, &mut gamma_bdd), CidStatus::CidOk);
    assert_eq!(gamma_bdd, 2);

    let mut p: *mut c_char = ptr::null_mut();
    assert_eq!(cid_report_probability(report, 1, &mut p), CidStatus::CidOk);
    assert_eq!(take_string(p), "1/2");

    let mut base = 0i64;
    assert_eq!(cid_report_base_size(report, &mut base), CidStatus::CidOk);
    assert_eq!(base, 3);

    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(cid_report_json(report, &mut json), CidStatus::CidOk);
    let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(doc["rows"][1]["probability"], "1");

    // out-of-range row
    let mut p: *mut c_char = ptr::null_mut();
    assert_eq!(
        cid_report_probability(report, 9, &mut p),
        CidStatus::CidOutOfRange
    );
    assert!(last_error().contains("no row"));

    cid_report_free(report);
}

#[test]
fn infinite_complexity_is_minus_one() {
    let (status, report) = solve_json(
        r#"{
            "group": {"family": "abelian_product", "params": {"orders": [4]}},
            "rep": {"irrep_sum": {"labels": ["(2)"]}},
            "mode": "sod"
        }"#,
        3,
    );
    assert_eq!(status, CidStatus::CidOk);
    let mut gamma = 0i64;
    assert_eq!(cid_report_gamma(report, &mut gamma), CidStatus::CidOk);
    assert_eq!(gamma, -1);
    cid_report_free(report);
}

#[test]
fn status_codes_and_errors() {
    // null input
    let mut report: *mut CidReport = ptr::null_mut();
    assert_eq!(
        cid_solve(ptr::null(), 1, &mut report),
        CidStatus::CidNullArgument
    );

    // malformed document
    let (status, _) = solve_json("{not json", 1);
    assert_eq!(status, CidStatus::CidInvalidSpec);
    assert!(last_error().contains("problem document"));

    // bad parameters inside a well-formed document
    let (status, _) = solve_json(
        r#"{"group": {"family": "heisenberg", "params": {"p": 4, "n": 1}}, "mode": "sod"}"#,
        1,
    );
    assert_eq!(status, CidStatus::CidInvalidSpec);
    assert!(last_error().contains("prime"));

    // cap exceeded maps to its own status
    let orders: Vec<u64> = vec![2; 31];
    let doc = format!(
        r#"{{"group": {{"family": "abelian_product", "params": {{"orders": {orders:?}}}}}, "mode": "sod", "rep": "regular"}}"#
    );
    let (status, _) = solve_json(&doc, 1);
    assert_eq!(status, CidStatus::CidCapExceeded);

    // t_max of zero is rejected
    let (status, _) = solve_json(
        r#"{"group": {"family": "symmetric", "params": {"n": 3}}, "mode": "sod"}"#,
        0,
    );
    assert_eq!(status, CidStatus::CidOutOfRange);

    // status strings exist for every code
    for code in [
        CidStatus::CidOk,
        CidStatus::CidNullArgument,
        CidStatus::CidInvalidUtf8,
        CidStatus::CidInvalidSpec,
        CidStatus::CidCapExceeded,
        CidStatus::CidOutOfRange,
        CidStatus::CidInternal,
    ] {
        let msg = unsafe { CStr::from_ptr(cid_status_message(code)) };
        assert!(!msg.to_str().unwrap().is_empty());
    }
    assert_eq!(cid_abi_version(), 1);
}

#[test]
fn char_table_export() {
    let group = CString::new(r#"{"family": "heisenberg", "params": {"p": 2, "n": 1}}"#).unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(cid_char_table_json(group.as_ptr(), &mut out), CidStatus::CidOk);
    let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(doc["characters"].as_array().unwrap().len(), 5);
    // the exported document loads back through the core parser
    let table = cosetid::chartab::io::load_char_table(&doc.to_string()).unwrap();
    assert_eq!(table.order(), 8);
}

#[test]
fn freeing_null_is_a_no_op() {
    cid_report_free(ptr::null_mut());
    cid_string_free(ptr::null_mut());
}

#[test]
fn generated_header_exists_and_declares_the_surface() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("cosetid.h");
    let text = std::fs::read_to_string(header).expect("header generated at build time");
    for symbol in [
        "cid_solve",
        "cid_report_json",
        "cid_report_gamma",
        "cid_report_probability",
        "cid_report_free",
        "cid_string_free",
        "cid_char_table_json",
        "CidStatus",
        "typedef struct CidReport CidReport;",
    ] {
        assert!(text.contains(symbol), "header is missing {symbol}");
    }
}
