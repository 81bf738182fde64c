//! C ABI for the engine: problems go in as JSON strings, reports come back
//! as opaque handles with accessor functions, and every call returns a
//! status code. Strings handed out by this library must be released with
//! [`cid_string_free`], reports with [`cid_report_free`]. A per-thread
//! error message augments non-OK statuses via [`cid_last_error`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;

use cosetid::engine::{solve, Complexity, ProblemSpec, QueryReport};
use cosetid::error::Error;

/// Call outcome; `CID_OK` is zero, everything else is an error.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CidStatus {
    CidOk = 0,
    CidNullArgument = 1,
    CidInvalidUtf8 = 2,
    CidInvalidSpec = 3,
    CidCapExceeded = 4,
    CidOutOfRange = 5,
    CidInternal = 6,
}

/// Opaque query report handle.
pub struct CidReport {
    inner: QueryReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(msg).ok();
    });
}

fn status_of(err: &Error) -> CidStatus {
    match err {
        Error::CapExceeded(_) => CidStatus::CidCapExceeded,
        Error::Numerical(_) => CidStatus::CidInternal,
        _ => CidStatus::CidInvalidSpec,
    }
}

fn parse_input(ptr: *const c_char) -> Result<&'static str, CidStatus> {
    if ptr.is_null() {
        set_error("null input pointer".into());
        return Err(CidStatus::CidNullArgument);
    }
    // SAFETY: the caller passes a NUL-terminated string that stays alive
    // for the duration of the call.
    let bytes = unsafe { CStr::from_ptr(ptr) };
    bytes.to_str().map_err(|_| {
        set_error("input is not valid UTF-8".into());
        CidStatus::CidInvalidUtf8
    })
}

fn export_string(s: String, out: *mut *mut c_char) -> CidStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return CidStatus::CidNullArgument;
    }
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: out was checked non-null; ownership transfers to the
            // caller, to be released with cid_string_free.
            unsafe { *out = c.into_raw() };
            CidStatus::CidOk
        }
        Err(_) => {
            set_error("output contained an interior NUL".into());
            CidStatus::CidInternal
        }
    }
}

/// ABI revision; bumped on any breaking change to this surface.
#[no_mangle]
pub extern "C" fn cid_abi_version() -> u32 {
    1
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn cid_status_message(status: CidStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        CidStatus::CidOk => b"ok\0",
        CidStatus::CidNullArgument => b"null argument\0",
        CidStatus::CidInvalidUtf8 => b"invalid utf-8\0",
        CidStatus::CidInvalidSpec => b"invalid problem specification\0",
        CidStatus::CidCapExceeded => b"size cap exceeded\0",
        CidStatus::CidOutOfRange => b"argument out of range\0",
        CidStatus::CidInternal => b"internal error\0",
    };
    msg.as_ptr() as *const c_char
}

/// Copy of the last error message on this thread, or NULL if none.
/// Release with [`cid_string_free`].
#[no_mangle]
pub extern "C" fn cid_last_error(out: *mut *mut c_char) -> CidStatus {
    if out.is_null() {
        return CidStatus::CidNullArgument;
    }
    let msg = LAST_ERROR.with(|slot| slot.borrow().clone());
    // SAFETY: out checked non-null above.
    unsafe {
        *out = match msg {
            Some(c) => c.into_raw(),
            None => std::ptr::null_mut(),
        };
    }
    CidStatus::CidOk
}

/// Solve a problem given as JSON (the same document the CLI accepts with
/// `--spec`), evaluating query counts `1..=t_max`. On success writes a
/// report handle to `out_report`; release it with [`cid_report_free`].
#[no_mangle]
pub extern "C" fn cid_solve(
    problem_json: *const c_char,
    t_max: u32,
    out_report: *mut *mut CidReport,
) -> CidStatus {
    if out_report.is_null() {
        set_error("null output pointer".into());
        return CidStatus::CidNullArgument;
    }
    let json = match parse_input(problem_json) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let spec: ProblemSpec = match serde_json::from_str(json) {
        Ok(s) => s,
        Err(e) => {
            set_error(format!("problem document: {e}"));
            return CidStatus::CidInvalidSpec;
        }
    };
    if t_max == 0 {
        set_error("t_max must be at least 1".into());
        return CidStatus::CidOutOfRange;
    }
    match solve(&spec, t_max as u64) {
        Ok(report) => {
            let boxed = Box::new(CidReport { inner: report });
            // SAFETY: out_report checked non-null; caller owns the box.
            unsafe { *out_report = Box::into_raw(boxed) };
            CidStatus::CidOk
        }
        Err(e) => {
            let status = status_of(&e);
            set_error(e.to_string());
            status
        }
    }
}

fn report_ref<'a>(report: *const CidReport) -> Result<&'a QueryReport, CidStatus> {
    if report.is_null() {
        set_error("null report handle".into());
        return Err(CidStatus::CidNullArgument);
    }
    // SAFETY: the handle came from cid_solve and has not been freed.
    Ok(unsafe { &(*report).inner })
}

/// Full report as JSON. Release the string with [`cid_string_free`].
#[no_mangle]
pub extern "C" fn cid_report_json(report: *const CidReport, out: *mut *mut c_char) -> CidStatus {
    let inner = match report_ref(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    match serde_json::to_string_pretty(inner) {
        Ok(json) => export_string(json, out),
        Err(e) => {
            set_error(e.to_string());
            CidStatus::CidInternal
        }
    }
}

fn complexity_code(c: &Complexity) -> i64 {
    match c {
        Complexity::Finite { t } => *t as i64,
        Complexity::Infinite { .. } => -1,
        Complexity::CapHit => -2,
    }
}

/// Exact query complexity: the count itself, -1 when provably infinite,
/// -2 when undecided at the iteration cap.
#[no_mangle]
pub extern "C" fn cid_report_gamma(report: *const CidReport, out: *mut i64) -> CidStatus {
    let inner = match report_ref(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return CidStatus::CidNullArgument;
    }
    // SAFETY: out checked non-null.
    unsafe { *out = complexity_code(&inner.gamma) };
    CidStatus::CidOk
}

/// Bounded-error query complexity under the report's threshold; same
/// encoding as [`cid_report_gamma`].
#[no_mangle]
pub extern "C" fn cid_report_gamma_bdd(report: *const CidReport, out: *mut i64) -> CidStatus {
    let inner = match report_ref(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return CidStatus::CidNullArgument;
    }
    // SAFETY: out checked non-null.
    unsafe { *out = complexity_code(&inner.gamma_bdd) };
    CidStatus::CidOk
}

/// Exact success probability at `t` queries as a "num/den" string.
/// Release the string with [`cid_string_free`].
#[no_mangle]
pub extern "C" fn cid_report_probability(
    report: *const CidReport,
    t: u32,
    out: *mut *mut c_char,
) -> CidStatus {
    let inner = match report_ref(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    match inner.rows.iter().find(|row| row.t == t as u64) {
        Some(row) => export_string(row.probability.clone(), out),
        None => {
            set_error(format!("no row for t = {t} in this report"));
            CidStatus::CidOutOfRange
        }
    }
}

/// Classical base size when the problem came from a permutation action;
/// -1 when not applicable.
#[no_mangle]
pub extern "C" fn cid_report_base_size(report: *const CidReport, out: *mut i64) -> CidStatus {
    let inner = match report_ref(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return CidStatus::CidNullArgument;
    }
    // SAFETY: out checked non-null.
    unsafe { *out = inner.base_size.map(|b| b as i64).unwrap_or(-1) };
    CidStatus::CidOk
}

/// Build, validate and serialize the character table of a family group
/// given as GroupSpec JSON. Release the string with [`cid_string_free`].
#[no_mangle]
pub extern "C" fn cid_char_table_json(
    group_json: *const c_char,
    out: *mut *mut c_char,
) -> CidStatus {
    let json = match parse_input(group_json) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let spec: cosetid::group::GroupSpec = match serde_json::from_str(json) {
        Ok(s) => s,
        Err(e) => {
            set_error(format!("group document: {e}"));
            return CidStatus::CidInvalidSpec;
        }
    };
    let result = cosetid::group::Group::new(spec)
        .and_then(|g| cosetid::chartab::constructors::char_table_for(&g))
        .and_then(|t| cosetid::chartab::io::save_char_table(&t));
    match result {
        Ok(doc) => export_string(doc, out),
        Err(e) => {
            let status = status_of(&e);
            set_error(e.to_string());
            status
        }
    }
}

/// Release a report handle.
#[no_mangle]
pub extern "C" fn cid_report_free(report: *mut CidReport) {
    if !report.is_null() {
        // SAFETY: the handle came from cid_solve exactly once.
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Release a string produced by this library.
#[no_mangle]
pub extern "C" fn cid_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the pointer came from a CString::into_raw in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}
