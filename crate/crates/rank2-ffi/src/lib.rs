//! C ABI for the rank2 library.
//!
//! Rings are opaque handles created by [`rank2_ring_parse`] and released by
//! [`rank2_ring_free`]. Elements travel as JSON text (nested integer
//! arrays, the library's canonical encoding), results as JSON strings
//! allocated by Rust and released with [`rank2_string_free`]. Every call
//! returns a [`Rank2Status`]; on any non-OK status,
//! [`rank2_last_error_message`] describes the failure for the calling
//! thread.

use rank2::orbits::Property;
use rank2::quad::AlgebraPoint;
use rank2::ring::{Ring, RingElem};
use rank2::{verify, Error};
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every entry point. `NotIsomorphic` mirrors the
/// CLI's exit-code convention for mathematical negatives and is not an
/// error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank2Status {
    Ok = 0,
    NotIsomorphic = 1,
    UsageError = 2,
    InternalError = 3,
    NullArgument = 4,
    Undecided = 5,
}

/// Opaque ring handle.
pub struct Rank2Ring {
    inner: Ring,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> Rank2Status {
    match err {
        Error::Internal(_) => Rank2Status::InternalError,
        _ => Rank2Status::UsageError,
    }
}

fn fail(err: Error) -> Rank2Status {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

/// Runs a closure, converting panics into `InternalError`.
fn guarded(f: impl FnOnce() -> Rank2Status) -> Rank2Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("panic inside rank2".into());
            Rank2Status::InternalError
        }
    }
}

/// # Safety
/// `ptr` must be non-null and point to a NUL-terminated UTF-8 string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn give_string(s: String, out: *mut *mut c_char) -> Rank2Status {
    let c = match CString::new(s) {
        Ok(c) => c,
        Err(_) => {
            set_error("result contained an interior NUL".into());
            return Rank2Status::InternalError;
        }
    };
    unsafe {
        *out = c.into_raw();
    }
    Rank2Status::Ok
}

fn parse_elem(ring: &Ring, text: &str) -> Result<RingElem, Error> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::Semantic(format!("bad element literal {text:?}: {e}")))?;
    ring.elem_from_json(&value)
}

/// The message for the most recent non-OK status on this thread, or null.
/// The pointer stays valid until the next failing call on the same thread;
/// do not free it.
#[no_mangle]
pub extern "C" fn rank2_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|c| c.as_ptr())
            .unwrap_or(std::ptr::null())
    })
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by a `rank2_*` function that
/// documents string ownership transfer, and must not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rank2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a ring spec (e.g. `"zmod(4)"`, `"gf(3,2,[1,0,1])"`) into a handle.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rank2_ring_parse(
    spec: *const c_char,
    out: *mut *mut Rank2Ring,
) -> Rank2Status {
    guarded(|| {
        if out.is_null() {
            set_error("out pointer is null".into());
            return Rank2Status::NullArgument;
        }
        let Some(text) = read_str(spec) else {
            set_error("spec pointer is null or not UTF-8".into());
            return Rank2Status::NullArgument;
        };
        match Ring::parse(text) {
            Ok(ring) => {
                *out = Box::into_raw(Box::new(Rank2Ring { inner: ring }));
                Rank2Status::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a ring handle.
///
/// # Safety
/// `ring` must come from [`rank2_ring_parse`] and must not be used again.
#[no_mangle]
pub unsafe extern "C" fn rank2_ring_free(ring: *mut Rank2Ring) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Canonical text form of the ring spec; free with [`rank2_string_free`].
///
/// # Safety
/// `ring` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rank2_ring_canonical(
    ring: *const Rank2Ring,
    out: *mut *mut c_char,
) -> Rank2Status {
    guarded(|| {
        let (Some(ring), false) = (ring.as_ref(), out.is_null()) else {
            set_error("null argument".into());
            return Rank2Status::NullArgument;
        };
        give_string(ring.inner.spec().to_text(), out)
    })
}

/// Number of elements; `UsageError` for the infinite `zsqrt` rings.
///
/// # Safety
/// `ring` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rank2_ring_order(
    ring: *const Rank2Ring,
    out: *mut u64,
) -> Rank2Status {
    guarded(|| {
        let (Some(ring), false) = (ring.as_ref(), out.is_null()) else {
            set_error("null argument".into());
            return Rank2Status::NullArgument;
        };
        match ring.inner.order() {
            Some(n) => {
                *out = n;
                Rank2Status::Ok
            }
            None => fail(Error::Unsupported("ring is infinite".into())),
        }
    })
}

/// Moduli table of a property (`"F"`, `"SF"`, `"R"`, `"SR"`, `"AS"`,
/// `"SAS"`) as JSON; free with [`rank2_string_free`].
///
/// # Safety
/// `ring` must be a live handle; `property` a NUL-terminated string; `out`
/// valid.
#[no_mangle]
pub unsafe extern "C" fn rank2_classify_json(
    ring: *const Rank2Ring,
    property: *const c_char,
    out: *mut *mut c_char,
) -> Rank2Status {
    guarded(|| {
        let (Some(ring), Some(prop), false) = (ring.as_ref(), read_str(property), out.is_null())
        else {
            set_error("null argument".into());
            return Rank2Status::NullArgument;
        };
        let property: Property = match prop.parse() {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        match rank2::orbits::moduli_table(&ring.inner, property) {
            Ok(table) => give_string(table.to_json().to_string(), out),
            Err(e) => fail(e),
        }
    })
}

/// Same table as CSV text.
///
/// # Safety
/// As for [`rank2_classify_json`].
#[no_mangle]
pub unsafe extern "C" fn rank2_classify_csv(
    ring: *const Rank2Ring,
    property: *const c_char,
    out: *mut *mut c_char,
) -> Rank2Status {
    guarded(|| {
        let (Some(ring), Some(prop), false) = (ring.as_ref(), read_str(property), out.is_null())
        else {
            set_error("null argument".into());
            return Rank2Status::NullArgument;
        };
        let property: Property = match prop.parse() {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        match rank2::orbits::moduli_table(&ring.inner, property) {
            Ok(table) => give_string(table.to_csv(), out),
            Err(e) => fail(e),
        }
    })
}

/// Isomorphism decision between `(a, b)` and `(c, d)`; element literals are
/// JSON. Returns `Ok` (isomorphic), `NotIsomorphic`, or `Undecided` (only
/// over `zsqrt` rings); `out_json` carries
/// `{"isomorphic": ..., "solutions": [...], "certificate": ...}` in every
/// decided case. Free with [`rank2_string_free`].
///
/// # Safety
/// `ring` must be a live handle; the element strings NUL-terminated; `out`
/// valid.
#[no_mangle]
pub unsafe extern "C" fn rank2_iso_json(
    ring: *const Rank2Ring,
    a: *const c_char,
    b: *const c_char,
    c: *const c_char,
    d: *const c_char,
    out_json: *mut *mut c_char,
) -> Rank2Status {
    guarded(|| {
        let (Some(ring), false) = (ring.as_ref(), out_json.is_null()) else {
            set_error("null argument".into());
            return Rank2Status::NullArgument;
        };
        let (Some(a), Some(b), Some(c), Some(d)) =
            (read_str(a), read_str(b), read_str(c), read_str(d))
        else {
            set_error("element literal pointer is null or not UTF-8".into());
            return Rank2Status::NullArgument;
        };
        let r = &ring.inner;
        let parse4 = || -> Result<(AlgebraPoint, AlgebraPoint), Error> {
            Ok((
                AlgebraPoint::new(r, parse_elem(r, a)?, parse_elem(r, b)?),
                AlgebraPoint::new(r, parse_elem(r, c)?, parse_elem(r, d)?),
            ))
        };
        let (src, dst) = match parse4() {
            Ok(p) => p,
            Err(e) => return fail(e),
        };
        if r.is_finite() {
            match rank2::iso::iso_solutions(&src, &dst) {
                Ok(sols) => {
                    let isomorphic = !sols.is_empty();
                    let json = serde_json::json!({
                        "isomorphic": isomorphic,
                        "solutions": sols.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                        "certificate": if isomorphic {
                            format!("{} substitution(s) x -> w*y + v", sols.len())
                        } else {
                            "no (v,w) satisfies 2v = cw - a and -dw^2 + v^2 + av + b = 0".into()
                        },
                    });
                    let status = give_string(json.to_string(), out_json);
                    if status != Rank2Status::Ok {
                        return status;
                    }
                    if isomorphic {
                        Rank2Status::Ok
                    } else {
                        Rank2Status::NotIsomorphic
                    }
                }
                Err(e) => fail(e),
            }
        } else {
            match rank2::iso::iso_quadint(&src, &dst) {
                Ok(decision) => {
                    let status = match &decision {
                        rank2::iso::QuadIntDecision::Isomorphic { .. } => Rank2Status::Ok,
                        rank2::iso::QuadIntDecision::NotIsomorphic { .. } => {
                            Rank2Status::NotIsomorphic
                        }
                        rank2::iso::QuadIntDecision::Undecided { .. } => Rank2Status::Undecided,
                    };
                    let s = give_string(decision.to_json().to_string(), out_json);
                    if s != Rank2Status::Ok {
                        return s;
                    }
                    status
                }
                Err(e) => fail(e),
            }
        }
    })
}

/// Order of the automorphism group of `(a, b)`.
///
/// # Safety
/// `ring` must be a live handle; elements NUL-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn rank2_aut_order(
    ring: *const Rank2Ring,
    a: *const c_char,
    b: *const c_char,
    out: *mut u64,
) -> Rank2Status {
    guarded(|| {
        let (Some(ring), Some(a), Some(b), false) =
            (ring.as_ref(), read_str(a), read_str(b), out.is_null())
        else {
            set_error("null argument".into());
            return Rank2Status::NullArgument;
        };
        let r = &ring.inner;
        let build = || -> Result<usize, Error> {
            let pt = AlgebraPoint::new(r, parse_elem(r, a)?, parse_elem(r, b)?);
            Ok(rank2::iso::aut_group(&pt)?.order)
        };
        match build() {
            Ok(order) => {
                *out = order as u64;
                Rank2Status::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// The `Z[sqrt(5)]` counterexample as JSON. Returns `NotIsomorphic` on the
/// expected (proven) outcome. Free the string with [`rank2_string_free`].
///
/// # Safety
/// `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rank2_counterexample_json(out_json: *mut *mut c_char) -> Rank2Status {
    guarded(|| {
        if out_json.is_null() {
            set_error("out pointer is null".into());
            return Rank2Status::NullArgument;
        }
        match verify::zsqrt5_counterexample() {
            Ok(ce) => {
                let proves = ce.proves_nonisomorphic();
                let s = give_string(ce.to_json().to_string(), out_json);
                if s != Rank2Status::Ok {
                    return s;
                }
                if proves {
                    Rank2Status::NotIsomorphic
                } else {
                    set_error("counterexample failed to prove non-isomorphism".into());
                    Rank2Status::InternalError
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// Runs verification suites over comma-separated ring specs (null or empty
/// for the default battery). `suite` may be a single suite name or `"all"`.
/// Returns `Ok` when every check passes, `InternalError` otherwise, with
/// the full line report in `out_report`.
///
/// # Safety
/// `suite` must be NUL-terminated; `rings_csv` may be null; `out_report`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn rank2_verify(
    rings_csv: *const c_char,
    suite: *const c_char,
    seed: u64,
    out_report: *mut *mut c_char,
) -> Rank2Status {
    guarded(|| {
        let (Some(suite), false) = (read_str(suite), out_report.is_null()) else {
            set_error("null argument".into());
            return Rank2Status::NullArgument;
        };
        let rings = if rings_csv.is_null() {
            verify::battery()
        } else {
            let Some(text) = read_str(rings_csv) else {
                set_error("rings list is not UTF-8".into());
                return Rank2Status::NullArgument;
            };
            if text.trim().is_empty() {
                verify::battery()
            } else {
                let parsed: Result<Vec<Ring>, Error> =
                    text.split(',').map(|s| Ring::parse(s.trim())).collect();
                match parsed {
                    Ok(r) => r,
                    Err(e) => return fail(e),
                }
            }
        };
        let cfg = verify::Config { rings, seed };
        match verify::run(&cfg, &[suite.to_string()]) {
            Ok(report) => {
                let passed = report.passed();
                let s = give_string(report.render_lines(), out_report);
                if s != Rank2Status::Ok {
                    return s;
                }
                if passed {
                    Rank2Status::Ok
                } else {
                    set_error("one or more verification checks failed".into());
                    Rank2Status::InternalError
                }
            }
            Err(e) => fail(e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        rank2_string_free(p);
        s
    }

    #[test]
    fn parse_classify_roundtrip() {
        unsafe {
            let mut ring: *mut Rank2Ring = ptr::null_mut();
            let status = rank2_ring_parse(cstr("zmod(2)").as_ptr(), &mut ring);
            assert_eq!(status, Rank2Status::Ok);
            let mut order = 0u64;
            assert_eq!(rank2_ring_order(ring, &mut order), Rank2Status::Ok);
            assert_eq!(order, 2);

            let mut json: *mut c_char = ptr::null_mut();
            let status = rank2_classify_json(ring, cstr("F").as_ptr(), &mut json);
            assert_eq!(status, Rank2Status::Ok);
            let text = take_string(json);
            let v: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert_eq!(v["classes"].as_array().unwrap().len(), 3);

            let mut csv: *mut c_char = ptr::null_mut();
            assert_eq!(
                rank2_classify_csv(ring, cstr("SF").as_ptr(), &mut csv),
                Rank2Status::Ok
            );
            let text = take_string(csv);
            assert!(text.starts_with("ring,property"));
            rank2_ring_free(ring);
        }
    }

    #[test]
    fn parse_error_reports_message() {
        unsafe {
            let mut ring: *mut Rank2Ring = ptr::null_mut();
            let status = rank2_ring_parse(cstr("zmod(1)").as_ptr(), &mut ring);
            assert_eq!(status, Rank2Status::UsageError);
            let msg = rank2_last_error_message();
            assert!(!msg.is_null());
            let text = CStr::from_ptr(msg).to_str().unwrap();
            assert!(text.contains("n >= 2"));
        }
    }

    #[test]
    fn iso_status_codes() {
        unsafe {
            let mut ring: *mut Rank2Ring = ptr::null_mut();
            rank2_ring_parse(cstr("zmod(4)").as_ptr(), &mut ring);
            let mut json: *mut c_char = ptr::null_mut();
            let status = rank2_iso_json(
                ring,
                cstr("0").as_ptr(),
                cstr("1").as_ptr(),
                cstr("2").as_ptr(),
                cstr("2").as_ptr(),
                &mut json,
            );
            assert_eq!(status, Rank2Status::Ok);
            take_string(json);

            let mut json: *mut c_char = ptr::null_mut();
            let status = rank2_iso_json(
                ring,
                cstr("0").as_ptr(),
                cstr("0").as_ptr(),
                cstr("1").as_ptr(),
                cstr("1").as_ptr(),
                &mut json,
            );
            assert_eq!(status, Rank2Status::NotIsomorphic);
            let text = take_string(json);
            assert!(text.contains("\"isomorphic\":false"));
            rank2_ring_free(ring);
        }
    }

    #[test]
    fn counterexample_is_negative() {
        unsafe {
            let mut json: *mut c_char = ptr::null_mut();
            let status = rank2_counterexample_json(&mut json);
            assert_eq!(status, Rank2Status::NotIsomorphic);
            let text = take_string(json);
            assert!(text.contains("w²=1 forced"));
        }
    }

    #[test]
    fn verify_runs_one_suite() {
        unsafe {
            let mut report: *mut c_char = ptr::null_mut();
            let status = rank2_verify(
                cstr("zmod(2),zmod(3)").as_ptr(),
                cstr("rings").as_ptr(),
                0,
                &mut report,
            );
            assert_eq!(status, Rank2Status::Ok);
            let text = take_string(report);
            assert!(text.contains("PASS rings"));
        }
    }

    #[test]
    fn null_arguments_are_rejected() {
        unsafe {
            let mut ring: *mut Rank2Ring = ptr::null_mut();
            assert_eq!(
                rank2_ring_parse(ptr::null(), &mut ring),
                Rank2Status::NullArgument
            );
            let mut order = 0u64;
            assert_eq!(
                rank2_ring_order(ptr::null(), &mut order),
                Rank2Status::NullArgument
            );
        }
    }
}
