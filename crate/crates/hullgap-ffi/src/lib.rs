//! C ABI over the hullgap decision procedures.
//!
//! Handles are opaque; every fallible call returns an [`HgStatus`] and
//! writes its result through an out-pointer. Text crosses the boundary as
//! NUL-terminated UTF-8 in the same formats the `hullgap` CLI reads:
//! instance text (`eps <rational>` then one value per line) and point text
//! (one `x y` pair per line). Strings returned by this library must be
//! released with [`hg_string_free`], handles with their `_free` function.

use hullgap::cli::files::{parse_instance_text, parse_points_text};
use hullgap::cli::plot::render_svg;
use hullgap::cli::CliError;
use hullgap::geom::Point;
use hullgap::hull::{any_point_inside, in_convex_position};
use hullgap::numeric::Rational;
use hullgap::reductions::{
    decide_eps_closeness_via_hull, decide_strict_closeness_via_hull,
    decide_weak_closeness_via_convex_position, sort_via_hull, Instance,
};
use std::ffi::{c_char, CStr, CString};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text did not parse in the expected format.
    ParseError = 3,
    /// Parsed input violated a domain rule (empty instance, eps <= 0,
    /// duplicate values where distinct ones are required).
    DomainError = 4,
}

/// Opaque handle: a closeness-problem instance (values plus positive eps).
pub struct HgInstance {
    inner: Instance,
}

/// Opaque handle: a planar point multiset.
pub struct HgPoints {
    inner: Vec<Point>,
}

fn classify_cli_error(err: &CliError) -> HgStatus {
    match err {
        CliError::Parse { message, .. } => {
            // Domain rules surface through the same parser diagnostics.
            if message.contains("at least one value")
                || message.contains("epsilon must be positive")
                || message.contains("at least one point")
            {
                HgStatus::DomainError
            } else {
                HgStatus::ParseError
            }
        }
        _ => HgStatus::ParseError,
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, HgStatus> {
    if ptr.is_null() {
        return Err(HgStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| HgStatus::InvalidUtf8)
}

fn give_string(text: String, out: *mut *mut c_char) -> HgStatus {
    let c = CString::new(text).expect("output text never contains NUL");
    unsafe { *out = c.into_raw() };
    HgStatus::Ok
}

/// Parses instance text (`eps <rational>`, then one value per line; `#`
/// comments and blank lines ignored) into a new handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer. On `HG_STATUS_OK` the caller owns the handle and must release
/// it with [`hg_instance_free`].
#[no_mangle]
pub unsafe extern "C" fn hg_instance_parse(
    text: *const c_char,
    out: *mut *mut HgInstance,
) -> HgStatus {
    if out.is_null() {
        return HgStatus::NullArgument;
    }
    let text = match read_str(text) {
        Ok(text) => text,
        Err(status) => return status,
    };
    match parse_instance_text(text, "<ffi>") {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(HgInstance { inner }));
            HgStatus::Ok
        }
        Err(err) => classify_cli_error(&err),
    }
}

/// Builds an instance from an eps token and an array of value tokens.
///
/// # Safety
/// `eps` must be a valid NUL-terminated string; `values` must point to
/// `values_len` valid NUL-terminated strings; `out` must be valid. On
/// `HG_STATUS_OK` the caller owns the handle.
#[no_mangle]
pub unsafe extern "C" fn hg_instance_new(
    eps: *const c_char,
    values: *const *const c_char,
    values_len: usize,
    out: *mut *mut HgInstance,
) -> HgStatus {
    if out.is_null() || (values.is_null() && values_len > 0) {
        return HgStatus::NullArgument;
    }
    let eps: Rational = match read_str(eps) {
        Ok(token) => match token.parse() {
            Ok(eps) => eps,
            Err(_) => return HgStatus::ParseError,
        },
        Err(status) => return status,
    };
    let mut parsed = Vec::with_capacity(values_len);
    for i in 0..values_len {
        let token = match read_str(*values.add(i)) {
            Ok(token) => token,
            Err(status) => return status,
        };
        match token.parse::<Rational>() {
            Ok(value) => parsed.push(value),
            Err(_) => return HgStatus::ParseError,
        }
    }
    match Instance::new(parsed, eps) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(HgInstance { inner }));
            HgStatus::Ok
        }
        Err(_) => HgStatus::DomainError,
    }
}

/// Number of values in the instance; 0 for a NULL handle.
///
/// # Safety
/// `inst` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hg_instance_len(inst: *const HgInstance) -> usize {
    inst.as_ref().map_or(0, |h| h.inner.len())
}

/// Releases an instance handle; NULL is a no-op.
///
/// # Safety
/// `inst` must be NULL or a handle previously returned by this library,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hg_instance_free(inst: *mut HgInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Parses point text (one `x y` pair per line) into a new handle.
///
/// # Safety
/// As [`hg_instance_parse`]; release with [`hg_points_free`].
#[no_mangle]
pub unsafe extern "C" fn hg_points_parse(
    text: *const c_char,
    out: *mut *mut HgPoints,
) -> HgStatus {
    if out.is_null() {
        return HgStatus::NullArgument;
    }
    let text = match read_str(text) {
        Ok(text) => text,
        Err(status) => return status,
    };
    match parse_points_text(text, "<ffi>") {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(HgPoints { inner }));
            HgStatus::Ok
        }
        Err(err) => classify_cli_error(&err),
    }
}

/// Number of points; 0 for a NULL handle.
///
/// # Safety
/// `points` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hg_points_len(points: *const HgPoints) -> usize {
    points.as_ref().map_or(0, |h| h.inner.len())
}

/// Releases a points handle; NULL is a no-op.
///
/// # Safety
/// `points` must be NULL or a handle previously returned by this library,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hg_points_free(points: *mut HgPoints) {
    if !points.is_null() {
        drop(Box::from_raw(points));
    }
}

unsafe fn decide_with(
    inst: *const HgInstance,
    verdict: *mut bool,
    decide: fn(&Instance) -> bool,
) -> HgStatus {
    let (Some(handle), false) = (inst.as_ref(), verdict.is_null()) else {
        return HgStatus::NullArgument;
    };
    *verdict = decide(&handle.inner);
    HgStatus::Ok
}

/// Is there a pair with `0 < a_j - a_i < eps`? (Decided via the hull of the
/// doubled point set.)
///
/// # Safety
/// `inst` must be a live handle; `verdict` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_decide_strict(
    inst: *const HgInstance,
    verdict: *mut bool,
) -> HgStatus {
    decide_with(inst, verdict, decide_strict_closeness_via_hull)
}

/// Is there a pair with `0 <= a_j - a_i < eps`? (Two hull rounds; the
/// second runs on the perturbed instance when the first says no.)
///
/// # Safety
/// `inst` must be a live handle; `verdict` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_decide_closeness(
    inst: *const HgInstance,
    verdict: *mut bool,
) -> HgStatus {
    decide_with(inst, verdict, decide_eps_closeness_via_hull)
}

/// Is there a pair with `0 < a_j - a_i <= eps`? (Decided via convex
/// position of the doubled point set.)
///
/// # Safety
/// `inst` must be a live handle; `verdict` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_decide_weak(
    inst: *const HgInstance,
    verdict: *mut bool,
) -> HgStatus {
    decide_with(inst, verdict, decide_weak_closeness_via_convex_position)
}

/// Does any point lie strictly inside the hull of the multiset?
///
/// # Safety
/// `points` must be a live handle; `verdict` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_any_point_inside(
    points: *const HgPoints,
    verdict: *mut bool,
) -> HgStatus {
    let (Some(handle), false) = (points.as_ref(), verdict.is_null()) else {
        return HgStatus::NullArgument;
    };
    *verdict = any_point_inside(&handle.inner).expect("handles are never empty");
    HgStatus::Ok
}

/// Is every point's location a vertex of the hull?
///
/// # Safety
/// `points` must be a live handle; `verdict` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_in_convex_position(
    points: *const HgPoints,
    verdict: *mut bool,
) -> HgStatus {
    let (Some(handle), false) = (points.as_ref(), verdict.is_null()) else {
        return HgStatus::NullArgument;
    };
    *verdict = in_convex_position(&handle.inner).expect("handles are never empty");
    HgStatus::Ok
}

/// Sorts distinct value tokens by walking the hull of their parabola lift.
/// Writes a newly allocated string of canonical tokens, one per line.
///
/// # Safety
/// `values` must point to `values_len` valid NUL-terminated strings; `out`
/// must be valid. On `HG_STATUS_OK` release the string with
/// [`hg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hg_sort_via_hull(
    values: *const *const c_char,
    values_len: usize,
    out: *mut *mut c_char,
) -> HgStatus {
    if out.is_null() || (values.is_null() && values_len > 0) {
        return HgStatus::NullArgument;
    }
    let mut parsed = Vec::with_capacity(values_len);
    for i in 0..values_len {
        let token = match read_str(*values.add(i)) {
            Ok(token) => token,
            Err(status) => return status,
        };
        match token.parse::<Rational>() {
            Ok(value) => parsed.push(value),
            Err(_) => return HgStatus::ParseError,
        }
    }
    match sort_via_hull(&parsed) {
        Ok(sorted) => {
            let lines: Vec<String> = sorted.iter().map(|v| v.to_string()).collect();
            give_string(lines.join("\n"), out)
        }
        Err(_) => HgStatus::DomainError,
    }
}

/// Renders the instance's doubled point set as a standalone SVG document.
///
/// # Safety
/// `inst` must be a live handle; `out` must be valid. On `HG_STATUS_OK`
/// release the string with [`hg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hg_render_svg(
    inst: *const HgInstance,
    out: *mut *mut c_char,
) -> HgStatus {
    let (Some(handle), false) = (inst.as_ref(), out.is_null()) else {
        return HgStatus::NullArgument;
    };
    give_string(render_svg(&handle.inner), out)
}

/// Releases a string returned by this library; NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string previously returned by this library, not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static description of a status code; never free the result.
#[no_mangle]
pub extern "C" fn hg_status_message(status: HgStatus) -> *const c_char {
    let message: &'static CStr = match status {
        HgStatus::Ok => c"ok",
        HgStatus::NullArgument => c"a required pointer argument was NULL",
        HgStatus::InvalidUtf8 => c"input text was not valid UTF-8",
        HgStatus::ParseError => c"input text did not parse",
        HgStatus::DomainError => c"input violated a domain rule",
    };
    message.as_ptr()
}
