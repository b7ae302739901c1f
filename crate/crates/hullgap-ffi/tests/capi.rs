//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers, status codes, and the NUL-terminated text formats.

use hullgap_ffi::*;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

fn parse_instance(text: &str) -> *mut HgInstance {
    let text = CString::new(text).unwrap();
    let mut handle: *mut HgInstance = ptr::null_mut();
    let status = unsafe { hg_instance_parse(text.as_ptr(), &mut handle) };
    assert_eq!(status, HgStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn parse_points(text: &str) -> *mut HgPoints {
    let text = CString::new(text).unwrap();
    let mut handle: *mut HgPoints = ptr::null_mut();
    let status = unsafe { hg_points_parse(text.as_ptr(), &mut handle) };
    assert_eq!(status, HgStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hg_string_free(s) };
    owned
}

#[test]
fn decides_all_three_problems_through_the_abi() {
    let inst = parse_instance("eps 1\n0\n1\n");
    assert_eq!(unsafe { hg_instance_len(inst) }, 2);

    let mut verdict = true;
    assert_eq!(unsafe { hg_decide_strict(inst, &mut verdict) }, HgStatus::Ok);
    assert!(!verdict, "gap of exactly eps is not strictly close");
    assert_eq!(
        unsafe { hg_decide_closeness(inst, &mut verdict) },
        HgStatus::Ok
    );
    assert!(!verdict);
    assert_eq!(unsafe { hg_decide_weak(inst, &mut verdict) }, HgStatus::Ok);
    assert!(verdict, "gap of exactly eps is weakly close");
    unsafe { hg_instance_free(inst) };

    let duplicates = parse_instance("eps 1\n3\n3\n");
    assert_eq!(
        unsafe { hg_decide_closeness(duplicates, &mut verdict) },
        HgStatus::Ok
    );
    assert!(verdict, "duplicates are eps-close");
    unsafe { hg_instance_free(duplicates) };
}

#[test]
fn builds_instances_from_token_arrays() {
    let eps = CString::new("1/2").unwrap();
    let values: Vec<CString> = ["0", "0.25", "7/3"]
        .iter()
        .map(|v| CString::new(*v).unwrap())
        .collect();
    let pointers: Vec<*const c_char> = values.iter().map(|v| v.as_ptr()).collect();
    let mut handle: *mut HgInstance = ptr::null_mut();
    let status = unsafe {
        hg_instance_new(eps.as_ptr(), pointers.as_ptr(), pointers.len(), &mut handle)
    };
    assert_eq!(status, HgStatus::Ok);
    assert_eq!(unsafe { hg_instance_len(handle) }, 3);

    let mut verdict = false;
    assert_eq!(
        unsafe { hg_decide_strict(handle, &mut verdict) },
        HgStatus::Ok
    );
    assert!(verdict, "0 and 0.25 differ by less than 1/2");
    unsafe { hg_instance_free(handle) };
}

#[test]
fn point_predicates_through_the_abi() {
    // Doubled set of {0, 2} with unit eps: everything on the hull.
    let spread = parse_points("0 0\n2 4\n1/2 1/2\n5/2 13/2\n");
    assert_eq!(unsafe { hg_points_len(spread) }, 4);
    let mut verdict = true;
    assert_eq!(
        unsafe { hg_any_point_inside(spread, &mut verdict) },
        HgStatus::Ok
    );
    assert!(!verdict);
    assert_eq!(
        unsafe { hg_in_convex_position(spread, &mut verdict) },
        HgStatus::Ok
    );
    assert!(verdict);
    unsafe { hg_points_free(spread) };

    let square_with_center = parse_points("0 0\n2 0\n2 2\n0 2\n1 1\n");
    assert_eq!(
        unsafe { hg_any_point_inside(square_with_center, &mut verdict) },
        HgStatus::Ok
    );
    assert!(verdict);
    assert_eq!(
        unsafe { hg_in_convex_position(square_with_center, &mut verdict) },
        HgStatus::Ok
    );
    assert!(!verdict);
    unsafe { hg_points_free(square_with_center) };
}

#[test]
fn sorts_values_via_the_hull_walk() {
    let values: Vec<CString> = ["3", "-1/2", "0.25"]
        .iter()
        .map(|v| CString::new(*v).unwrap())
        .collect();
    let pointers: Vec<*const c_char> = values.iter().map(|v| v.as_ptr()).collect();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { hg_sort_via_hull(pointers.as_ptr(), pointers.len(), &mut out) };
    assert_eq!(status, HgStatus::Ok);
    assert_eq!(take_string(out), "-1/2\n1/4\n3");

    // Duplicate values are a domain error for the sorting reduction.
    let dupes: Vec<CString> = ["1", "1"].iter().map(|v| CString::new(*v).unwrap()).collect();
    let pointers: Vec<*const c_char> = dupes.iter().map(|v| v.as_ptr()).collect();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { hg_sort_via_hull(pointers.as_ptr(), pointers.len(), &mut out) };
    assert_eq!(status, HgStatus::DomainError);
}

#[test]
fn renders_svg_text() {
    let inst = parse_instance("eps 1\n0\n1/2\n");
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { hg_render_svg(inst, &mut out) }, HgStatus::Ok);
    let svg = take_string(out);
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("<svg"));
    assert!(svg.contains("point-interior"));
    unsafe { hg_instance_free(inst) };
}

#[test]
fn reports_errors_as_statuses() {
    let mut handle: *mut HgInstance = ptr::null_mut();

    // NULL text.
    assert_eq!(
        unsafe { hg_instance_parse(ptr::null(), &mut handle) },
        HgStatus::NullArgument
    );

    // Invalid UTF-8.
    let bad_utf8 = CString::new(vec![0xffu8, 0xfe]).unwrap();
    assert_eq!(
        unsafe { hg_instance_parse(bad_utf8.as_ptr(), &mut handle) },
        HgStatus::InvalidUtf8
    );

    // Malformed rational token.
    let garbage = CString::new("eps 1\nnot-a-number\n").unwrap();
    assert_eq!(
        unsafe { hg_instance_parse(garbage.as_ptr(), &mut handle) },
        HgStatus::ParseError
    );

    // Non-positive eps is a domain rule.
    let bad_eps = CString::new("eps 0\n1\n").unwrap();
    assert_eq!(
        unsafe { hg_instance_parse(bad_eps.as_ptr(), &mut handle) },
        HgStatus::DomainError
    );

    // Empty point text is a domain rule.
    let mut points: *mut HgPoints = ptr::null_mut();
    let empty = CString::new("# nothing\n").unwrap();
    assert_eq!(
        unsafe { hg_points_parse(empty.as_ptr(), &mut points) },
        HgStatus::DomainError
    );

    // NULL handles are rejected, not dereferenced.
    let mut verdict = false;
    assert_eq!(
        unsafe { hg_decide_strict(ptr::null(), &mut verdict) },
        HgStatus::NullArgument
    );

    // Frees of NULL are no-ops.
    unsafe {
        hg_instance_free(ptr::null_mut());
        hg_points_free(ptr::null_mut());
        hg_string_free(ptr::null_mut());
    }

    // Every status renders a message.
    for status in [
        HgStatus::Ok,
        HgStatus::NullArgument,
        HgStatus::InvalidUtf8,
        HgStatus::ParseError,
        HgStatus::DomainError,
    ] {
        let message = hg_status_message(status);
        assert!(!message.is_null());
        assert!(!unsafe { CStr::from_ptr(message) }.to_bytes().is_empty());
    }
}
