use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use relcomp_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(rc_last_error()) }
        .to_string_lossy()
        .into_owned()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    rc_string_free(s);
    out
}

unsafe fn group(spec: &str, n: usize, p: u64, f: u32) -> (*mut RcField, *mut RcGroup) {
    let mut field = ptr::null_mut();
    assert_eq!(rc_field_new(p, f, &mut field), RcStatus::Ok);
    let mut g = ptr::null_mut();
    let spec = CString::new(spec).unwrap();
    assert_eq!(
        rc_group_new(spec.as_ptr(), n, field, &mut g),
        RcStatus::Ok,
        "{}",
        last_error()
    );
    (field, g)
}

#[test]
fn pgl3_on_points() {
    unsafe {
        let (field, g) = group("PGL", 3, 3, 1);
        assert_eq!(rc_field_order(field), 3);
        let mut action = ptr::null_mut();
        assert_eq!(rc_action_new(g, 1, &mut action), RcStatus::Ok);
        assert_eq!(rc_action_degree(action), 13);

        let mut json = ptr::null_mut();
        assert_eq!(rc_compute_json(action, 0, true, &mut json), RcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["rc"], 3);
        assert_eq!(v["height"], 4);

        let mut h = 0;
        assert_eq!(rc_height(action, &mut h), RcStatus::Ok);
        assert_eq!(h, 4);
        let mut b = 0;
        assert_eq!(rc_ibase(action, &mut b), RcStatus::Ok);
        assert!(b >= h);

        rc_action_free(action);
        rc_group_free(g);
        rc_field_free(field);
    }
}

#[test]
fn witness_round_trip() {
    unsafe {
        let (field, g) = group("PGL", 4, 3, 1);
        let tag = CString::new("general-n").unwrap();
        let mut json = ptr::null_mut();
        assert_eq!(
            rc_witness_json(tag.as_ptr(), g, 1, &mut json),
            RcStatus::Ok,
            "{}",
            last_error()
        );
        let pkg = take(json);

        let text = CString::new(pkg.clone()).unwrap();
        let mut passed = false;
        let mut report = ptr::null_mut();
        assert_eq!(
            rc_verify_json(text.as_ptr(), &mut passed, &mut report),
            RcStatus::Ok
        );
        assert!(passed, "{}", take(report));
        rc_string_free(report);

        let mut v: serde_json::Value = serde_json::from_str(&pkg).unwrap();
        v["Y"] = v["X"].clone();
        let text = CString::new(v.to_string()).unwrap();
        assert_eq!(
            rc_verify_json(text.as_ptr(), &mut passed, ptr::null_mut()),
            RcStatus::Ok
        );
        assert!(!passed);

        let mut bounds = ptr::null_mut();
        assert_eq!(rc_bounds_json(g, 1, &mut bounds), RcStatus::Ok);
        let b: serde_json::Value = serde_json::from_str(&take(bounds)).unwrap();
        assert!(b.get("lower").is_some());

        rc_group_free(g);
        rc_field_free(field);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut field = ptr::null_mut();
        assert_eq!(rc_field_new(6, 1, &mut field), RcStatus::InvalidArgument);
        assert!(!last_error().is_empty());
        assert_eq!(rc_field_new(5, 1, ptr::null_mut()), RcStatus::NullPointer);

        let mut h = 0;
        assert_eq!(rc_height(ptr::null(), &mut h), RcStatus::NullPointer);

        let mut k = 0;
        assert_eq!(rc_omega_primes(0, &mut k), RcStatus::InvalidArgument);
        assert_eq!(rc_omega_primes(60, &mut k), RcStatus::Ok);
        assert_eq!(k, 3);
        assert!(last_error().is_empty());

        let (field, g) = group("PGL", 2, 5, 1);
        let tag = CString::new("no-such-tag").unwrap();
        let mut json = ptr::null_mut();
        assert_eq!(
            rc_witness_json(tag.as_ptr(), g, 1, &mut json),
            RcStatus::InvalidArgument
        );
        let bad = CString::new("{").unwrap();
        let mut passed = true;
        assert_eq!(
            rc_verify_json(bad.as_ptr(), &mut passed, ptr::null_mut()),
            RcStatus::Parse
        );
        rc_group_free(g);
        rc_field_free(field);

        rc_string_free(ptr::null_mut());
        rc_action_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/relcomp.h");
    assert!(header.exists(), "header not generated");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "rc_compute_json",
        "rc_verify_json",
        "rc_last_error",
        "RC_STATUS_NULL_POINTER",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler; skipping syntax check");
        return;
    };
    assert!(status.success());
}
