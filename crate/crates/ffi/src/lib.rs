//! C interface to the relcomp engine.
//!
//! Objects are opaque and owned by the caller once created; release them
//! with the matching `*_free`. Every fallible call returns an [`RcStatus`]
//! and, on failure, records a message readable with [`rc_last_error`] on the
//! same thread. Strings returned through out-parameters are NUL-terminated
//! UTF-8 and must be released with [`rc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use relcomp::cli::parse_group;
use relcomp::gf::Field;
use relcomp::groupaction::GroupSpec;
use relcomp::relcomp::{
    height_compute, ibase_compute, omega_primes, rc_compute, theorem_bounds, ActionHandle,
    RcOptions,
};
use relcomp::witnesses::{construct, verify, Construction, Request, WitnessPackage};
use relcomp::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Hypothesis = 3,
    ResourceBound = 4,
    Parse = 5,
    NotFaithful = 6,
    Arithmetic = 7,
    Panic = 8,
}

/// A finite field.
pub struct RcField(Field);

/// A group `SL_n(q) ⊴ H ≤ ΓL_n(q)`.
pub struct RcGroup(GroupSpec);

/// A group acting on the m-subspaces, with cached stabilizer data.
pub struct RcAction(ActionHandle);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Failure {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

fn status_of(e: &Error) -> RcStatus {
    match e {
        Error::NotPrime(_)
        | Error::ZeroDegree
        | Error::InvalidArgument(_)
        | Error::IndexOutOfRange(_)
        | Error::DimensionMismatch(_) => RcStatus::InvalidArgument,
        Error::FieldTooLarge { .. } | Error::ResourceBound(_) => RcStatus::ResourceBound,
        Error::Hypothesis(_) => RcStatus::Hypothesis,
        Error::Parse(_) => RcStatus::Parse,
        Error::NotFaithful => RcStatus::NotFaithful,
        Error::DivisionByZero | Error::Singular => RcStatus::Arithmetic,
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Outcome) -> RcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            RcStatus::Ok
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(&format!("null pointer: {what}"));
            RcStatus::NullPointer
        }
        Ok(Err(Failure::Core(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            RcStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    Ok(CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Error::InvalidArgument(format!("{what} is not UTF-8")))?)
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn put<T>(out: *mut T, v: T, what: &'static str) -> Outcome {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    let c = CString::new(s).map_err(|_| Error::InvalidArgument("string contains NUL".into()))?;
    put(out, c.into_raw(), "out")
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `GF(p^f)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_field_new(p: u64, f: u32, out: *mut *mut RcField) -> RcStatus {
    guard(|| {
        let field = Field::new(p, f)?;
        put(out, Box::into_raw(Box::new(RcField(field))), "out")
    })
}

/// Field order `q`.
///
/// # Safety
/// `field` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn rc_field_order(field: *const RcField) -> u32 {
    field.as_ref().map_or(0, |f| f.0.q())
}

/// # Safety
/// `field` must come from [`rc_field_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rc_field_free(field: *mut RcField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// A group given by preset name (`PSL`, `PGL`, `PSigmaL`, `PGammaL`),
/// `param:d,e` or `file:PATH`.
///
/// # Safety
/// `spec` must be a NUL-terminated string, `field` a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_group_new(
    spec: *const c_char,
    n: usize,
    field: *const RcField,
    out: *mut *mut RcGroup,
) -> RcStatus {
    guard(|| {
        let spec = str_arg(spec, "spec")?;
        let field = ref_arg(field, "field")?;
        let g = parse_group(spec, n, &field.0)?;
        put(out, Box::into_raw(Box::new(RcGroup(g))), "out")
    })
}

/// # Safety
/// `group` must come from [`rc_group_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rc_group_free(group: *mut RcGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Materializes the action on m-subspaces.
///
/// # Safety
/// `group` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_action_new(
    group: *const RcGroup,
    m: usize,
    out: *mut *mut RcAction,
) -> RcStatus {
    guard(|| {
        let g = ref_arg(group, "group")?;
        let h = ActionHandle::new(&g.0, m)?;
        put(out, Box::into_raw(Box::new(RcAction(h))), "out")
    })
}

/// Number of points acted on.
///
/// # Safety
/// `action` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn rc_action_degree(action: *const RcAction) -> usize {
    action.as_ref().map_or(0, |a| a.0.degree())
}

/// # Safety
/// `action` must come from [`rc_action_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rc_action_free(action: *mut RcAction) {
    if !action.is_null() {
        drop(Box::from_raw(action));
    }
}

/// Relational complexity report as JSON. `budget_ms = 0` means no budget.
///
/// # Safety
/// `action` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_compute_json(
    action: *const RcAction,
    budget_ms: u64,
    with_ibase: bool,
    out_json: *mut *mut c_char,
) -> RcStatus {
    guard(|| {
        let a = ref_arg(action, "action")?;
        let opts = RcOptions {
            budget: (budget_ms > 0).then(|| Duration::from_millis(budget_ms)),
            ibase: with_ibase,
            ..Default::default()
        };
        let report = rc_compute(&a.0, &opts)?;
        put_string(out_json, report.to_json())
    })
}

/// # Safety
/// `action` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_height(action: *const RcAction, out: *mut usize) -> RcStatus {
    guard(|| {
        let a = ref_arg(action, "action")?;
        put(out, height_compute(&a.0)?, "out")
    })
}

/// # Safety
/// `action` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_ibase(action: *const RcAction, out: *mut usize) -> RcStatus {
    guard(|| {
        let a = ref_arg(action, "action")?;
        put(out, ibase_compute(&a.0)?, "out")
    })
}

/// Number of distinct prime divisors of `k ≥ 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_omega_primes(k: u64, out: *mut u32) -> RcStatus {
    guard(|| put(out, omega_primes(k)?, "out"))
}

/// Closed-form bounds `{lower, upper, sources, diagnostic}` as JSON.
///
/// # Safety
/// `group` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_bounds_json(
    group: *const RcGroup,
    m: usize,
    out_json: *mut *mut c_char,
) -> RcStatus {
    guard(|| {
        let g = ref_arg(group, "group")?;
        let b = theorem_bounds(&g.0, m);
        put_string(out_json, serde_json::to_string(&b).expect("serializable"))
    })
}

/// Builds the witness package named by `tag` for `group` and writes its JSON.
///
/// # Safety
/// `tag` must be a NUL-terminated string, `group` a live handle, `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_witness_json(
    tag: *const c_char,
    group: *const RcGroup,
    m: usize,
    out_json: *mut *mut c_char,
) -> RcStatus {
    guard(|| {
        let tag = str_arg(tag, "tag")?;
        let g = ref_arg(group, "group")?;
        let c = Construction::from_tag(tag)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown tag {tag}")))?;
        let pkg = construct(
            c,
            &Request {
                group: g.0.clone(),
                m,
                psi: None,
                lambda: None,
            },
        )?;
        put_string(out_json, pkg.to_json())
    })
}

/// Verifies a package given as JSON. `out_passed` receives the verdict and
/// `out_report` (may be null) the full report as JSON.
///
/// # Safety
/// `package_json` must be a NUL-terminated string and `out_passed` writable;
/// `out_report` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn rc_verify_json(
    package_json: *const c_char,
    out_passed: *mut bool,
    out_report: *mut *mut c_char,
) -> RcStatus {
    guard(|| {
        let text = str_arg(package_json, "package_json")?;
        let pkg = WitnessPackage::from_json(text)?;
        let report = verify(&pkg);
        put(out_passed, report.passed, "out_passed")?;
        if !out_report.is_null() {
            put_string(
                out_report,
                serde_json::to_string(&report).expect("serializable"),
            )?;
        }
        Ok(())
    })
}
