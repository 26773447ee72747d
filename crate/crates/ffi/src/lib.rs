//! C ABI over the `hypident` engine.
//!
//! Every entry point returns a [`HypidentStatus`]; results go through out
//! pointers. Strings handed out by the library must be released with
//! [`hypident_string_free`]. The last error message of the calling thread
//! is available from [`hypident_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use hypident::error::Error;
use hypident::gamma::{gamma, ramanujan_constants};
use hypident::hyp2f1::{hyp2f1, Hyp2F1Params};
use hypident::registry::{default_grid, run_expectations, Mode, Registry, RunSettings};
use hypident::report::{now_iso8601, ReportDocument};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypidentStatus {
    Ok = 0,
    NullPointer = 1,
    Pole = 2,
    Overflow = 3,
    Domain = 4,
    Convergence = 5,
    InvalidArgument = 6,
    NotExactlyDecidable = 7,
    UnknownIdentity = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypidentMode {
    Exact = 0,
    Numeric = 1,
    Both = 2,
}

/// Opaque handle to an identity registry.
pub struct HypidentRegistry {
    inner: Registry,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(err: &Error) -> HypidentStatus {
    set_error(err.to_string());
    match err {
        Error::Pole(_) => HypidentStatus::Pole,
        Error::Overflow(_) => HypidentStatus::Overflow,
        Error::Domain { .. } => HypidentStatus::Domain,
        Error::Convergence { .. } => HypidentStatus::Convergence,
        Error::NotExactlyExpandable(_) => HypidentStatus::NotExactlyDecidable,
        Error::UnknownIdentity(_) => HypidentStatus::UnknownIdentity,
        Error::PochhammerPole { .. }
        | Error::ZeroConstantTerm
        | Error::NonZeroInnerConstant
        | Error::InvalidPrefactor(_) => HypidentStatus::InvalidArgument,
    }
}

fn write_out<T>(out: *mut T, value: T) -> HypidentStatus {
    if out.is_null() {
        set_error("null output pointer");
        return HypidentStatus::NullPointer;
    }
    // SAFETY: checked non-null; caller promises it points to writable T.
    unsafe { out.write(value) };
    HypidentStatus::Ok
}

/// Gamma function. Writes `Γ(x)` to `out`.
///
/// # Safety
/// `out` must be null or point to writable memory for one `double`.
#[no_mangle]
pub unsafe extern "C" fn hypident_gamma(x: f64, out: *mut f64) -> HypidentStatus {
    match gamma(x) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(&e),
    }
}

/// `2F1(a, b; c; z)` for real `z` below the direct-series cap.
///
/// # Safety
/// `out` must be null or point to writable memory for one `double`.
#[no_mangle]
pub unsafe extern "C" fn hypident_hyp2f1(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    out: *mut f64,
) -> HypidentStatus {
    match Hyp2F1Params::new(a, b, c).and_then(|p| hyp2f1(p, z)) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(&e),
    }
}

/// Writes `mu = Γ(1/2)/Γ(3/4)²` and `eta = Γ(3/4)²/Γ(1/2)³`.
///
/// # Safety
/// Both pointers must be null or point to writable `double`s.
#[no_mangle]
pub unsafe extern "C" fn hypident_constants(mu: *mut f64, eta: *mut f64) -> HypidentStatus {
    if mu.is_null() || eta.is_null() {
        set_error("null output pointer");
        return HypidentStatus::NullPointer;
    }
    let k = ramanujan_constants();
    write_out(mu, k.mu);
    write_out(eta, k.eta)
}

/// Creates the built-in registry. Free with [`hypident_registry_free`].
#[no_mangle]
pub extern "C" fn hypident_registry_new() -> *mut HypidentRegistry {
    Box::into_raw(Box::new(HypidentRegistry {
        inner: Registry::builtin(),
    }))
}

/// # Safety
/// `reg` must be null or a handle from [`hypident_registry_new`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn hypident_registry_free(reg: *mut HypidentRegistry) {
    if !reg.is_null() {
        // SAFETY: handle came from Box::into_raw in hypident_registry_new.
        drop(unsafe { Box::from_raw(reg) });
    }
}

/// Number of registry entries, 0 for a null handle.
///
/// # Safety
/// `reg` must be null or a live registry handle.
#[no_mangle]
pub unsafe extern "C" fn hypident_registry_len(reg: *const HypidentRegistry) -> usize {
    // SAFETY: caller guarantees a live handle or null.
    unsafe { reg.as_ref() }.map_or(0, |r| r.inner.len())
}

/// Id of entry `index` as a newly allocated string.
///
/// # Safety
/// `reg` must be a live handle; `out` must point to a writable `char *`.
#[no_mangle]
pub unsafe extern "C" fn hypident_registry_id(
    reg: *const HypidentRegistry,
    index: usize,
    out: *mut *mut c_char,
) -> HypidentStatus {
    // SAFETY: caller guarantees a live handle or null.
    let Some(reg) = (unsafe { reg.as_ref() }) else {
        set_error("null registry handle");
        return HypidentStatus::NullPointer;
    };
    let Some(ident) = reg.inner.identities.get(index) else {
        set_error(format!("index {index} out of range"));
        return HypidentStatus::InvalidArgument;
    };
    let s = CString::new(ident.id.as_str()).expect("ids have no NUL");
    write_out(out, s.into_raw())
}

/// Runs the verifiers on one entry (`id`) or on all entries (`id == NULL`)
/// over the default grid and writes the JSON report to `out_json`.
/// `out_agree` receives whether every verdict matches its expectation.
///
/// # Safety
/// `reg` must be a live handle, `id` null or a NUL-terminated string,
/// `out_json` and `out_agree` writable.
#[no_mangle]
pub unsafe extern "C" fn hypident_verify(
    reg: *const HypidentRegistry,
    id: *const c_char,
    mode: HypidentMode,
    order: u32,
    tol: f64,
    out_json: *mut *mut c_char,
    out_agree: *mut bool,
) -> HypidentStatus {
    // SAFETY: caller guarantees a live handle or null.
    let Some(reg) = (unsafe { reg.as_ref() }) else {
        set_error("null registry handle");
        return HypidentStatus::NullPointer;
    };
    if out_json.is_null() || out_agree.is_null() {
        set_error("null output pointer");
        return HypidentStatus::NullPointer;
    }
    if order == 0 || tol.is_nan() || tol <= 0.0 {
        set_error("order must be >= 1 and tol > 0");
        return HypidentStatus::InvalidArgument;
    }
    let ids = if id.is_null() {
        None
    } else {
        // SAFETY: caller guarantees a NUL-terminated string.
        match unsafe { CStr::from_ptr(id) }.to_str() {
            Ok(s) => Some(vec![s.to_string()]),
            Err(_) => {
                set_error("id is not valid UTF-8");
                return HypidentStatus::InvalidArgument;
            }
        }
    };
    let settings = RunSettings {
        mode: match mode {
            HypidentMode::Exact => Mode::Exact,
            HypidentMode::Numeric => Mode::Numeric,
            HypidentMode::Both => Mode::Both,
        },
        order: order as usize,
        grid: default_grid(),
        tol,
    };
    let summary = match run_expectations(&reg.inner, ids.as_deref(), &settings) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let json = ReportDocument::new(&summary, &settings, now_iso8601()).to_json();
    let Ok(json) = CString::new(json) else {
        set_error("report contains NUL");
        return HypidentStatus::Internal;
    };
    write_out(out_agree, summary.agree);
    write_out(out_json, json.into_raw())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hypident_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: pointer came from CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message for the most recent failure on this thread; empty if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hypident_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
