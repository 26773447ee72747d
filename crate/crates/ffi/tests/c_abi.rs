use std::ffi::{CStr, CString};
use std::ptr;

use hypident_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(hypident_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn gamma_and_errors() {
    let mut v = 0.0;
    assert_eq!(unsafe { hypident_gamma(5.0, &mut v) }, HypidentStatus::Ok);
    assert!((v - 24.0).abs() < 1e-12);

    assert_eq!(unsafe { hypident_gamma(-2.0, &mut v) }, HypidentStatus::Pole);
    assert!(last_error().contains("pole"));
    assert_eq!(unsafe { hypident_gamma(500.0, &mut v) }, HypidentStatus::Overflow);
    assert_eq!(
        unsafe { hypident_gamma(1.0, ptr::null_mut()) },
        HypidentStatus::NullPointer
    );
}

#[test]
fn hyp2f1_through_the_abi() {
    let mut v = 0.0;
    let st = unsafe { hypident_hyp2f1(1.0, 1.0, 2.0, 0.5, &mut v) };
    assert_eq!(st, HypidentStatus::Ok);
    assert!((v - 2.0 * std::f64::consts::LN_2).abs() < 1e-15);
    assert_eq!(
        unsafe { hypident_hyp2f1(0.5, 0.5, 1.0, 1.0, &mut v) },
        HypidentStatus::Domain
    );
    assert_eq!(
        unsafe { hypident_hyp2f1(0.5, 0.5, -1.0, 0.1, &mut v) },
        HypidentStatus::InvalidArgument
    );
}

#[test]
fn constants() {
    let (mut mu, mut eta) = (0.0, 0.0);
    assert_eq!(unsafe { hypident_constants(&mut mu, &mut eta) }, HypidentStatus::Ok);
    assert!((mu * eta * std::f64::consts::PI - 1.0).abs() < 1e-14);
    assert_eq!(
        unsafe { hypident_constants(ptr::null_mut(), &mut eta) },
        HypidentStatus::NullPointer
    );
}

#[test]
fn registry_handle_lifecycle() {
    let reg = hypident_registry_new();
    assert_eq!(unsafe { hypident_registry_len(reg) }, 18);
    assert_eq!(unsafe { hypident_registry_len(ptr::null()) }, 0);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hypident_registry_id(reg, 1, &mut s) }, HypidentStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(s) }.to_str().unwrap(), "EQ2");
    unsafe { hypident_string_free(s) };
    assert_eq!(
        unsafe { hypident_registry_id(reg, 99, &mut s) },
        HypidentStatus::InvalidArgument
    );
    unsafe { hypident_registry_free(reg) };
    unsafe { hypident_registry_free(ptr::null_mut()) };
}

#[test]
fn verify_single_entry_to_json() {
    let reg = hypident_registry_new();
    let id = CString::new("D3").unwrap();
    let mut json = ptr::null_mut();
    let mut agree = false;
    let st = unsafe {
        hypident_verify(reg, id.as_ptr(), HypidentMode::Exact, 8, 1e-9, &mut json, &mut agree)
    };
    assert_eq!(st, HypidentStatus::Ok);
    assert!(agree);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    unsafe { hypident_string_free(json) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entry = &v["entries"][0];
    assert_eq!(entry["id"], "D3");
    assert_eq!(entry["exact_verdict"], "FAIL");
    assert_eq!(entry["first_mismatch"]["order"], 1);
    assert_eq!(entry["first_mismatch"]["symbol"], "ETA");
    assert_eq!(entry["first_mismatch"]["difference"], "-1/1");

    let bad = CString::new("EQ42").unwrap();
    let st = unsafe {
        hypident_verify(reg, bad.as_ptr(), HypidentMode::Both, 8, 1e-9, &mut json, &mut agree)
    };
    assert_eq!(st, HypidentStatus::UnknownIdentity);
    assert_eq!(
        unsafe { hypident_verify(reg, ptr::null(), HypidentMode::Both, 0, 1e-9, &mut json, &mut agree) },
        HypidentStatus::InvalidArgument
    );
    unsafe { hypident_registry_free(reg) };
}
