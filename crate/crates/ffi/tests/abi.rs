//! Exercises the C ABI through the exported symbols, plus a smoke
//! compile-and-run of a real C client against the generated header.

use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use csl_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { csl_string_free(p) };
    s
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(csl_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn group_lifecycle_and_queries() {
    let label = CString::new("alt(5)").unwrap();
    let mut g: *mut CslGroup = ptr::null_mut();
    let status = unsafe { csl_group_open(label.as_ptr(), &mut g) };
    assert_eq!(status, CslStatus::Ok);
    assert!(!g.is_null());

    let mut order: u64 = 0;
    assert_eq!(unsafe { csl_group_order(g, &mut order) }, CslStatus::Ok);
    assert_eq!(order, 60);

    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { csl_group_spectrum_json(g, &mut json) },
        CslStatus::Ok
    );
    let spectrum = take_string(json);
    assert!(spectrum.contains("12"), "{spectrum}");
    let parsed = csl_core::spectrumlab::Spectrum::from_json(&spectrum).unwrap();
    assert_eq!(
        parsed.sizes().iter().copied().collect::<Vec<u64>>(),
        vec![12, 15, 20]
    );

    let mut omega: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { csl_group_omega_json(g, &mut omega) },
        CslStatus::Ok
    );
    assert_eq!(take_string(omega), "[1,2,3,5]");

    let mut dot: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { csl_group_prime_graph_dot(g, &mut dot) },
        CslStatus::Ok
    );
    let dot = take_string(dot);
    assert!(dot.starts_with("graph GK {"), "{dot}");

    unsafe { csl_group_close(g) };
}

#[test]
fn error_codes() {
    let mut g: *mut CslGroup = ptr::null_mut();
    let bad = CString::new("sporadic(1)").unwrap();
    assert_eq!(
        unsafe { csl_group_open(bad.as_ptr(), &mut g) },
        CslStatus::UnknownName
    );
    let big = CString::new("sym(10)").unwrap();
    assert_eq!(
        unsafe { csl_group_open(big.as_ptr(), &mut g) },
        CslStatus::CapExceeded
    );
    assert_eq!(
        unsafe { csl_group_open(ptr::null(), &mut g) },
        CslStatus::NullPointer
    );

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { csl_greatest_primitive_divisor(1, 3, &mut out) },
        CslStatus::DomainError
    );

    let family = CString::new("A").unwrap();
    let mut holds: c_int = -1;
    assert_eq!(
        unsafe { csl_bound_check(family.as_ptr(), 1, 6, 0, &mut holds) },
        CslStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { csl_bound_check(family.as_ptr(), 1, 2, 0, &mut holds) },
        CslStatus::InvalidArgument
    );
}

#[test]
fn primitive_divisor_and_orders() {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { csl_greatest_primitive_divisor(4, 6, &mut out) },
        CslStatus::Ok
    );
    assert_eq!(take_string(out), "13");

    let family = CString::new("D").unwrap();
    let mut decimal: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { csl_simple_order(family.as_ptr(), 4, 2, 0, &mut decimal) },
        CslStatus::Ok
    );
    assert_eq!(take_string(decimal), "174182400");
    assert_eq!(
        unsafe { csl_simple_order(family.as_ptr(), 4, 2, 1, &mut decimal) },
        CslStatus::Ok
    );
    assert_eq!(take_string(decimal), "1045094400");

    // the one recorded bound violation is reachable through the ABI
    let a = CString::new("A").unwrap();
    let mut holds: c_int = -1;
    assert_eq!(
        unsafe { csl_bound_check(a.as_ptr(), 1, 8, 1, &mut holds) },
        CslStatus::Ok
    );
    assert_eq!(holds, 0);
    assert_eq!(
        unsafe { csl_bound_check(a.as_ptr(), 1, 8, 0, &mut holds) },
        CslStatus::Ok
    );
    assert_eq!(holds, 1);
}

#[test]
fn run_check_reports() {
    let id = CString::new("zsigmondy").unwrap();
    let params = CString::new(r#"{"a_max": 9, "i_max": 8}"#).unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { csl_run_check(id.as_ptr(), params.as_ptr(), &mut out) },
        CslStatus::Ok
    );
    let report = take_string(out);
    assert!(report.contains("\"status\": \"pass\""), "{report}");

    let bad = CString::new("nonesuch").unwrap();
    assert_eq!(
        unsafe { csl_run_check(bad.as_ptr(), ptr::null(), &mut out) },
        CslStatus::UnknownName
    );
}

/// Compiles and runs a small C program against include/csl.h and the
/// static library, when a C compiler is available.
#[test]
fn c_client_smoke() {
    let manifest = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    assert!(header_dir.join("csl.h").exists(), "generated header exists");

    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    if std::process::Command::new(&cc)
        .arg("--version")
        .output()
        .is_err()
    {
        eprintln!("skipping: no C compiler");
        return;
    }

    // locate libcsl_ffi.a next to the test executable's target dir
    let mut lib_dir = std::env::current_exe().unwrap();
    lib_dir.pop(); // test binary
    lib_dir.pop(); // deps
    let lib = lib_dir.join("libcsl_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not present", lib.display());
        return;
    }

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include <string.h>
#include "csl.h"

int main(void) {
    CslGroup *g = NULL;
    if (csl_group_open("psl2(7)", &g) != CslStatus_Ok) return 1;
    uint64_t order = 0;
    if (csl_group_order(g, &order) != CslStatus_Ok) return 2;
    if (order != 168) return 3;
    char *k = NULL;
    if (csl_greatest_primitive_divisor(4, 6, &k) != CslStatus_Ok) return 4;
    if (strcmp(k, "13") != 0) return 5;
    csl_string_free(k);
    csl_group_close(g);
    printf("ok\n");
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("client");
    let status = std::process::Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(&header_dir)
        .arg(lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C client compiles");
    let out = std::process::Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "C client runs: {out:?}");
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
