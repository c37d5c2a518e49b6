//! C ABI for the csl toolkit.
//!
//! Conventions: every function returns a `CslStatus`; out-parameters are
//! written only on `Ok`. Strings returned through `char **` are allocated
//! here and must be released with `csl_string_free`. Group handles are
//! opaque and must be released with `csl_group_close`.

use std::collections::BTreeMap;
use std::ffi::{c_char, c_int, CStr, CString};

use csl_core::groupengine::{catalog_group, prime_graph, EngineError, PermGroup};
use csl_core::lieorders::{
    aut_order, bound_check, prime_power, simple_order, BoundKind, Family, LieError, LieSpec,
};
use csl_core::numtheory::{greatest_primitive_divisor, NumTheoryError};
use csl_core::verify::run_check;
use num_bigint::BigInt;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CslStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    DomainError = 4,
    BudgetExceeded = 5,
    CapExceeded = 6,
    UnknownName = 7,
    InternalError = 8,
}

/// An opaque handle to a catalog group.
pub struct CslGroup {
    inner: PermGroup,
}

fn engine_status(e: &EngineError) -> CslStatus {
    match e {
        EngineError::UnknownGroup(_) => CslStatus::UnknownName,
        EngineError::CapExceeded { .. } => CslStatus::CapExceeded,
        EngineError::InvalidPermutation(_) => CslStatus::InvalidArgument,
        EngineError::NotInGroup(_) | EngineError::NotSubgroup(_) | EngineError::NotNormal(_) => {
            CslStatus::InvalidArgument
        }
        EngineError::Domain(_) => CslStatus::DomainError,
    }
}

fn lie_status(e: &LieError) -> CslStatus {
    match e {
        LieError::InvalidSpec(_) => CslStatus::InvalidArgument,
        LieError::Domain(_) | LieError::InexactFormula(_) => CslStatus::DomainError,
        LieError::NumTheory(n) => numtheory_status(n),
    }
}

fn numtheory_status(e: &NumTheoryError) -> CslStatus {
    match e {
        NumTheoryError::Domain(_) => CslStatus::DomainError,
        NumTheoryError::FactorBudget { .. } => CslStatus::BudgetExceeded,
    }
}

/// # Safety
/// `s` must be a valid NUL-terminated string or null.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CslStatus> {
    if s.is_null() {
        return Err(CslStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| CslStatus::InvalidUtf8)
}

fn write_string(out: *mut *mut c_char, value: String) -> CslStatus {
    match CString::new(value) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CslStatus::Ok
        }
        Err(_) => CslStatus::InternalError,
    }
}

/// The library version, as a static string that must not be freed.
#[no_mangle]
pub extern "C" fn csl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string allocated by this library.
///
/// # Safety
/// `s` must be a pointer previously returned through a `char **`
/// out-parameter of this library, or null.
#[no_mangle]
pub unsafe extern "C" fn csl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opens a catalog group by label (for example "alt(5)" or "psl2(7)").
///
/// # Safety
/// `label` must be a valid NUL-terminated string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_group_open(
    label: *const c_char,
    out: *mut *mut CslGroup,
) -> CslStatus {
    if out.is_null() {
        return CslStatus::NullPointer;
    }
    let label = match read_str(label) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match catalog_group(label) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(CslGroup { inner }));
            CslStatus::Ok
        }
        Err(e) => engine_status(&e),
    }
}

/// Releases a group handle.
///
/// # Safety
/// `g` must be a handle from `csl_group_open`, or null.
#[no_mangle]
pub unsafe extern "C" fn csl_group_close(g: *mut CslGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_group_order(g: *const CslGroup, out: *mut u64) -> CslStatus {
    if g.is_null() || out.is_null() {
        return CslStatus::NullPointer;
    }
    match (*g).inner.order() {
        Ok(order) => {
            *out = order;
            CslStatus::Ok
        }
        Err(e) => engine_status(&e),
    }
}

/// The class-size spectrum N(G) as JSON.
///
/// # Safety
/// `g` must be a live handle; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_group_spectrum_json(
    g: *const CslGroup,
    out_json: *mut *mut c_char,
) -> CslStatus {
    if g.is_null() || out_json.is_null() {
        return CslStatus::NullPointer;
    }
    match (*g).inner.spectrum() {
        Ok(s) => write_string(out_json, s.to_json()),
        Err(e) => engine_status(&e),
    }
}

/// The element-order set of the group as a JSON array.
///
/// # Safety
/// `g` must be a live handle; `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_group_omega_json(
    g: *const CslGroup,
    out_json: *mut *mut c_char,
) -> CslStatus {
    if g.is_null() || out_json.is_null() {
        return CslStatus::NullPointer;
    }
    match (*g).inner.element_orders() {
        Ok(orders) => {
            let v: Vec<u64> = orders.into_iter().collect();
            write_string(out_json, serde_json::to_string(&v).expect("serializes"))
        }
        Err(e) => engine_status(&e),
    }
}

/// The prime graph of the group in DOT form.
///
/// # Safety
/// `g` must be a live handle; `out_dot` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_group_prime_graph_dot(
    g: *const CslGroup,
    out_dot: *mut *mut c_char,
) -> CslStatus {
    if g.is_null() || out_dot.is_null() {
        return CslStatus::NullPointer;
    }
    match prime_graph(&(*g).inner) {
        Ok(graph) => write_string(out_dot, graph.to_dot()),
        Err(e) => engine_status(&e),
    }
}

/// The greatest primitive divisor k_i(a), as a decimal string.
///
/// # Safety
/// `out_decimal` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_greatest_primitive_divisor(
    a: i64,
    i: u32,
    out_decimal: *mut *mut c_char,
) -> CslStatus {
    if out_decimal.is_null() {
        return CslStatus::NullPointer;
    }
    if a.abs() <= 1 || i == 0 {
        return CslStatus::DomainError;
    }
    match greatest_primitive_divisor(&BigInt::from(a), i) {
        Ok(k) => write_string(out_decimal, k.to_string()),
        Err(e) => numtheory_status(&e),
    }
}

fn parse_spec(family: &str, rank: u32, q: u64) -> Result<LieSpec, CslStatus> {
    let family = Family::parse(family).ok_or(CslStatus::UnknownName)?;
    let (p, n) = prime_power(q).ok_or(CslStatus::InvalidArgument)?;
    LieSpec::new(family, rank, p, n).map_err(|e| lie_status(&e))
}

/// The order of the simple group (or of its automorphism group when
/// `aut` is nonzero), as a decimal string.
///
/// # Safety
/// `family` must be a valid NUL-terminated string; `out_decimal` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_simple_order(
    family: *const c_char,
    rank: u32,
    q: u64,
    aut: c_int,
    out_decimal: *mut *mut c_char,
) -> CslStatus {
    if out_decimal.is_null() {
        return CslStatus::NullPointer;
    }
    let family = match read_str(family) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let spec = match parse_spec(family, rank, q) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let order = if aut != 0 {
        aut_order(&spec)
    } else {
        simple_order(&spec)
    };
    match order {
        Ok(o) => write_string(out_decimal, o.value().to_string()),
        Err(e) => lie_status(&e),
    }
}

/// Whether the order bound holds: |L| < (|L|_p)^3, or with `aut` nonzero
/// |Aut(L)|^2 < (|L|_p)^7. Writes 1 or 0.
///
/// # Safety
/// `family` must be a valid NUL-terminated string; `out_holds` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_bound_check(
    family: *const c_char,
    rank: u32,
    q: u64,
    aut: c_int,
    out_holds: *mut c_int,
) -> CslStatus {
    if out_holds.is_null() {
        return CslStatus::NullPointer;
    }
    let family = match read_str(family) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let spec = match parse_spec(family, rank, q) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let kind = if aut != 0 {
        BoundKind::Aut
    } else {
        BoundKind::Group
    };
    match bound_check(&spec, kind) {
        Ok(holds) => {
            *out_holds = holds.into();
            CslStatus::Ok
        }
        Err(e) => lie_status(&e),
    }
}

/// Runs a named check. `params_json` is either null or a JSON object of
/// integer overrides, for example {"q_max": 64}. The full report is
/// returned as JSON; a failing check still returns `Ok` here, with the
/// failure recorded in the report's `status` field.
///
/// # Safety
/// `id` must be a valid NUL-terminated string; `params_json` must be a
/// valid NUL-terminated string or null; `out_report_json` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn csl_run_check(
    id: *const c_char,
    params_json: *const c_char,
    out_report_json: *mut *mut c_char,
) -> CslStatus {
    if out_report_json.is_null() {
        return CslStatus::NullPointer;
    }
    let id = match read_str(id) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let params: BTreeMap<String, u64> = if params_json.is_null() {
        BTreeMap::new()
    } else {
        let text = match read_str(params_json) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match serde_json::from_str(text) {
            Ok(p) => p,
            Err(_) => return CslStatus::InvalidArgument,
        }
    };
    match run_check(id, &params) {
        Ok(report) => write_string(out_report_json, report.to_json()),
        Err(csl_core::verify::VerifyError::UnknownCheck(_)) => CslStatus::UnknownName,
        Err(csl_core::verify::VerifyError::BadParam { .. }) => CslStatus::InvalidArgument,
        Err(csl_core::verify::VerifyError::Execution(_)) => CslStatus::InternalError,
    }
}
