//! C ABI for the semiconfined oscillator models.
//!
//! The surface follows the usual handle-and-status-code pattern:
//! construct an opaque [`ScoModel`] with [`sco_model_new`], query it
//! through accessor functions that write their result via out-pointers and
//! return an [`ScoStatus`], and release it with [`sco_model_free`].
//!
//! The build script generates `include/semiconfined.h` with cbindgen; the
//! header is committed alongside the crate so C consumers do not need the
//! Rust toolchain to read the declarations.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use semiconfined::models::{semiconfinement_bound, SemiconfinedModel};
use semiconfined::special::{laguerre, log_gamma};
use semiconfined::verify::{full_report, ReportOptions};
use semiconfined::Error;

/// Status code returned by every fallible function of this ABI.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoStatus {
    /// The call succeeded and the out-parameters are valid.
    Ok = 0,
    /// A parameter violated its documented constraint.
    InvalidParameter = 1,
    /// A coordinate argument lay outside the model's domain.
    OutOfDomain = 2,
    /// An iterative routine exhausted its budget before converging.
    NoConvergence = 3,
    /// A value was representable only in log space.
    Overflow = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
    /// An unexpected internal failure; the out-parameters are untouched.
    Internal = 6,
}

impl From<&Error> for ScoStatus {
    fn from(err: &Error) -> Self {
        match err {
            Error::InvalidParameter { .. } => ScoStatus::InvalidParameter,
            Error::OutOfDomain { .. } => ScoStatus::OutOfDomain,
            Error::QuadratureDidNotConverge { .. } => ScoStatus::NoConvergence,
            Error::NormalizationOverflow { .. } => ScoStatus::Overflow,
            Error::TooManyEigenvalues { .. } => ScoStatus::InvalidParameter,
        }
    }
}

/// Opaque handle to a constructed model. Parameter validation happens in
/// [`sco_model_new`]; a non-null handle is therefore always valid.
pub struct ScoModel {
    inner: SemiconfinedModel,
}

/// Writes `value` through `out` unless it is null.
unsafe fn write_out(out: *mut f64, value: f64) -> ScoStatus {
    if out.is_null() {
        return ScoStatus::NullPointer;
    }
    unsafe { *out = value };
    ScoStatus::Ok
}

/// Constructs a model with mass exponent `m` on `(-a, ∞)`.
///
/// On success writes a heap-allocated handle through `out_model` and
/// returns `SCO_STATUS_OK`; the caller owns the handle and must release it
/// with [`sco_model_free`]. On failure nothing is written.
///
/// # Safety
///
/// `out_model` must be a valid pointer to writable memory (or null, which
/// is reported as `SCO_STATUS_NULL_POINTER`).
#[no_mangle]
pub unsafe extern "C" fn sco_model_new(
    omega: f64,
    a: f64,
    alpha: f64,
    m: f64,
    out_model: *mut *mut ScoModel,
) -> ScoStatus {
    if out_model.is_null() {
        return ScoStatus::NullPointer;
    }
    match SemiconfinedModel::new(omega, a, alpha, m) {
        Ok(inner) => {
            let handle = Box::into_raw(Box::new(ScoModel { inner }));
            unsafe { *out_model = handle };
            ScoStatus::Ok
        }
        Err(e) => ScoStatus::from(&e),
    }
}

/// Releases a handle produced by [`sco_model_new`]. Null is a no-op.
///
/// # Safety
///
/// `model` must be null or a handle previously returned by
/// [`sco_model_new`] that has not been freed already.
#[no_mangle]
pub unsafe extern "C" fn sco_model_free(model: *mut ScoModel) {
    if !model.is_null() {
        drop(unsafe { Box::from_raw(model) });
    }
}

/// Position-dependent mass `M(x)`; `+∞` at and beyond the wall.
///
/// # Safety
///
/// `model` must be a live handle from [`sco_model_new`]; `out_value` must
/// be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_model_mass(
    model: *const ScoModel,
    x: f64,
    out_value: *mut f64,
) -> ScoStatus {
    let Some(model) = (unsafe { model.as_ref() }) else {
        return ScoStatus::NullPointer;
    };
    unsafe { write_out(out_value, model.inner.mass(x)) }
}

/// Potential `V(x)`; fails with `SCO_STATUS_OUT_OF_DOMAIN` for `x ≤ -a`.
///
/// # Safety
///
/// `model` must be a live handle from [`sco_model_new`]; `out_value` must
/// be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_model_potential(
    model: *const ScoModel,
    x: f64,
    out_value: *mut f64,
) -> ScoStatus {
    let Some(model) = (unsafe { model.as_ref() }) else {
        return ScoStatus::NullPointer;
    };
    match model.inner.potential(x) {
        Ok(v) => unsafe { write_out(out_value, v) },
        Err(e) => ScoStatus::from(&e),
    }
}

/// Energy of the `n`-th level, `ω(n + ½)`.
///
/// # Safety
///
/// `model` must be a live handle from [`sco_model_new`]; `out_value` must
/// be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_model_energy(
    model: *const ScoModel,
    n: u32,
    out_value: *mut f64,
) -> ScoStatus {
    let Some(model) = (unsafe { model.as_ref() }) else {
        return ScoStatus::NullPointer;
    };
    unsafe { write_out(out_value, model.inner.energy(n as usize)) }
}

/// Normalized eigenfunction `ψ_n(x)`, continuously extended by 0 at and
/// beyond the wall.
///
/// # Safety
///
/// `model` must be a live handle from [`sco_model_new`]; `out_value` must
/// be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_model_wavefunction(
    model: *const ScoModel,
    n: u32,
    x: f64,
    out_value: *mut f64,
) -> ScoStatus {
    let Some(model) = (unsafe { model.as_ref() }) else {
        return ScoStatus::NullPointer;
    };
    unsafe { write_out(out_value, model.inner.wavefunction(n as usize, x)) }
}

/// Normalization constant `C_n`; fails with `SCO_STATUS_OVERFLOW` when it
/// is representable only in log space.
///
/// # Safety
///
/// `model` must be a live handle from [`sco_model_new`]; `out_value` must
/// be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_model_normalization(
    model: *const ScoModel,
    n: u32,
    out_value: *mut f64,
) -> ScoStatus {
    let Some(model) = (unsafe { model.as_ref() }) else {
        return ScoStatus::NullPointer;
    };
    match model.inner.normalization_constant(n as usize) {
        Ok(v) => unsafe { write_out(out_value, v) },
        Err(e) => ScoStatus::from(&e),
    }
}

/// Closed-form location and value of the potential's minimum. For models
/// whose centrifugal term is not repulsive (possible only for `m < 1`)
/// the infimum sits on the wall: `x_min = -a`, `v_min = -∞`.
///
/// # Safety
///
/// `model` must be a live handle from [`sco_model_new`]; the out-pointers
/// must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_model_minimum(
    model: *const ScoModel,
    out_x_min: *mut f64,
    out_v_min: *mut f64,
) -> ScoStatus {
    let Some(model) = (unsafe { model.as_ref() }) else {
        return ScoStatus::NullPointer;
    };
    let minimum = model.inner.potential_minimum();
    let status = unsafe { write_out(out_x_min, minimum.x_min) };
    if status != ScoStatus::Ok {
        return status;
    }
    unsafe { write_out(out_v_min, minimum.v_min) }
}

/// Smallest admissible confinement strength for mass exponent `m`:
/// `max(0, (m-1)/(2-m))`.
///
/// # Safety
///
/// `out_value` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_semiconfinement_bound(m: f64, out_value: *mut f64) -> ScoStatus {
    match semiconfinement_bound(m) {
        Ok(v) => unsafe { write_out(out_value, v) },
        Err(e) => ScoStatus::from(&e),
    }
}

/// Generalized Laguerre polynomial `L_n^{(α)}(z)`, `α > -1`, `z ≥ 0`.
///
/// # Safety
///
/// `out_value` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_laguerre(
    n: u32,
    alpha: f64,
    z: f64,
    out_value: *mut f64,
) -> ScoStatus {
    match laguerre(n as usize, alpha, z) {
        Ok(v) => unsafe { write_out(out_value, v) },
        Err(e) => ScoStatus::from(&e),
    }
}

/// Natural log of the gamma function for `x > 0`.
///
/// # Safety
///
/// `out_value` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_log_gamma(x: f64, out_value: *mut f64) -> ScoStatus {
    match log_gamma(x) {
        Ok(v) => unsafe { write_out(out_value, v) },
        Err(e) => ScoStatus::from(&e),
    }
}

/// Runs the full verification battery (finite-difference spectrum, Gram
/// matrix, residuals, transformation identity, minimum) with default
/// settings and writes the JSON report through `out_json` as a
/// NUL-terminated string owned by the caller, to be released with
/// [`sco_string_free`]. Requires `α > ½`.
///
/// The returned status reflects only whether the battery RAN; the
/// verdicts live inside the report (`"passed"` fields).
///
/// # Safety
///
/// `model` must be a live handle from [`sco_model_new`]; `out_json` must
/// be writable or null.
#[no_mangle]
pub unsafe extern "C" fn sco_model_verify_json(
    model: *const ScoModel,
    out_json: *mut *mut c_char,
) -> ScoStatus {
    let Some(model) = (unsafe { model.as_ref() }) else {
        return ScoStatus::NullPointer;
    };
    if out_json.is_null() {
        return ScoStatus::NullPointer;
    }
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        full_report(&model.inner, &ReportOptions::default())
    }));
    match outcome {
        Ok(Ok(report)) => {
            let text = serde_json::to_string_pretty(&report).expect("reports always serialize");
            let c_text = CString::new(text).expect("JSON contains no NUL bytes");
            unsafe { *out_json = c_text.into_raw() };
            ScoStatus::Ok
        }
        Ok(Err(e)) => ScoStatus::from(&e),
        Err(_) => ScoStatus::Internal,
    }
}

/// Releases a string returned by [`sco_model_verify_json`]. Null is a
/// no-op.
///
/// # Safety
///
/// `s` must be null or a pointer previously returned by this ABI that has
/// not been freed already.
#[no_mangle]
pub unsafe extern "C" fn sco_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
