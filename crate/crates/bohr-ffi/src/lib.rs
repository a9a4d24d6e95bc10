//! C ABI for the bohr crate: opaque handles, integer error codes, and a
//! thread-local last-error message. The header `include/bohr.h` is
//! generated by cbindgen at build time.
//!
//! Ownership rules: every `*_new`/`*_parse` output must be released with
//! the matching `*_free`; strings returned by the library are released
//! with `bohr_string_free`. All handles are read-only after creation and
//! may be shared across threads.

#![allow(clippy::missing_safety_doc)] // pointer contracts are stated in the module docs

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use bohr::parse::{parse_function, parse_weights, FunctionSpec};
use bohr::verify::{self, table_to_csv};
use bohr::{
    characteristic, solve_radius, Error, RadiusProblem, SeriesFunction, WeightSequence,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BohrStatus {
    Ok = 0,
    DomainError = 1,
    InvalidInput = 2,
    PreconditionViolated = 3,
    NoRoot = 4,
    ParseError = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(err: Error) -> BohrStatus {
    let code = match err {
        Error::Domain(_) => BohrStatus::DomainError,
        Error::Invalid(_) => BohrStatus::InvalidInput,
        Error::Precondition(_) => BohrStatus::PreconditionViolated,
        Error::NoRoot => BohrStatus::NoRoot,
        Error::Parse(_) => BohrStatus::ParseError,
    };
    set_error(err.to_string());
    code
}

/// Message for the most recent error on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bohr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Opaque weight sequence handle.
pub struct BohrWeights(WeightSequence);
/// Opaque analytic function handle.
pub struct BohrFunction(SeriesFunction);
/// Opaque radius problem handle.
pub struct BohrProblem(RadiusProblem);

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, BohrStatus> {
    if s.is_null() {
        set_error("null string argument".into());
        return Err(BohrStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8".into());
        BohrStatus::InvalidUtf8
    })
}

macro_rules! out_ptr {
    ($p:expr) => {
        match unsafe { $p.as_mut() } {
            Some(r) => r,
            None => {
                set_error("null output pointer".into());
                return BohrStatus::NullPointer;
            }
        }
    };
}

/// Parse a weight spec ("geometric" | "even" | "lacunary:<k>" |
/// "mask:<s>+<d>n[,...]") into a handle.
#[no_mangle]
pub unsafe extern "C" fn bohr_weights_parse(
    spec: *const c_char,
    out: *mut *mut BohrWeights,
) -> BohrStatus {
    let out = out_ptr!(out);
    let spec = match read_str(spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match parse_weights(spec) {
        Ok(w) => {
            *out = Box::into_raw(Box::new(BohrWeights(w)));
            BohrStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn bohr_weights_free(w: *mut BohrWeights) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// `phi_n(r)`.
#[no_mangle]
pub unsafe extern "C" fn bohr_weights_term(
    w: *const BohrWeights,
    n: u32,
    r: f64,
    out: *mut f64,
) -> BohrStatus {
    let out = out_ptr!(out);
    let Some(w) = w.as_ref() else {
        set_error("null weights handle".into());
        return BohrStatus::NullPointer;
    };
    match w.0.term(n, r) {
        Ok(v) => {
            *out = v;
            BohrStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// `Phi_N(r)`, the exact tail sum.
#[no_mangle]
pub unsafe extern "C" fn bohr_weights_tail(
    w: *const BohrWeights,
    n_start: u32,
    r: f64,
    out: *mut f64,
) -> BohrStatus {
    let out = out_ptr!(out);
    let Some(w) = w.as_ref() else {
        set_error("null weights handle".into());
        return BohrStatus::NullPointer;
    };
    match w.0.tail(n_start, r) {
        Ok(v) => {
            *out = v;
            BohrStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Parse an analytic function spec ("mobius:a=..", "blaschke:zeros=..",
/// "schur:gammas=.."). The "extremal:" form is a harmonic pair and is
/// rejected here.
#[no_mangle]
pub unsafe extern "C" fn bohr_function_parse(
    spec: *const c_char,
    out: *mut *mut BohrFunction,
) -> BohrStatus {
    let out = out_ptr!(out);
    let spec = match read_str(spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match parse_function(spec) {
        Ok(FunctionSpec::Analytic(f)) => {
            *out = Box::into_raw(Box::new(BohrFunction(f)));
            BohrStatus::Ok
        }
        Ok(FunctionSpec::Extremal { .. }) => {
            set_error("'extremal:' is a harmonic pair; pass it to bohr_verify instead".into());
            BohrStatus::InvalidInput
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn bohr_function_free(f: *mut BohrFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// `f(z)` for `z = z_re + i z_im`, using the exact evaluator.
#[no_mangle]
pub unsafe extern "C" fn bohr_function_eval(
    f: *const BohrFunction,
    z_re: f64,
    z_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> BohrStatus {
    let out_re = out_ptr!(out_re);
    let out_im = out_ptr!(out_im);
    let Some(f) = f.as_ref() else {
        set_error("null function handle".into());
        return BohrStatus::NullPointer;
    };
    let v = f.0.eval(num_complex::Complex64::new(z_re, z_im));
    *out_re = v.re;
    *out_im = v.im;
    BohrStatus::Ok
}

/// Build a problem handle. The weight handle is copied; the caller keeps
/// ownership. `limit_m != 0` selects the m -> infinity form (then `m` is
/// ignored).
#[no_mangle]
pub unsafe extern "C" fn bohr_problem_new(
    m: u32,
    p: f64,
    k: f64,
    n_start: u32,
    weights: *const BohrWeights,
    limit_m: c_int,
    out: *mut *mut BohrProblem,
) -> BohrStatus {
    let out = out_ptr!(out);
    let Some(w) = weights.as_ref() else {
        set_error("null weights handle".into());
        return BohrStatus::NullPointer;
    };
    let built = if limit_m != 0 {
        RadiusProblem::new_limit(p, k, n_start, w.0.clone())
    } else {
        RadiusProblem::new(m, p, k, n_start, w.0.clone())
    };
    match built {
        Ok(prob) => {
            *out = Box::into_raw(Box::new(BohrProblem(prob)));
            BohrStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn bohr_problem_free(p: *mut BohrProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// `F(x)`, the characteristic function whose first crossing of 1 is the
/// sharp radius.
#[no_mangle]
pub unsafe extern "C" fn bohr_characteristic(
    prob: *const BohrProblem,
    x: f64,
    out: *mut f64,
) -> BohrStatus {
    let out = out_ptr!(out);
    let Some(prob) = prob.as_ref() else {
        set_error("null problem handle".into());
        return BohrStatus::NullPointer;
    };
    match characteristic(&prob.0, x) {
        Ok(v) => {
            *out = v;
            BohrStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Solve the sharp radius. `residual` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn bohr_solve_radius(
    prob: *const BohrProblem,
    radius: *mut f64,
    residual: *mut f64,
) -> BohrStatus {
    let radius = out_ptr!(radius);
    let Some(prob) = prob.as_ref() else {
        set_error("null problem handle".into());
        return BohrStatus::NullPointer;
    };
    match solve_radius(&prob.0) {
        Ok(res) => {
            *radius = res.radius;
            if let Some(r) = residual.as_mut() {
                *r = res.residual;
            }
            BohrStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Grid verification for a function spec (any of the four spec forms).
/// Writes the solved radius, the grid maximum of the left-hand side, and
/// a pass flag (`max LHS <= 1 + 1e-10`).
#[no_mangle]
pub unsafe extern "C" fn bohr_verify(
    prob: *const BohrProblem,
    f_spec: *const c_char,
    r_steps: usize,
    z_steps: usize,
    radius: *mut f64,
    max_lhs: *mut f64,
    passed: *mut c_int,
) -> BohrStatus {
    let radius = out_ptr!(radius);
    let max_lhs = out_ptr!(max_lhs);
    let passed = out_ptr!(passed);
    let Some(prob) = prob.as_ref() else {
        set_error("null problem handle".into());
        return BohrStatus::NullPointer;
    };
    let spec = match read_str(f_spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match verify::verify_inequality(&prob.0, spec, r_steps, z_steps) {
        Ok(rep) => {
            *radius = rep.radius;
            *max_lhs = rep.max_lhs.max(rep.envelope_max);
            *passed = rep.passed as c_int;
            BohrStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Sharpness probe at `r` beyond the solved radius with witness grid
/// step `a_step`. Writes the best extremal witness and whether its LHS
/// exceeds 1.
#[no_mangle]
pub unsafe extern "C" fn bohr_probe(
    prob: *const BohrProblem,
    r: f64,
    a_step: f64,
    a_witness: *mut f64,
    lhs: *mut f64,
    exceeds: *mut c_int,
) -> BohrStatus {
    let a_witness = out_ptr!(a_witness);
    let lhs = out_ptr!(lhs);
    let exceeds = out_ptr!(exceeds);
    let Some(prob) = prob.as_ref() else {
        set_error("null problem handle".into());
        return BohrStatus::NullPointer;
    };
    match verify::sharpness_probe(&prob.0, r, a_step) {
        Ok(rep) => {
            *a_witness = rep.a_witness;
            *lhs = rep.lhs_at_witness;
            *exceeds = rep.exceeds as c_int;
            BohrStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// The known-constants regression table as CSV. Free with
/// `bohr_string_free`.
#[no_mangle]
pub unsafe extern "C" fn bohr_table_csv(out: *mut *mut c_char) -> BohrStatus {
    let out = out_ptr!(out);
    match verify::radius_table() {
        Ok(rows) => {
            let csv = table_to_csv(&rows);
            match CString::new(csv) {
                Ok(c) => {
                    *out = c.into_raw();
                    BohrStatus::Ok
                }
                Err(_) => {
                    set_error("table contained an interior NUL".into());
                    BohrStatus::InvalidInput
                }
            }
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn bohr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
