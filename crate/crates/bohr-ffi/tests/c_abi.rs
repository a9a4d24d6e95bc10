//! Drives the exported C ABI exactly as a foreign caller would:
//! C strings in, status codes and out-pointers back, explicit frees.

use std::ffi::{c_int, CStr, CString};
use std::ptr;

use bohr_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn weights_roundtrip_through_the_abi() {
    unsafe {
        let mut w: *mut BohrWeights = ptr::null_mut();
        let st = bohr_weights_parse(cstr("even").as_ptr(), &mut w);
        assert_eq!(st, BohrStatus::Ok);

        let mut v = 0.0f64;
        assert_eq!(bohr_weights_term(w, 3, 0.5, &mut v), BohrStatus::Ok);
        assert_eq!(v, 0.0);
        assert_eq!(bohr_weights_term(w, 4, 0.5, &mut v), BohrStatus::Ok);
        assert_eq!(v, 0.0625);

        let r: f64 = 0.37;
        assert_eq!(bohr_weights_tail(w, 1, r, &mut v), BohrStatus::Ok);
        assert!((v - r * r / (1.0 - r * r)).abs() < 1e-15);

        // domain error surfaces as a code plus a message
        assert_eq!(bohr_weights_tail(w, 1, 1.5, &mut v), BohrStatus::DomainError);
        let msg = CStr::from_ptr(bohr_last_error()).to_str().unwrap();
        assert!(msg.contains("outside [0, 1)"), "message: {msg}");

        bohr_weights_free(w);
    }
}

#[test]
fn parse_errors_and_null_handling() {
    unsafe {
        let mut w: *mut BohrWeights = ptr::null_mut();
        assert_eq!(bohr_weights_parse(cstr("nope").as_ptr(), &mut w), BohrStatus::ParseError);
        assert_eq!(bohr_weights_parse(ptr::null(), &mut w), BohrStatus::NullPointer);

        let mut f: *mut BohrFunction = ptr::null_mut();
        assert_eq!(
            bohr_function_parse(cstr("mobius:a=1.5").as_ptr(), &mut f),
            BohrStatus::DomainError
        );
        assert_eq!(
            bohr_function_parse(cstr("extremal:a=0.5,k=1").as_ptr(), &mut f),
            BohrStatus::InvalidInput
        );

        // freeing NULL is a no-op
        bohr_weights_free(ptr::null_mut());
        bohr_function_free(ptr::null_mut());
        bohr_problem_free(ptr::null_mut());
    }
}

#[test]
fn solve_classical_radius_via_abi() {
    unsafe {
        let mut w: *mut BohrWeights = ptr::null_mut();
        assert_eq!(bohr_weights_parse(cstr("geometric").as_ptr(), &mut w), BohrStatus::Ok);
        let mut prob: *mut BohrProblem = ptr::null_mut();
        assert_eq!(bohr_problem_new(1, 2.0, 0.0, 1, w, 0, &mut prob), BohrStatus::Ok);

        let mut radius = 0.0;
        let mut residual = 0.0;
        assert_eq!(bohr_solve_radius(prob, &mut radius, &mut residual), BohrStatus::Ok);
        assert!((radius - 1.0 / 3.0).abs() < 1e-10);
        assert!(residual < 1e-10);

        let mut fx = 0.0;
        assert_eq!(bohr_characteristic(prob, radius, &mut fx), BohrStatus::Ok);
        assert!((fx - 1.0).abs() < 1e-10);

        bohr_problem_free(prob);
        bohr_weights_free(w);
    }
}

#[test]
fn limit_problem_and_invalid_parameters() {
    unsafe {
        let mut w: *mut BohrWeights = ptr::null_mut();
        assert_eq!(bohr_weights_parse(cstr("lacunary:3").as_ptr(), &mut w), BohrStatus::Ok);
        let mut prob: *mut BohrProblem = ptr::null_mut();
        assert_eq!(bohr_problem_new(1, 1.0, 0.0, 1, w, 1, &mut prob), BohrStatus::Ok);
        let mut radius = 0.0;
        assert_eq!(bohr_solve_radius(prob, &mut radius, ptr::null_mut()), BohrStatus::Ok);
        assert!((radius - (1.0f64 / 3.0).powf(1.0 / 3.0)).abs() < 1e-10);
        bohr_problem_free(prob);

        assert_eq!(bohr_problem_new(1, 3.0, 0.0, 1, w, 0, &mut prob), BohrStatus::InvalidInput);
        bohr_weights_free(w);
    }
}

#[test]
fn verify_and_probe_via_abi() {
    unsafe {
        let mut w: *mut BohrWeights = ptr::null_mut();
        assert_eq!(bohr_weights_parse(cstr("geometric").as_ptr(), &mut w), BohrStatus::Ok);
        let mut prob: *mut BohrProblem = ptr::null_mut();
        assert_eq!(bohr_problem_new(1, 2.0, 0.0, 1, w, 0, &mut prob), BohrStatus::Ok);

        let mut radius = 0.0;
        let mut max_lhs = 0.0;
        let mut passed: c_int = 0;
        let st = bohr_verify(
            prob,
            cstr("mobius:a=0.9").as_ptr(),
            4,
            16,
            &mut radius,
            &mut max_lhs,
            &mut passed,
        );
        assert_eq!(st, BohrStatus::Ok);
        assert_eq!(passed, 1);
        assert!(max_lhs <= 1.0 + 1e-10);

        let mut a_witness = 0.0;
        let mut lhs = 0.0;
        let mut exceeds: c_int = 0;
        let st = bohr_probe(prob, 0.34, 1e-4, &mut a_witness, &mut lhs, &mut exceeds);
        assert_eq!(st, BohrStatus::Ok);
        assert_eq!(exceeds, 1);
        assert!(lhs > 1.0);

        // below the radius the probe reports a precondition violation
        let st = bohr_probe(prob, 0.2, 1e-4, &mut a_witness, &mut lhs, &mut exceeds);
        assert_eq!(st, BohrStatus::PreconditionViolated);

        bohr_problem_free(prob);
        bohr_weights_free(w);
    }
}

#[test]
fn function_eval_and_table() {
    unsafe {
        let mut f: *mut BohrFunction = ptr::null_mut();
        assert_eq!(
            bohr_function_parse(cstr("blaschke:zeros=0.5;-0.5").as_ptr(), &mut f),
            BohrStatus::Ok
        );
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(bohr_function_eval(f, 0.0, 0.0, &mut re, &mut im), BohrStatus::Ok);
        assert!((re + 0.25).abs() < 1e-14);
        assert!(im.abs() < 1e-14);
        bohr_function_free(f);

        let mut csv: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(bohr_table_csv(&mut csv), BohrStatus::Ok);
        let text = CStr::from_ptr(csv).to_str().unwrap().to_owned();
        assert!(text.starts_with("name,params,closed_form,solver_value,abs_diff"));
        bohr_string_free(csv);
    }
}
