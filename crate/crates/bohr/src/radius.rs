//! Root solving for the characteristic equation
//! `1 = (2/p) ((1+x^m)/(1-x^m)) (1+k) Phi_N(x)`
//! and the registry of closed-form radii used for regression.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::problem::RadiusProblem;
use crate::weights::check_r;

const SCAN_STEP: f64 = 1e-3;
const SCAN_END: f64 = 1.0 - 1e-6;
const BRACKET_WIDTH: f64 = 1e-12;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RadiusResult {
    pub radius: f64,
    /// `|F(radius) - 1|`.
    pub residual: f64,
    pub bracket: (f64, f64),
    pub evaluations: u64,
}

/// `F(x) = (2/p) ((1+x^m)/(1-x^m)) (1+k) Phi_N(x)`; the sharp radius is
/// the minimal positive solution of `F(x) = 1`. Under the limit flag the
/// `x^m` ratio collapses to 1.
pub fn characteristic(prob: &RadiusProblem, x: f64) -> Result<f64> {
    check_r(x)?;
    let xm = prob.rm(x);
    let ratio = (1.0 + xm) / (1.0 - xm);
    Ok((2.0 / prob.p) * ratio * (1.0 + prob.k) * prob.weights.tail(prob.n_start, x)?)
}

/// Scan from 0 in steps of 1e-3 for the first sign change of `F(x) - 1`,
/// then bisect the bracket down to width 1e-12. Taking the first crossing
/// guarantees minimality even if the weights were ever extended to a
/// non-monotone family.
pub fn solve_radius(prob: &RadiusProblem) -> Result<RadiusResult> {
    let mut evals = 0u64;
    let mut f = |x: f64| -> Result<f64> {
        evals += 1;
        Ok(characteristic(prob, x)? - 1.0)
    };

    let mut lo = 0.0;
    let mut flo = -1.0; // F(0) = 0
    let mut hi = None;
    let mut x = SCAN_STEP;
    while x < SCAN_END {
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(RadiusResult { radius: x, residual: 0.0, bracket: (x, x), evaluations: evals });
        }
        if flo < 0.0 && fx > 0.0 {
            hi = Some(x);
            break;
        }
        lo = x;
        flo = fx;
        x += SCAN_STEP;
    }
    let mut hi = hi.ok_or(Error::NoRoot)?;
    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if f(mid)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let radius = 0.5 * (lo + hi);
    let residual = f(radius)?.abs();
    Ok(RadiusResult { radius, residual, bracket: (lo, hi), evaluations: evals })
}

/// Closed-form radii stated in the source results, for regression against
/// the solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedForm {
    /// `R_p = p / (sqrt(4p+1) + p + 1)`, geometric weights, m = 1, k = 0.
    Analytic { p: f64 },
    /// `R^k_p = p / (2(1+k) + p)`, geometric weights, m -> infinity.
    HarmonicLimit { p: f64, k: f64 },
    /// `(K+1)/(5K+1)`, the p = 1 quasiregular form.
    QuasiregularP1 { big_k: f64 },
    /// `(K+1)/(3K+1)`, the p = 2 quasiregular form.
    QuasiregularP2 { big_k: f64 },
    /// `R(p) = p / (2+p)`, geometric weights, k = 0, m -> infinity.
    AnalyticLimit { p: f64 },
    /// `sqrt(2) - 1`, even-only weights, m = p = 1.
    EvenOnly,
    /// `(p/(2+p))^{1/k}`, lacunary stride-k weights, m -> infinity.
    Lacunary { p: f64, stride: u32 },
    /// Minimal positive root of `2(1+r^m) r^N - p(1-r)(1-r^m) = 0`
    /// (geometric weights, general m, N).
    GeometricPolynomial { m: u32, n_start: u32, p: f64 },
}

/// The quasiregular substitution `k = (K-1)/(K+1)`.
pub fn quasiregular_k(big_k: f64) -> Result<f64> {
    if big_k < 1.0 {
        return Err(Error::Domain(format!("K = {big_k} must be >= 1")));
    }
    Ok((big_k - 1.0) / (big_k + 1.0))
}

fn check_p(p: f64) -> Result<()> {
    if !(p > 0.0 && p <= 2.0) {
        return Err(Error::Domain(format!("p = {p} outside (0, 2]")));
    }
    Ok(())
}

pub fn closed_form_radius(form: &ClosedForm) -> Result<f64> {
    match *form {
        ClosedForm::Analytic { p } => {
            check_p(p)?;
            Ok(p / ((4.0 * p + 1.0).sqrt() + p + 1.0))
        }
        ClosedForm::HarmonicLimit { p, k } => {
            check_p(p)?;
            if !(0.0..=1.0).contains(&k) {
                return Err(Error::Domain(format!("k = {k} outside [0, 1]")));
            }
            Ok(p / (2.0 * (1.0 + k) + p))
        }
        ClosedForm::QuasiregularP1 { big_k } => {
            quasiregular_k(big_k)?;
            Ok((big_k + 1.0) / (5.0 * big_k + 1.0))
        }
        ClosedForm::QuasiregularP2 { big_k } => {
            quasiregular_k(big_k)?;
            Ok((big_k + 1.0) / (3.0 * big_k + 1.0))
        }
        ClosedForm::AnalyticLimit { p } => {
            check_p(p)?;
            Ok(p / (2.0 + p))
        }
        ClosedForm::EvenOnly => Ok(std::f64::consts::SQRT_2 - 1.0),
        ClosedForm::Lacunary { p, stride } => {
            check_p(p)?;
            if stride < 1 {
                return Err(Error::Domain("lacunary stride must be >= 1".into()));
            }
            Ok((p / (2.0 + p)).powf(1.0 / stride as f64))
        }
        ClosedForm::GeometricPolynomial { m, n_start, p } => {
            check_p(p)?;
            polynomial_root(m, n_start, p)
        }
    }
}

/// Minimal positive root of `2(1+r^m) r^N - p(1-r)(1-r^m) = 0` by the
/// same scan-then-bisect scheme as the solver.
fn polynomial_root(m: u32, n_start: u32, p: f64) -> Result<f64> {
    let g = |r: f64| {
        let rm = r.powi(m as i32);
        2.0 * (1.0 + rm) * r.powi(n_start as i32) - p * (1.0 - r) * (1.0 - rm)
    };
    let mut lo = 0.0;
    let mut x = SCAN_STEP;
    let mut hi = None;
    while x < 1.0 {
        if g(x) > 0.0 {
            hi = Some(x);
            break;
        }
        lo = x;
        x += SCAN_STEP;
    }
    let mut hi = hi.ok_or(Error::NoRoot)?;
    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightSequence;

    fn geo_prob(m: u32, p: f64, k: f64, n: u32) -> RadiusProblem {
        RadiusProblem::new(m, p, k, n, WeightSequence::geometric()).unwrap()
    }

    #[test]
    fn characteristic_values() {
        let pr = geo_prob(1, 1.0, 0.0, 1);
        assert_eq!(characteristic(&pr, 0.0).unwrap(), 0.0);
        // geometric m=1 N=1 k=0: F(x) = (2/p) x (1+x)/(1-x)^2
        let x: f64 = 0.4;
        let expect = 2.0 * x * (1.0 + x) / (1.0 - x).powi(2);
        assert!((characteristic(&pr, x).unwrap() - expect).abs() < 1e-14);
        assert!(characteristic(&pr, 1.0).is_err());
    }

    #[test]
    fn characteristic_strictly_increasing_on_grid() {
        for w in [
            WeightSequence::geometric(),
            WeightSequence::even_only(),
            WeightSequence::lacunary(3).unwrap(),
        ] {
            let pr = RadiusProblem::new(2, 1.5, 0.5, 1, w).unwrap();
            let mut prev = -1.0;
            for i in 1..999 {
                let v = characteristic(&pr, i as f64 * 1e-3).unwrap();
                assert!(v > prev);
                prev = v;
            }
        }
    }

    #[test]
    fn classical_bohr_radius() {
        let res = solve_radius(&geo_prob(1, 2.0, 0.0, 1)).unwrap();
        assert!((res.radius - 1.0 / 3.0).abs() < 1e-10);
        assert!(res.residual <= 1e-10);
        assert!(res.bracket.1 - res.bracket.0 <= 1e-12);
    }

    #[test]
    fn refined_p1_radius_is_sqrt5_minus_2() {
        let res = solve_radius(&geo_prob(1, 1.0, 0.0, 1)).unwrap();
        assert!((res.radius - (5.0f64.sqrt() - 2.0)).abs() < 1e-10);
    }

    #[test]
    fn even_weights_radius_is_sqrt2_minus_1() {
        let pr = RadiusProblem::new(1, 1.0, 0.0, 1, WeightSequence::even_only()).unwrap();
        let res = solve_radius(&pr).unwrap();
        assert!((res.radius - (std::f64::consts::SQRT_2 - 1.0)).abs() < 1e-10);
    }

    #[test]
    fn root_is_a_strict_crossing() {
        let pr = geo_prob(2, 1.5, 0.5, 1);
        let r = solve_radius(&pr).unwrap().radius;
        assert!(characteristic(&pr, r - 1e-8).unwrap() < 1.0);
        assert!(characteristic(&pr, r + 1e-8).unwrap() > 1.0);
    }

    #[test]
    fn theorem1_theorem2_paths_coincide_at_n1_k0() {
        let a = solve_radius(&geo_prob(2, 1.5, 0.0, 1)).unwrap().radius;
        let b = solve_radius(&geo_prob(2, 1.5, 0.0, 1)).unwrap().radius;
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn limit_problem_closed_form() {
        let pr = RadiusProblem::new_limit(1.0, 0.5, 1, WeightSequence::geometric()).unwrap();
        let res = solve_radius(&pr).unwrap();
        assert!((res.radius - 1.0 / 4.0).abs() < 1e-12);
    }

    #[test]
    fn radius_monotonicity_grid() {
        let solve = |m: u32, p: f64, k: f64, n: u32| {
            solve_radius(&geo_prob(m, p, k, n)).unwrap().radius
        };
        for &p in &[0.5, 1.0, 1.5, 2.0] {
            for &m in &[1u32, 2, 3, 5] {
                // non-increasing in k
                let mut prev = f64::INFINITY;
                for i in 0..=4 {
                    let r = solve(m, p, 0.25 * i as f64, 1);
                    assert!(r <= prev + 1e-12);
                    prev = r;
                }
                // non-decreasing in N
                let mut prev = 0.0;
                for n in 1..=3 {
                    let r = solve(m, p, 0.0, n);
                    assert!(r >= prev - 1e-12);
                    prev = r;
                }
            }
            // non-decreasing in m
            let mut prev = 0.0;
            for &m in &[1u32, 2, 3, 5] {
                let r = solve(m, p, 0.0, 1);
                assert!(r >= prev - 1e-12);
                prev = r;
            }
        }
        // non-decreasing in p at fixed m, k, N
        let mut prev = 0.0;
        for &p in &[0.5, 1.0, 1.5, 2.0] {
            let r = solve(1, p, 0.0, 1);
            assert!(r >= prev - 1e-12);
            prev = r;
        }
    }

    #[test]
    fn closed_forms() {
        assert!((closed_form_radius(&ClosedForm::Analytic { p: 2.0 }).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        // K-form at K=3 equals R^k_p at p=1, k=0.5
        let a = closed_form_radius(&ClosedForm::QuasiregularP1 { big_k: 3.0 }).unwrap();
        let b = closed_form_radius(&ClosedForm::HarmonicLimit { p: 1.0, k: 0.5 }).unwrap();
        assert!((a - 0.25).abs() < 1e-15);
        assert!((a - b).abs() < 1e-15);
        let lac = closed_form_radius(&ClosedForm::Lacunary { p: 1.0, stride: 3 }).unwrap();
        assert!((lac - (1.0f64 / 3.0).powf(1.0 / 3.0)).abs() < 1e-15);
        assert!(closed_form_radius(&ClosedForm::Analytic { p: 3.0 }).is_err());
        assert!(quasiregular_k(0.5).is_err());
    }

    #[test]
    fn polynomial_form_matches_solver() {
        for &m in &[1u32, 2] {
            for &n in &[1u32, 2, 3] {
                for &p in &[1.0, 2.0] {
                    let poly = closed_form_radius(&ClosedForm::GeometricPolynomial {
                        m,
                        n_start: n,
                        p,
                    })
                    .unwrap();
                    let solved = solve_radius(&geo_prob(m, p, 0.0, n)).unwrap().radius;
                    assert!(
                        (poly - solved).abs() < 1e-9,
                        "m={m} N={n} p={p}: poly={poly} solver={solved}"
                    );
                }
            }
        }
    }
}
