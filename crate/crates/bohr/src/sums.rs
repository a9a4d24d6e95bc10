//! The weighted coefficient sums entering the refined Bohr inequalities:
//! `B_N(f, phi, r)`, `||f_0||^2_r`, the refinement term `A(f_0, phi, r)`,
//! and the left-hand sides of the two main inequalities.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::functions::{HarmonicPair, SeriesFunction};
use crate::problem::RadiusProblem;
use crate::weights::{check_r, WeightSequence};

/// A truncated sum together with a certified bound on the dropped tail.
#[derive(Debug, Clone, Copy)]
pub struct Bounded {
    pub value: f64,
    pub remainder: f64,
}

fn coeff_tail_scale(f: &SeriesFunction) -> f64 {
    // Schwarz-Pick: |a_n| <= 1 - |a_0|^2 for certified members.
    (1.0 - f.coeff(0).norm_sqr()).clamp(0.0, 1.0)
}

/// `B_N(f, phi, r) = sum_{n>=N} |a_n| phi_n(r)`, truncated at the stored
/// order T with remainder bound `(1 - |a_0|^2) r^{T+1} / (1 - r)`.
pub fn bohr_sum(f: &SeriesFunction, w: &WeightSequence, n_start: u32, r: f64) -> Result<Bounded> {
    check_r(r)?;
    if n_start < 1 {
        return Err(Error::Domain("N must be >= 1".into()));
    }
    let t = f.order();
    let mut value = 0.0;
    for n in (n_start as usize)..=t {
        let c = f.coeff(n).norm();
        if c != 0.0 {
            value += c * w.term(n as u32, r)?;
        }
    }
    let remainder = coeff_tail_scale(f) * r.powi(t as i32 + 1) / (1.0 - r);
    Ok(Bounded { value, remainder })
}

/// `||f_0||^2_r = sum_{n>=1} |a_n|^2 r^{2n}`.
pub fn norm_sq_r(f: &SeriesFunction, r: f64) -> Result<Bounded> {
    check_r(r)?;
    let t = f.order();
    let mut value = 0.0;
    for n in 1..=t {
        value += f.coeff(n).norm_sqr() * r.powi(2 * n as i32);
    }
    let remainder = r.powi(2 * (t as i32 + 1)) / (1.0 - r * r);
    Ok(Bounded { value, remainder })
}

/// The refinement term
/// `A(f_0, phi, r) = sum_{n>=1} |a_n|^2 ( phi_{2n}(r)/(1+|a_0|) + Phi_{2n+1}(r) )`.
pub fn refined_a(f: &SeriesFunction, w: &WeightSequence, r: f64) -> Result<Bounded> {
    check_r(r)?;
    let t = f.order();
    let a0 = f.a0_abs();
    let mut value = 0.0;
    for n in 1..=t {
        let c2 = f.coeff(n).norm_sqr();
        if c2 == 0.0 {
            continue;
        }
        let n32 = n as u32;
        value += c2 * (w.term(2 * n32, r)? / (1.0 + a0) + w.tail(2 * n32 + 1, r)?);
    }
    // For n > T: |a_n|^2 <= (1-a0^2)^2, phi_{2n} <= r^{2n},
    // Phi_{2n+1} <= r^{2n+1}/(1-r).
    let s = coeff_tail_scale(f).powi(2);
    let rt = r.powi(2 * (t as i32 + 1));
    let remainder = s * (rt / ((1.0 - r * r) * (1.0 + a0)) + rt * r / ((1.0 - r) * (1.0 - r * r)));
    Ok(Bounded { value, remainder })
}

/// The geometric-weight closed form of the refinement term,
/// `A(f_0, r) = (1/(1+|a_0|) + r/(1-r)) ||f_0||^2_r`.
pub fn refined_a_closed(f: &SeriesFunction, r: f64) -> Result<Bounded> {
    check_r(r)?;
    let norm = norm_sq_r(f, r)?;
    let factor = 1.0 / (1.0 + f.a0_abs()) + r / (1.0 - r);
    Ok(Bounded { value: factor * norm.value, remainder: factor * norm.remainder })
}

fn check_on_circle(z: Complex64, r: f64) -> Result<()> {
    if (z.norm() - r).abs() > 1e-12 {
        return Err(Error::Precondition(format!("|z| = {} but r = {r}", z.norm())));
    }
    Ok(())
}

fn pow_p_error(p: f64, tail: f64) -> f64 {
    // |x^p - y^p| on [0, 1]: <= |x-y|^p for p <= 1, <= p |x-y| for p > 1.
    if p <= 1.0 {
        tail.powf(p)
    } else {
        p * tail
    }
}

/// `|h(z^m)|^p` for the given problem; `h(0)` under the limit flag.
fn modulus_term(h: &SeriesFunction, prob: &RadiusProblem, z: Complex64, r: f64) -> Bounded {
    if prob.limit_m {
        return Bounded { value: h.a0_abs().powf(prob.p), remainder: 0.0 };
    }
    let zm = z.powi(prob.m as i32);
    if h.exact_form().is_some() {
        Bounded { value: h.eval(zm).norm().powf(prob.p), remainder: 0.0 }
    } else {
        let t = h.order();
        let tail = r.powi((prob.m * (t as u32 + 1)) as i32) / (1.0 - r.powi(prob.m as i32));
        Bounded {
            value: h.eval_truncated(zm).norm().powf(prob.p),
            remainder: pow_p_error(prob.p, tail),
        }
    }
}

/// Left-hand side of the harmonic-pair inequality:
/// `|h(z^m)|^p + B_1(h) + B_1(g) + A(h_0)`.
pub fn lhs_theorem1(pair: &HarmonicPair, prob: &RadiusProblem, z: Complex64, r: f64) -> Result<Bounded> {
    check_r(r)?;
    if prob.n_start != 1 {
        return Err(Error::Precondition("the harmonic-pair inequality requires N = 1".into()));
    }
    if !prob.limit_m {
        check_on_circle(z, r)?;
    }
    let head = modulus_term(&pair.h, prob, z, r);
    let bh = bohr_sum(&pair.h, &prob.weights, 1, r)?;
    let bg = bohr_sum(&pair.g, &prob.weights, 1, r)?;
    let a = refined_a(&pair.h, &prob.weights, r)?;
    Ok(Bounded {
        value: head.value + bh.value + bg.value + a.value,
        remainder: head.remainder + bh.remainder + bg.remainder + a.remainder,
    })
}

/// Left-hand side of the analytic inequality: `|f(z^m)|^p + B_N(f)`.
pub fn lhs_theorem2(f: &SeriesFunction, prob: &RadiusProblem, z: Complex64, r: f64) -> Result<Bounded> {
    check_r(r)?;
    if prob.k != 0.0 {
        return Err(Error::Precondition("the analytic inequality requires k = 0".into()));
    }
    if !prob.limit_m {
        check_on_circle(z, r)?;
    }
    let head = modulus_term(f, prob, z, r);
    let b = bohr_sum(f, &prob.weights, prob.n_start, r)?;
    Ok(Bounded { value: head.value + b.value, remainder: head.remainder + b.remainder })
}

/// Both sides of `B_1(f, phi, r) + A(f_0, phi, r) <= (1 - |a_0|^2) Phi_1(r)`.
pub fn theorem_b_gap(f: &SeriesFunction, w: &WeightSequence, r: f64) -> Result<(f64, f64)> {
    let lhs = bohr_sum(f, w, 1, r)?.value + refined_a(f, w, r)?.value;
    let rhs = (1.0 - f.coeff(0).norm_sqr()) * w.tail(1, r)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::DEFAULT_ORDER;
    use num_complex::Complex64 as C;

    fn geo() -> WeightSequence {
        WeightSequence::geometric()
    }

    #[test]
    fn bohr_sum_rotation() {
        // f(z) = -z: B_1 = r
        let f = SeriesFunction::mobius(0.0, 64).unwrap();
        let b = bohr_sum(&f, &geo(), 1, 0.4).unwrap();
        assert!((b.value - 0.4).abs() < 1e-15);
    }

    #[test]
    fn bohr_sum_mobius_geometric_oracle() {
        // sum (1-a^2) a^{n-1} r^n = (1-a^2) r / (1 - a r)
        let (a, r) = (0.6, 0.5);
        let f = SeriesFunction::mobius(a, DEFAULT_ORDER).unwrap();
        let b = bohr_sum(&f, &geo(), 1, r).unwrap();
        let expect = (1.0 - a * a) * r / (1.0 - a * r);
        assert!((b.value - expect).abs() <= b.remainder + 1e-14);
    }

    #[test]
    fn b0_identity_geometric() {
        // B_0 = |a_0| phi_0 + B_1 with phi_0(r) = 1 for geometric weights
        let f = SeriesFunction::mobius(0.3, 128).unwrap();
        let r = 0.4;
        let b1 = bohr_sum(&f, &geo(), 1, r).unwrap().value;
        let b0 = f.a0_abs() + b1;
        let brute: f64 = (0..=128)
            .map(|n| f.coeff(n).norm() * r.powi(n as i32))
            .sum();
        assert!((b0 - brute).abs() < 1e-12);
    }

    #[test]
    fn norm_sq_values() {
        let f = SeriesFunction::mobius(0.0, 64).unwrap();
        assert!((norm_sq_r(&f, 0.5).unwrap().value - 0.25).abs() < 1e-15);
        assert_eq!(norm_sq_r(&f, 0.0).unwrap().value, 0.0);
        let (a, r) = (0.7, 0.6);
        let f = SeriesFunction::mobius(a, DEFAULT_ORDER).unwrap();
        let expect = (1.0 - a * a).powi(2) * r * r / (1.0 - a * a * r * r);
        let got = norm_sq_r(&f, r).unwrap();
        assert!((got.value - expect).abs() <= got.remainder + 1e-14);
    }

    #[test]
    fn refined_a_single_term_oracle() {
        // f(z) = -z, geometric: A = r^2 + r^3/(1-r)
        let f = SeriesFunction::mobius(0.0, 64).unwrap();
        let r = 0.3;
        let a = refined_a(&f, &geo(), r).unwrap();
        assert!((a.value - (r * r + r.powi(3) / (1.0 - r))).abs() < 1e-14);
        assert_eq!(refined_a(&f, &geo(), 0.0).unwrap().value, 0.0);
    }

    #[test]
    fn refined_a_closed_agrees() {
        let f = SeriesFunction::mobius(0.5, DEFAULT_ORDER).unwrap();
        let r = 0.25;
        let open = refined_a(&f, &geo(), r).unwrap().value;
        let closed = refined_a_closed(&f, r).unwrap().value;
        assert!((open - closed).abs() < 1e-12);
        let c = SeriesFunction::constant(C::new(0.4, 0.1)).unwrap();
        assert_eq!(refined_a_closed(&c, 0.5).unwrap().value, 0.0);
    }

    #[test]
    fn lhs_theorem1_rotation_oracle() {
        // k=0, a=0, p=1, m=1, geometric, z=-r: r + r + r^2 + r^3/(1-r)
        let pair = HarmonicPair::extremal(0.0, 0.0, C::new(1.0, 0.0), 64).unwrap();
        let prob = RadiusProblem::new(1, 1.0, 0.0, 1, geo()).unwrap();
        let r = 0.2;
        let got = lhs_theorem1(&pair, &prob, C::new(-r, 0.0), r).unwrap();
        let expect = r + r + r * r + r.powi(3) / (1.0 - r);
        assert!((got.value - expect).abs() < 1e-14);
    }

    #[test]
    fn lhs_theorem1_at_zero() {
        let pair = HarmonicPair::extremal(0.6, 0.5, C::new(1.0, 0.0), 64).unwrap();
        let prob = RadiusProblem::new(2, 1.5, 0.5, 1, geo()).unwrap();
        let got = lhs_theorem1(&pair, &prob, C::new(0.0, 0.0), 0.0).unwrap();
        assert!((got.value - 0.6f64.powf(1.5)).abs() < 1e-15);
    }

    #[test]
    fn lhs_theorem1_rejects_off_circle_z() {
        let pair = HarmonicPair::extremal(0.5, 0.0, C::new(1.0, 0.0), 64).unwrap();
        let prob = RadiusProblem::new(1, 1.0, 0.0, 1, geo()).unwrap();
        assert!(lhs_theorem1(&pair, &prob, C::new(0.3, 0.0), 0.2).is_err());
    }

    #[test]
    fn lhs_theorem2_classical_oracle() {
        let (a, r) = (0.5, 0.2);
        let f = SeriesFunction::mobius(a, DEFAULT_ORDER).unwrap();
        let prob = RadiusProblem::new(1, 1.0, 0.0, 1, geo()).unwrap();
        let got = lhs_theorem2(&f, &prob, C::new(-r, 0.0), r).unwrap();
        let expect = (r + a) / (1.0 + a * r) + (1.0 - a * a) * r / (1.0 - a * r);
        assert!((got.value - expect).abs() < 1e-13);
    }

    #[test]
    fn lhs_theorem2_constant() {
        let f = SeriesFunction::constant(C::new(0.4, 0.0)).unwrap();
        let prob = RadiusProblem::new(1, 1.5, 0.0, 3, geo()).unwrap();
        let r = 0.3;
        let got = lhs_theorem2(&f, &prob, C::new(r, 0.0), r).unwrap();
        assert!((got.value - 0.4f64.powf(1.5)).abs() < 1e-15);
    }

    #[test]
    fn lhs_theorem2_even_weights_remark_scenario() {
        let (a, r) = (0.4, 0.3);
        let f = SeriesFunction::mobius(a, DEFAULT_ORDER).unwrap();
        let even = WeightSequence::even_only();
        let prob = RadiusProblem::new(1, 1.0, 0.0, 1, even).unwrap();
        let got = lhs_theorem2(&f, &prob, C::new(-r, 0.0), r).unwrap();
        let brute: f64 = (1..=256)
            .map(|n| f.coeff(2 * n).norm() * r.powi(2 * n as i32))
            .sum();
        let expect = (r + a) / (1.0 + a * r) + brute;
        assert!((got.value - expect).abs() < 1e-13);
    }

    #[test]
    fn theorem_b_holds_for_samples() {
        let w = geo();
        let c = SeriesFunction::constant(C::new(0.9, 0.0)).unwrap();
        let (l, rr) = theorem_b_gap(&c, &w, 0.5).unwrap();
        assert!(l <= rr + 1e-12);
        let f = SeriesFunction::mobius(0.6, DEFAULT_ORDER).unwrap();
        let (l, rr) = theorem_b_gap(&f, &w, 0.3).unwrap();
        assert!(l <= rr + 1e-12);
    }
}
