//! Inequality verification on r-z grids, sharpness probing via the
//! extremal family, the proportionality check behind the dilation lemma,
//! and the known-constants regression table.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functions::{HarmonicPair, SeriesFunction, DEFAULT_ORDER};
use crate::parse::{parse_function, FunctionSpec};
use crate::problem::RadiusProblem;
use crate::proof::{psi, q_limit_tail};
use crate::radius::{closed_form_radius, quasiregular_k, solve_radius, ClosedForm};
use crate::sums::{bohr_sum, lhs_theorem1, lhs_theorem2, refined_a, Bounded};
use crate::weights::WeightSequence;

pub const PASS_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub problem: RadiusProblem,
    pub radius: f64,
    pub function_id: String,
    pub r_grid: Vec<f64>,
    pub max_lhs: f64,
    pub argmax_r: f64,
    pub argmax_z: (f64, f64),
    /// `1 - max_lhs`.
    pub margin: f64,
    /// Schwarz-Pick envelope bound on the same grid; dominates every
    /// circle sample and is exact for the extremal family at z^m = -r^m.
    pub envelope_max: f64,
    pub truncation_worst: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SharpnessReport {
    pub r_probe: f64,
    pub a_witness: f64,
    pub lhs_at_witness: f64,
    pub q_limit_value: f64,
    pub exceeds: bool,
}

enum Evaluand {
    Analytic(SeriesFunction),
    Pair(HarmonicPair),
}

impl Evaluand {
    fn h(&self) -> &SeriesFunction {
        match self {
            Evaluand::Analytic(f) => f,
            Evaluand::Pair(p) => &p.h,
        }
    }

    fn lhs(&self, prob: &RadiusProblem, z: Complex64, r: f64) -> Result<Bounded> {
        match self {
            Evaluand::Analytic(f) => lhs_theorem2(f, prob, z, r),
            Evaluand::Pair(p) => lhs_theorem1(p, prob, z, r),
        }
    }

    /// The sum part of the LHS (everything except `|h(z^m)|^p`).
    fn sum_part(&self, prob: &RadiusProblem, r: f64) -> Result<Bounded> {
        match self {
            Evaluand::Analytic(f) => bohr_sum(f, &prob.weights, prob.n_start, r),
            Evaluand::Pair(p) => {
                let bh = bohr_sum(&p.h, &prob.weights, 1, r)?;
                let bg = bohr_sum(&p.g, &prob.weights, 1, r)?;
                let a = refined_a(&p.h, &prob.weights, r)?;
                Ok(Bounded {
                    value: bh.value + bg.value + a.value,
                    remainder: bh.remainder + bg.remainder + a.remainder,
                })
            }
        }
    }
}

fn evaluand_for(prob: &RadiusProblem, spec: FunctionSpec) -> Result<Evaluand> {
    let one = Complex64::new(1.0, 0.0);
    match spec {
        FunctionSpec::Extremal { a, k } => {
            Ok(Evaluand::Pair(HarmonicPair::extremal(a, k, one, DEFAULT_ORDER)?))
        }
        FunctionSpec::Analytic(f) => {
            if prob.k > 0.0 {
                // the only certified dilation construction: g' = k h'
                Ok(Evaluand::Pair(HarmonicPair::proportional(f, prob.k, one)?))
            } else {
                Ok(Evaluand::Analytic(f))
            }
        }
    }
}

/// Solve the sharp radius for `prob` and check the corresponding
/// inequality for `f_spec` on an r-z grid with `r <= radius`.
pub fn verify_inequality(
    prob: &RadiusProblem,
    f_spec: &str,
    r_steps: usize,
    z_steps: usize,
) -> Result<VerificationReport> {
    if r_steps < 2 {
        return Err(Error::Precondition("r_steps must be >= 2".into()));
    }
    if z_steps < 8 {
        return Err(Error::Precondition("z_steps must be >= 8".into()));
    }
    let ev = evaluand_for(prob, parse_function(f_spec)?)?;
    verify_evaluand(prob, f_spec, &ev, r_steps, z_steps)
}

fn verify_evaluand(
    prob: &RadiusProblem,
    id: &str,
    ev: &Evaluand,
    r_steps: usize,
    z_steps: usize,
) -> Result<VerificationReport> {
    let radius = solve_radius(prob)?.radius;
    let a0 = ev.h().a0_abs();
    let mut max_lhs = f64::NEG_INFINITY;
    let mut envelope_max = f64::NEG_INFINITY;
    let mut argmax_r = 0.0;
    let mut argmax_z = Complex64::new(0.0, 0.0);
    let mut truncation_worst: f64 = 0.0;
    let mut r_grid = Vec::with_capacity(r_steps);

    for j in 1..=r_steps {
        let r = radius * j as f64 / r_steps as f64;
        r_grid.push(r);
        let sums = ev.sum_part(prob, r)?;
        truncation_worst = truncation_worst.max(sums.remainder);
        envelope_max = envelope_max.max(prob.envelope(a0, r).powf(prob.p) + sums.value);
        if prob.limit_m {
            // z enters only through |h(z^m)| -> |h(0)|
            let lhs = ev.lhs(prob, Complex64::new(r, 0.0), r)?;
            if lhs.value > max_lhs {
                max_lhs = lhs.value;
                argmax_r = r;
                argmax_z = Complex64::new(r, 0.0);
            }
        } else {
            for l in 0..z_steps {
                let th = std::f64::consts::TAU * l as f64 / z_steps as f64;
                let z = Complex64::new(r * th.cos(), r * th.sin());
                let lhs = ev.lhs(prob, z, r)?;
                truncation_worst = truncation_worst.max(lhs.remainder);
                if lhs.value > max_lhs {
                    max_lhs = lhs.value;
                    argmax_r = r;
                    argmax_z = z;
                }
            }
        }
    }

    let worst = max_lhs.max(envelope_max);
    Ok(VerificationReport {
        problem: prob.clone(),
        radius,
        function_id: id.to_string(),
        r_grid,
        max_lhs,
        argmax_r,
        argmax_z: (argmax_z.re, argmax_z.im),
        margin: 1.0 - max_lhs,
        envelope_max,
        truncation_worst,
        passed: worst <= 1.0 + PASS_TOL,
    })
}

/// Grid check for an already-built analytic function (corpus driver).
pub fn verify_function(
    prob: &RadiusProblem,
    id: &str,
    f: &SeriesFunction,
    r_steps: usize,
    z_steps: usize,
) -> Result<VerificationReport> {
    let ev = if prob.k > 0.0 {
        Evaluand::Pair(HarmonicPair::proportional(f.clone(), prob.k, Complex64::new(1.0, 0.0))?)
    } else {
        Evaluand::Analytic(f.clone())
    };
    verify_evaluand(prob, id, &ev, r_steps, z_steps)
}

/// Probe sharpness beyond the solved radius: sweep the extremal family
/// `a = 1 - a_step * j` at `z^m = -r^m` and report the best witness.
pub fn sharpness_probe(prob: &RadiusProblem, r_probe: f64, a_step: f64) -> Result<SharpnessReport> {
    if !(a_step > 0.0 && a_step <= 1e-2) {
        return Err(Error::Precondition(format!("a_step = {a_step} outside (0, 1e-2]")));
    }
    let radius = solve_radius(prob)?.radius;
    if r_probe <= radius {
        return Err(Error::Precondition(format!(
            "probe at r = {r_probe} is not beyond the radius {radius}"
        )));
    }
    if r_probe >= 1.0 {
        return Err(Error::Domain(format!("r = {r_probe} outside [0, 1)")));
    }

    // z with z^m = -r^m
    let th = std::f64::consts::PI / prob.m as f64;
    let z = Complex64::new(r_probe * th.cos(), r_probe * th.sin());
    let one = Complex64::new(1.0, 0.0);

    let mut best_lhs = f64::NEG_INFINITY;
    let mut best_a = 0.0;
    let mut j = 1;
    while (a_step * j as f64) < 1.0 && j <= 100 {
        let a = 1.0 - a_step * j as f64;
        let lhs = if prob.n_start == 1 {
            let pair = HarmonicPair::extremal(a, prob.k, one, DEFAULT_ORDER)?;
            lhs_theorem1(&pair, prob, z, r_probe)?.value
        } else {
            let f = SeriesFunction::mobius(a, DEFAULT_ORDER)?;
            lhs_theorem2(&f, prob, z, r_probe)?.value
        };
        if lhs > best_lhs {
            best_lhs = lhs;
            best_a = a;
        }
        j += 1;
    }

    Ok(SharpnessReport {
        r_probe,
        a_witness: best_a,
        lhs_at_witness: best_lhs,
        q_limit_value: q_limit_tail(prob, prob.n_start, r_probe)?,
        exceeds: best_lhs > 1.0,
    })
}

/// Check that `Psi_p` is non-increasing and nonnegative on [0, 1] for
/// `r` at or below the sharp radius.
pub fn monotonicity_check(prob: &RadiusProblem, r: f64, a_steps: usize) -> Result<bool> {
    if a_steps < 100 {
        return Err(Error::Precondition("a_steps must be >= 100".into()));
    }
    let radius = solve_radius(prob)?.radius;
    if r > radius + 1e-12 {
        return Err(Error::Precondition(format!("r = {r} is above the radius {radius}")));
    }
    let tol = 1e-12;
    let mut prev = f64::INFINITY;
    for j in 0..=a_steps {
        let a = j as f64 / a_steps as f64;
        let v = psi(a, prob, r)?;
        // At a = 1 with r at the solved root, Psi'(1) vanishes only up
        // to the root residual; allow 1e-9 there.
        let d_tol = if a == 1.0 { 1e-9 } else { tol };
        if v.value > prev + tol || v.first > d_tol || v.value < -tol {
            return Ok(false);
        }
        prev = v.value;
    }
    Ok(true)
}

/// Both sides of the squared-coefficient domination
/// `sum |b_n|^2 psi_n(r) <= k^2 sum |a_n|^2 psi_n(r)` for a
/// proportionally constructed pair; equality holds by construction.
pub fn lemma_c_check(
    h: &SeriesFunction,
    k: f64,
    lambda: Complex64,
    w: &WeightSequence,
    r: f64,
) -> Result<(f64, f64)> {
    let pair = HarmonicPair::proportional(h.clone(), k, lambda)?;
    let lhs = weighted_sq_sum(&pair.g, w, r)?;
    let rhs = k * k * weighted_sq_sum(&pair.h, w, r)?;
    Ok((lhs, rhs))
}

/// `sum_{n>=1} |c_n|^2 phi_n(r)` over the stored coefficients.
pub fn weighted_sq_sum(f: &SeriesFunction, w: &WeightSequence, r: f64) -> Result<f64> {
    let mut total = 0.0;
    for n in 1..=f.order() {
        let c2 = f.coeff(n).norm_sqr();
        if c2 != 0.0 {
            total += c2 * w.term(n as u32, r)?;
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub name: String,
    pub params: String,
    pub closed_form: f64,
    pub solver_value: f64,
    pub abs_diff: f64,
}

/// Every explicit radius formula, paired with the matching solver run.
pub fn radius_table() -> Result<Vec<TableRow>> {
    let geo = WeightSequence::geometric;
    let mut rows = Vec::new();
    let mut push = |name: &str, params: String, form: &ClosedForm, prob: &RadiusProblem| -> Result<()> {
        let closed = closed_form_radius(form)?;
        let solved = solve_radius(prob)?.radius;
        rows.push(TableRow {
            name: name.to_string(),
            params,
            closed_form: closed,
            solver_value: solved,
            abs_diff: (closed - solved).abs(),
        });
        Ok(())
    };

    for &p in &[0.5, 1.0, 1.5, 2.0] {
        push(
            "R_p",
            format!("p={p}"),
            &ClosedForm::Analytic { p },
            &RadiusProblem::new(1, p, 0.0, 1, geo())?,
        )?;
    }
    for &k in &[0.0, 0.5, 1.0] {
        for &p in &[1.0, 2.0] {
            push(
                "R^k_p",
                format!("p={p},k={k}"),
                &ClosedForm::HarmonicLimit { p, k },
                &RadiusProblem::new_limit(p, k, 1, geo())?,
            )?;
        }
    }
    for &big_k in &[1.0, 2.0, 3.0, 1e6] {
        let k = quasiregular_k(big_k)?;
        push(
            "K-form-p1",
            format!("K={big_k}"),
            &ClosedForm::QuasiregularP1 { big_k },
            &RadiusProblem::new_limit(1.0, k, 1, geo())?,
        )?;
        push(
            "K-form-p2",
            format!("K={big_k}"),
            &ClosedForm::QuasiregularP2 { big_k },
            &RadiusProblem::new_limit(2.0, k, 1, geo())?,
        )?;
    }
    for &p in &[1.0, 2.0] {
        push(
            "R(p)",
            format!("p={p}"),
            &ClosedForm::AnalyticLimit { p },
            &RadiusProblem::new_limit(p, 0.0, 1, geo())?,
        )?;
    }
    push(
        "even",
        "m=1,p=1".to_string(),
        &ClosedForm::EvenOnly,
        &RadiusProblem::new(1, 1.0, 0.0, 1, WeightSequence::even_only())?,
    )?;
    for &stride in &[2u32, 3] {
        for &p in &[1.0, 2.0] {
            push(
                "lacunary",
                format!("p={p},k={stride}"),
                &ClosedForm::Lacunary { p, stride },
                &RadiusProblem::new_limit(p, 0.0, 1, WeightSequence::lacunary(stride)?)?,
            )?;
        }
    }
    for &n in &[1u32, 2, 3] {
        for &p in &[1.0, 2.0] {
            push(
                "rho^N_{1,p}",
                format!("N={n},p={p}"),
                &ClosedForm::GeometricPolynomial { m: 1, n_start: n, p },
                &RadiusProblem::new(1, p, 0.0, n, geo())?,
            )?;
        }
    }
    Ok(rows)
}

pub fn table_to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("name,params,closed_form,solver_value,abs_diff\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{:.15},{:.15},{:.3e}\n",
            row.name, row.params, row.closed_form, row.solver_value, row.abs_diff
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geo() -> WeightSequence {
        WeightSequence::geometric()
    }

    #[test]
    fn verify_mobius_at_classical_radius() {
        let prob = RadiusProblem::new(1, 2.0, 0.0, 1, geo()).unwrap();
        let rep = verify_inequality(&prob, "mobius:a=0.9", 6, 16).unwrap();
        assert!((rep.radius - 1.0 / 3.0).abs() < 1e-10);
        assert!(rep.passed, "max_lhs = {}", rep.max_lhs);
        assert!(rep.envelope_max >= rep.max_lhs - 1e-12);
    }

    #[test]
    fn verify_extremal_harmonic_case() {
        // k=1: characteristic 3x^2 + 6x - 1 = 0, root (2*sqrt(3) - 3)/3
        let prob = RadiusProblem::new(1, 1.0, 1.0, 1, geo()).unwrap();
        let rep = verify_inequality(&prob, "extremal:a=0.99,k=1", 6, 16).unwrap();
        let expect = (2.0 * 3.0f64.sqrt() - 3.0) / 3.0;
        assert!((rep.radius - expect).abs() < 1e-10);
        assert!(rep.passed, "max_lhs = {}", rep.max_lhs);
    }

    #[test]
    fn verify_constant_function() {
        let prob = RadiusProblem::new(1, 1.0, 0.0, 1, geo()).unwrap();
        let rep = verify_inequality(&prob, "schur:gammas=0.0", 4, 8).unwrap();
        assert_eq!(rep.max_lhs, 0.0);
        assert!(rep.passed);
    }

    #[test]
    fn verify_rejects_small_grids() {
        let prob = RadiusProblem::new(1, 1.0, 0.0, 1, geo()).unwrap();
        assert!(verify_inequality(&prob, "mobius:a=0.5", 1, 16).is_err());
        assert!(verify_inequality(&prob, "mobius:a=0.5", 4, 4).is_err());
        assert!(verify_inequality(&prob, "junk", 4, 16).is_err());
    }

    #[test]
    fn probe_exceeds_beyond_radius() {
        let prob = RadiusProblem::new(1, 1.0, 0.0, 1, geo()).unwrap();
        let radius = solve_radius(&prob).unwrap().radius;
        let rep = sharpness_probe(&prob, radius + 0.01, 1e-4).unwrap();
        assert!(rep.exceeds, "best lhs = {}", rep.lhs_at_witness);
        assert!(rep.q_limit_value > 0.0);
        assert!(rep.a_witness > 0.98);
        // below the radius the probe is rejected
        assert!(sharpness_probe(&prob, radius - 0.01, 1e-4).is_err());
    }

    #[test]
    fn probe_p2_case() {
        let prob = RadiusProblem::new(1, 2.0, 0.0, 1, geo()).unwrap();
        let rep = sharpness_probe(&prob, 0.34, 1e-4).unwrap();
        assert!(rep.exceeds);
        assert!(rep.a_witness >= 0.99);
    }

    #[test]
    fn monotonicity_at_radius() {
        for &(p, k) in &[(1.0, 0.0), (0.5, 0.5), (2.0, 1.0)] {
            let prob = RadiusProblem::new(1, p, k, 1, geo()).unwrap();
            let radius = solve_radius(&prob).unwrap().radius;
            assert!(monotonicity_check(&prob, radius, 200).unwrap(), "p={p} k={k}");
            assert!(monotonicity_check(&prob, radius / 2.0, 200).unwrap());
            assert!(monotonicity_check(&prob, radius + 0.05, 200).is_err());
        }
    }

    #[test]
    fn lemma_c_equality_and_scaling() {
        let h = SeriesFunction::mobius(0.3, 128).unwrap();
        let w = geo();
        let one = Complex64::new(1.0, 0.0);
        let (l, r) = lemma_c_check(&h, 0.0, one, &w, 0.4).unwrap();
        assert_eq!(l, 0.0);
        assert_eq!(r, 0.0);
        let (l, r) = lemma_c_check(&h, 0.5, one, &w, 0.4).unwrap();
        assert!((l / r - 1.0).abs() < 1e-12);
        // scaled-down g: b_n = 0.9 k a_n gives lhs = 0.81 rhs
        let scaled: Vec<_> = h.coeffs().iter().map(|c| c * 0.9).collect();
        let g = SeriesFunction::from_coeffs(scaled);
        let lhs_scaled = 0.25 * weighted_sq_sum(&g, &w, 0.4).unwrap();
        assert!((lhs_scaled / r - 0.81).abs() < 1e-12);
    }

    #[test]
    fn table_is_consistent() {
        let rows = radius_table().unwrap();
        assert!(rows.len() >= 20);
        for row in &rows {
            assert!(row.abs_diff < 1e-9, "{} {}: diff {}", row.name, row.params, row.abs_diff);
        }
        let rp2 = rows.iter().find(|r| r.name == "R_p" && r.params == "p=2").unwrap();
        assert!((rp2.closed_form - 1.0 / 3.0).abs() < 1e-12);
        let k1 = rows.iter().find(|r| r.name == "K-form-p1" && r.params == "K=1").unwrap();
        assert!((k1.closed_form - 1.0 / 3.0).abs() < 1e-12);
        let even = rows.iter().find(|r| r.name == "even").unwrap();
        assert!((even.closed_form - 0.41421356237).abs() < 1e-10);
        let csv = table_to_csv(&rows);
        assert!(csv.starts_with("name,params,closed_form,solver_value,abs_diff"));
        assert_eq!(csv.lines().count(), rows.len() + 1);
    }
}
