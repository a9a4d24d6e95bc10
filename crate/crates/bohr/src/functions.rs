//! Coefficient models of analytic self-maps of the unit disk and
//! harmonic pairs `(h, g)` with `|g'| <= k |h'|` by construction.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series;

pub type C64 = Complex64;

/// Default truncation order. Geometric tails `r^{T+1}/(1-r)` are below
/// 1e-30 for r <= 0.85, far under every test tolerance.
pub const DEFAULT_ORDER: usize = 512;

/// Closed-form evaluators carried alongside the coefficient prefix.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactForm {
    Constant(C64),
    /// `(a - z) / (1 - a z)` with real `a` in [0, 1).
    Mobius { a: f64 },
    /// Finite Blaschke product with factors `(alpha - z) / (1 - conj(alpha) z)`.
    Blaschke { zeros: Vec<C64> },
    /// Backward Schur recursion over the parameter list.
    Schur { gammas: Vec<C64> },
}

impl ExactForm {
    pub fn eval(&self, z: C64) -> C64 {
        match self {
            ExactForm::Constant(c) => *c,
            ExactForm::Mobius { a } => {
                let a = C64::new(*a, 0.0);
                (a - z) / (C64::new(1.0, 0.0) - a * z)
            }
            ExactForm::Blaschke { zeros } => zeros
                .iter()
                .map(|&al| (al - z) / (C64::new(1.0, 0.0) - al.conj() * z))
                .product(),
            ExactForm::Schur { gammas } => {
                let one = C64::new(1.0, 0.0);
                let mut w = C64::new(0.0, 0.0);
                for &g in gammas.iter().rev() {
                    w = (g + z * w) / (one + g.conj() * z * w);
                }
                w
            }
        }
    }
}

/// A member of the unit ball of H-infinity, held as a Taylor prefix
/// `a_0..a_T` plus an optional exact pointwise evaluator. For every
/// constructor here the sup-norm bound `||f|| <= 1` holds by
/// construction, so `|a_n| <= 1` and the evaluation tail at `|z| = r`
/// is at most `r^{T+1} / (1 - r)`.
#[derive(Debug, Clone)]
pub struct SeriesFunction {
    coeffs: Vec<C64>,
    exact: Option<ExactForm>,
}

impl SeriesFunction {
    /// `h(z) = (a - z) / (1 - a z) = a - (1 - a^2) sum a^{n-1} z^n`.
    pub fn mobius(a: f64, order: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&a) {
            return Err(Error::Domain(format!("mobius parameter a = {a} outside [0, 1)")));
        }
        if order < 1 {
            return Err(Error::Domain("order must be >= 1".into()));
        }
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(C64::new(a, 0.0));
        let scale = 1.0 - a * a;
        let mut pow = 1.0;
        for _ in 1..=order {
            coeffs.push(C64::new(-scale * pow, 0.0));
            pow *= a;
        }
        Ok(SeriesFunction { coeffs, exact: Some(ExactForm::Mobius { a }) })
    }

    /// Finite Blaschke product over `zeros`, each with modulus < 1.
    pub fn blaschke(zeros: &[C64], order: usize) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::Domain("blaschke needs at least one zero".into()));
        }
        for z in zeros {
            if z.norm() >= 1.0 {
                return Err(Error::Domain(format!("blaschke zero {z} outside the open disk")));
            }
        }
        let one = C64::new(1.0, 0.0);
        let mut coeffs = vec![one];
        for &al in zeros {
            // factor (al - z) / (1 - conj(al) z)
            let num = [al, -one];
            let den = [one, -al.conj()];
            let q = series::div(&num, &den, order);
            coeffs = series::mul(&coeffs, &q, order);
        }
        Ok(SeriesFunction { coeffs, exact: Some(ExactForm::Blaschke { zeros: zeros.to_vec() }) })
    }

    /// Backward Schur recursion: `w_d = gamma_d`,
    /// `w_j = (gamma_j + z w_{j+1}) / (1 + conj(gamma_j) z w_{j+1})`.
    ///
    /// Each step composes disk automorphisms, so the result stays in
    /// the unit ball whenever every parameter has modulus < 1.
    pub fn schur(gammas: &[C64], order: usize) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::Domain("schur needs at least one parameter".into()));
        }
        for g in gammas {
            if g.norm() >= 1.0 {
                return Err(Error::Domain(format!("schur parameter {g} outside the open disk")));
            }
        }
        let one = C64::new(1.0, 0.0);
        let mut w = vec![*gammas.last().unwrap()];
        for &g in gammas.iter().rev().skip(1) {
            let zw = series::shift(&w, order);
            let mut num = zw.clone();
            num[0] += g;
            let mut den: Vec<C64> = zw.iter().map(|c| c * g.conj()).collect();
            den[0] += one;
            w = series::div(&num, &den, order);
        }
        Ok(SeriesFunction { coeffs: w, exact: Some(ExactForm::Schur { gammas: gammas.to_vec() }) })
    }

    pub fn constant(c: C64) -> Result<Self> {
        if c.norm() > 1.0 {
            return Err(Error::Domain("constant outside the closed unit disk".into()));
        }
        Ok(SeriesFunction { coeffs: vec![c], exact: Some(ExactForm::Constant(c)) })
    }

    /// Raw coefficient list without a membership certificate. Intended
    /// for negative tests; carries no exact evaluator.
    pub fn from_coeffs(coeffs: Vec<C64>) -> Self {
        SeriesFunction { coeffs, exact: None }
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> C64 {
        self.coeffs.get(n).copied().unwrap_or_else(|| C64::new(0.0, 0.0))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn exact_form(&self) -> Option<&ExactForm> {
        self.exact.as_ref()
    }

    /// `|a_0|`, the paper's `a`.
    pub fn a0_abs(&self) -> f64 {
        self.coeff(0).norm()
    }

    /// Pointwise value: the exact evaluator when present, otherwise the
    /// truncated series (error at most `r^{T+1}/(1-r)` for members of
    /// the unit ball).
    pub fn eval(&self, z: C64) -> C64 {
        match &self.exact {
            Some(form) => form.eval(z),
            None => series::eval(&self.coeffs, z),
        }
    }

    pub fn eval_truncated(&self, z: C64) -> C64 {
        series::eval(&self.coeffs, z)
    }

    /// Schwarz-Pick coefficient test: `|a_n| <= 1 - |a_0|^2 + 1e-12`
    /// for all stored `n >= 1`.
    pub fn schwarz_pick_check(&self) -> bool {
        let bound = 1.0 - self.coeff(0).norm_sqr() + 1e-12;
        self.coeffs.iter().skip(1).all(|c| c.norm() <= bound)
    }
}

/// A harmonic mapping `h + conj(g)` with the dilation certificate
/// `g' = lambda k h'` built in: `b_n = lambda k a_n` for `n >= 1`, `b_0 = 0`.
#[derive(Debug, Clone)]
pub struct HarmonicPair {
    pub h: SeriesFunction,
    pub g: SeriesFunction,
    pub k: f64,
    pub lambda: C64,
}

impl HarmonicPair {
    /// The extremal family: `h = (a - z)/(1 - a z)`, `g = lambda k h_0`.
    pub fn extremal(a: f64, k: f64, lambda: C64, order: usize) -> Result<Self> {
        let h = SeriesFunction::mobius(a, order)?;
        Self::proportional(h, k, lambda)
    }

    /// Proportional pair over an arbitrary analytic part.
    pub fn proportional(h: SeriesFunction, k: f64, lambda: C64) -> Result<Self> {
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::Domain(format!("dilation bound k = {k} outside [0, 1]")));
        }
        if (lambda.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("lambda = {lambda} is not unimodular")));
        }
        let scale = lambda * k;
        let mut g_coeffs = vec![C64::new(0.0, 0.0); h.coeffs.len()];
        for (n, c) in h.coeffs.iter().enumerate().skip(1) {
            g_coeffs[n] = scale * c;
        }
        let g = SeriesFunction::from_coeffs(g_coeffs);
        Ok(HarmonicPair { h, g, k, lambda })
    }
}
