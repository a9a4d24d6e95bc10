//! The scalar functions driving the sharpness analysis: `Psi_p` with its
//! first two derivatives, and `Q_p(a, r)` with its a -> 1 limit. All of
//! them are defined for N = 1 problems only.

use crate::error::{Error, Result};
use crate::problem::RadiusProblem;
use crate::weights::check_r;

#[derive(Debug, Clone, Copy)]
pub struct PsiValues {
    pub value: f64,
    pub first: f64,
    pub second: f64,
}

fn require_n1(prob: &RadiusProblem) -> Result<()> {
    if prob.n_start != 1 {
        return Err(Error::Precondition("Psi and Q are defined for N = 1 problems only".into()));
    }
    Ok(())
}

/// `Psi_p(a) = 1 - (1-a^2)(1+k) Phi_1(r) - ((r^m+a)/(1+r^m a))^p`
/// together with its two closed-form derivatives in `a`.
pub fn psi(a: f64, prob: &RadiusProblem, r: f64) -> Result<PsiValues> {
    require_n1(prob)?;
    check_r(r)?;
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::Domain(format!("a = {a} outside [0, 1]")));
    }
    let p = prob.p;
    let k = prob.k;
    let rm = prob.rm(r);
    let phi1 = prob.weights.tail(1, r)?;
    let env = (rm + a) / (1.0 + rm * a);
    let value = 1.0 - (1.0 - a * a) * (1.0 + k) * phi1 - env.powf(p);
    let first = 2.0 * a * (1.0 + k) * phi1
        - p * (1.0 - rm * rm) * (rm + a).powf(p - 1.0) / (1.0 + rm * a).powf(p + 1.0);
    let second = 2.0 * (1.0 + k) * phi1
        - p * (1.0 - rm * rm) * (rm + a).powf(p - 2.0) / (1.0 + rm * a).powf(p + 2.0)
            * (p - 1.0 - 2.0 * a * rm - (p + 1.0) * rm * rm);
    Ok(PsiValues { value, first, second })
}

/// `Q_p(a, r) = (1+a)(1+k) sum a^{n-1} phi_n(r)
///             - (1 - ((r^m+a)/(1+r^m a))^p) / (1-a)`.
pub fn q_function(a: f64, prob: &RadiusProblem, r: f64) -> Result<f64> {
    require_n1(prob)?;
    check_r(r)?;
    if !(0.0..1.0).contains(&a) {
        return Err(Error::Domain(format!("a = {a} outside [0, 1); use q_limit at a = 1")));
    }
    let series = prob.weights.geometric_weighted_sum(a, r)?;
    let env = prob.envelope(a, r);
    Ok((1.0 + a) * (1.0 + prob.k) * series - (1.0 - env.powf(prob.p)) / (1.0 - a))
}

/// `lim_{a->1-} Q_p(a, r) = 2(1+k) Phi_1(r) - p (1-r^m)/(1+r^m)`.
///
/// Zero exactly at the sharp radius; positive beyond it.
pub fn q_limit(prob: &RadiusProblem, r: f64) -> Result<f64> {
    require_n1(prob)?;
    q_limit_tail(prob, prob.n_start, r)
}

/// The same limit with `Phi_1` replaced by `Phi_N`; this is the margin
/// of the general characteristic equation and backs the sharpness probe
/// for analytic (k = 0, N >= 1) problems.
pub(crate) fn q_limit_tail(prob: &RadiusProblem, n_start: u32, r: f64) -> Result<f64> {
    check_r(r)?;
    let rm = prob.rm(r);
    Ok(2.0 * (1.0 + prob.k) * prob.weights.tail(n_start, r)? - prob.p * (1.0 - rm) / (1.0 + rm))
}
