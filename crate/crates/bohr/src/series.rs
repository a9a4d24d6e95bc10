//! Truncated complex power series arithmetic.
//!
//! A series is a coefficient vector `c[0..=t]` representing
//! `sum c[n] z^n + O(z^{t+1})`. Multiplication truncates at the common
//! order; division requires a nonzero constant term in the denominator
//! and proceeds by recursive convolution.

use num_complex::Complex64;

pub type C64 = Complex64;

/// c = a * b, truncated to `t` (inclusive order).
pub fn mul(a: &[C64], b: &[C64], t: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); t + 1];
    for (i, &ai) in a.iter().enumerate().take(t + 1) {
        if ai.norm_sqr() == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(t + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// q = num / den with den[0] != 0, truncated to `t`.
///
/// q[n] = (num[n] - sum_{j=1}^{n} den[j] q[n-j]) / den[0].
pub fn div(num: &[C64], den: &[C64], t: usize) -> Vec<C64> {
    assert!(
        den.first().map(|d| d.norm_sqr() > 0.0).unwrap_or(false),
        "series division needs a nonzero constant term"
    );
    let d0 = den[0];
    let mut out = vec![C64::new(0.0, 0.0); t + 1];
    for n in 0..=t {
        let mut acc = num.get(n).copied().unwrap_or_else(|| C64::new(0.0, 0.0));
        for j in 1..=n.min(den.len() - 1) {
            acc -= den[j] * out[n - j];
        }
        out[n] = acc / d0;
    }
    out
}

/// Horner evaluation of the truncated series at `z`.
pub fn eval(coeffs: &[C64], z: C64) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Multiply by `z` (shift coefficients up by one), truncated to `t`.
pub fn shift(a: &[C64], t: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); t + 1];
    for (i, &ai) in a.iter().enumerate() {
        if i + 1 > t {
            break;
        }
        out[i + 1] = ai;
    }
    out
}
