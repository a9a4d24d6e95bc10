use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::WeightSequence;

/// Parameters naming one characteristic equation: `m` (power of `z` in
/// `|h(z^m)|`), exponent `p` in (0, 2], dilation bound `k` in [0, 1]
/// (0 for the analytic case), tail start `N` (1 for the harmonic
/// theorem), and the weight sequence. `limit_m` selects the m -> infinity
/// form, replacing `r^m` by 0 everywhere.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadiusProblem {
    pub m: u32,
    pub p: f64,
    pub k: f64,
    pub n_start: u32,
    pub weights: WeightSequence,
    pub limit_m: bool,
}

impl RadiusProblem {
    pub fn new(m: u32, p: f64, k: f64, n_start: u32, weights: WeightSequence) -> Result<Self> {
        Self::validate(m, p, k, n_start)?;
        Ok(RadiusProblem { m, p, k, n_start, weights, limit_m: false })
    }

    /// The m -> infinity limit problem (`m` is kept only for display).
    pub fn new_limit(p: f64, k: f64, n_start: u32, weights: WeightSequence) -> Result<Self> {
        Self::validate(1, p, k, n_start)?;
        Ok(RadiusProblem { m: 1, p, k, n_start, weights, limit_m: true })
    }

    fn validate(m: u32, p: f64, k: f64, n_start: u32) -> Result<()> {
        if m < 1 {
            return Err(Error::Invalid("m must be >= 1".into()));
        }
        if !(p > 0.0 && p <= 2.0) {
            return Err(Error::Invalid(format!("p = {p} outside (0, 2]")));
        }
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::Invalid(format!("k = {k} outside [0, 1]")));
        }
        if n_start < 1 {
            return Err(Error::Invalid("N must be >= 1".into()));
        }
        Ok(())
    }

    /// `r^m`, or 0 under the limit flag.
    pub fn rm(&self, r: f64) -> f64 {
        if self.limit_m {
            0.0
        } else {
            r.powi(self.m as i32)
        }
    }

    /// The Schwarz-Pick envelope `(r^m + a) / (1 + a r^m)`.
    pub fn envelope(&self, a: f64, r: f64) -> f64 {
        let rm = self.rm(r);
        (rm + a) / (1.0 + rm * a)
    }
}
