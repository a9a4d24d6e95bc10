//! Masked geometric weight sequences and their exact tail sums.
//!
//! A weight sequence assigns `phi_n(r) = r^n` to every index `n >= 1`
//! lying on one of a set of disjoint arithmetic progressions and 0 to
//! every other index. The tail `Phi_N(r) = sum_{n>=N} phi_n(r)` then has
//! a closed form: each progression contributes a geometric series.

use crate::error::{Error, Result};

/// An arithmetic progression `offset + j*stride`, `j >= 0`, of supported indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Progression {
    pub offset: u32,
    pub stride: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct WeightSequence {
    progressions: Vec<Progression>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl WeightSequence {
    /// The full geometric sequence `phi_n(r) = r^n` for all `n >= 1`.
    pub fn geometric() -> Self {
        WeightSequence {
            progressions: vec![Progression { offset: 1, stride: 1 }],
        }
    }

    /// Even-index-only weights: `phi_{2n}(r) = r^{2n}`, odd terms zero.
    pub fn even_only() -> Self {
        Self::masked(&[(2, 2)]).expect("valid")
    }

    /// Lacunary weights supported on multiples of `k`.
    pub fn lacunary(k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::Invalid("lacunary stride must be >= 1".into()));
        }
        Self::masked(&[(k, k)])
    }

    /// General masked weights from `(offset, stride)` pairs.
    ///
    /// Rejects offsets or strides below 1 and overlapping progressions.
    pub fn masked(progs: &[(u32, u32)]) -> Result<Self> {
        if progs.is_empty() {
            return Err(Error::Invalid("at least one progression required".into()));
        }
        for &(s, d) in progs {
            if s < 1 {
                return Err(Error::Invalid(
                    "progression offset must be >= 1 (phi_0 is excluded)".into(),
                ));
            }
            if d < 1 {
                return Err(Error::Invalid("progression stride must be >= 1".into()));
            }
        }
        // Two progressions s1+j*d1 and s2+l*d2 share an index iff
        // s1 ≡ s2 (mod gcd(d1, d2)); any common residue admits solutions
        // past both offsets.
        for i in 0..progs.len() {
            for j in (i + 1)..progs.len() {
                let (s1, d1) = progs[i];
                let (s2, d2) = progs[j];
                let g = gcd(d1 as u64, d2 as u64);
                if (s1 as i64 - s2 as i64).rem_euclid(g as i64) == 0 {
                    return Err(Error::Invalid(format!(
                        "progressions {s1}+{d1}n and {s2}+{d2}n overlap"
                    )));
                }
            }
        }
        Ok(WeightSequence {
            progressions: progs
                .iter()
                .map(|&(offset, stride)| Progression { offset, stride })
                .collect(),
        })
    }

    pub fn progressions(&self) -> &[Progression] {
        &self.progressions
    }

    pub fn is_geometric(&self) -> bool {
        self.progressions == [Progression { offset: 1, stride: 1 }]
    }

    /// True iff index `n` is on the support.
    pub fn supports(&self, n: u32) -> bool {
        self.progressions
            .iter()
            .any(|p| n >= p.offset && (n - p.offset).is_multiple_of(p.stride))
    }

    /// `phi_n(r)`: exactly `r^n` on the support, exactly 0 off it.
    pub fn term(&self, n: u32, r: f64) -> Result<f64> {
        check_r(r)?;
        if n < 1 {
            return Err(Error::Domain("weight index must be >= 1".into()));
        }
        Ok(if self.supports(n) { r.powi(n as i32) } else { 0.0 })
    }

    /// `Phi_N(r) = sum_{n>=N} phi_n(r)` in closed form.
    ///
    /// Each progression `(s, d)` contributes `r^{n0} / (1 - r^d)` where
    /// `n0` is its smallest member `>= N`. No truncation error.
    pub fn tail(&self, n_start: u32, r: f64) -> Result<f64> {
        check_r(r)?;
        if n_start < 1 {
            return Err(Error::Domain("tail start must be >= 1".into()));
        }
        let mut total = 0.0;
        for p in &self.progressions {
            let n0 = if n_start <= p.offset {
                p.offset
            } else {
                p.offset + (n_start - p.offset).div_ceil(p.stride) * p.stride
            };
            total += r.powi(n0 as i32) / (1.0 - r.powi(p.stride as i32));
        }
        Ok(total)
    }

    /// `sum_{n>=1} a^{n-1} phi_n(r)` in closed form (used by Q_p).
    ///
    /// Progression `(s, d)` contributes `a^{s-1} r^s / (1 - (a r)^d)`.
    pub fn geometric_weighted_sum(&self, a: f64, r: f64) -> Result<f64> {
        check_r(r)?;
        if !(0.0..1.0).contains(&a) {
            return Err(Error::Domain(format!("a = {a} outside [0, 1)")));
        }
        let mut total = 0.0;
        for p in &self.progressions {
            let s = p.offset as i32;
            let d = p.stride as i32;
            total += a.powi(s - 1) * r.powi(s) / (1.0 - (a * r).powi(d));
        }
        Ok(total)
    }
}

pub(crate) fn check_r(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("r = {r} outside [0, 1)")));
    }
    Ok(())
}
