//! Deterministic test corpora: a Mobius sweep, fixed Blaschke products,
//! and seeded random Schur functions. Every member carries a
//! membership-in-the-unit-ball certificate by construction.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::functions::SeriesFunction;

pub const DEFAULT_SEED: u64 = 42;

/// 20 Mobius transforms with a = 0, 0.05, ..., 0.95.
pub fn mobius_corpus(order: usize) -> Vec<(String, SeriesFunction)> {
    (0..20)
        .map(|j| {
            let a = j as f64 / 20.0;
            (format!("mobius:a={a}"), SeriesFunction::mobius(a, order).unwrap())
        })
        .collect()
}

/// 10 fixed finite Blaschke products with 1 to 3 zeros.
pub fn blaschke_corpus(order: usize) -> Vec<(String, SeriesFunction)> {
    let c = Complex64::new;
    let zero_lists: [&[Complex64]; 10] = [
        &[c(0.0, 0.0)],
        &[c(0.5, 0.0)],
        &[c(-0.7, 0.0)],
        &[c(0.3, 0.4)],
        &[c(0.5, 0.0), c(-0.5, 0.0)],
        &[c(0.2, 0.3), c(0.2, -0.3)],
        &[c(0.6, 0.0), c(0.0, 0.6)],
        &[c(0.1, 0.0), c(0.4, 0.2), c(-0.3, 0.5)],
        &[c(0.8, 0.0), c(-0.2, -0.2)],
        &[c(0.0, 0.9), c(0.45, 0.0), c(-0.45, 0.0)],
    ];
    zero_lists
        .iter()
        .enumerate()
        .map(|(i, zs)| (format!("blaschke:{i}"), SeriesFunction::blaschke(zs, order).unwrap()))
        .collect()
}

/// `count` random Schur functions with 1 to 4 parameters of modulus
/// below 0.9, reproducible from the seed.
pub fn schur_corpus(seed: u64, count: usize, order: usize) -> Vec<(String, SeriesFunction)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let depth = rng.gen_range(1..=4);
            let gammas: Vec<Complex64> = (0..depth)
                .map(|_| {
                    // uniform over the disk of radius 0.9
                    let rho = 0.9 * rng.gen::<f64>().sqrt();
                    let th = rng.gen::<f64>() * std::f64::consts::TAU;
                    Complex64::new(rho * th.cos(), rho * th.sin())
                })
                .collect();
            (format!("schur:seed={seed},index={i}"), SeriesFunction::schur(&gammas, order).unwrap())
        })
        .collect()
}
