//! Sharp radii for refined Bohr inequalities on the unit disk.
//!
//! The crate models masked geometric weight sequences, coefficient
//! models of analytic self-maps of the disk (Mobius, finite Blaschke,
//! Schur), and harmonic pairs `h + conj(g)` with `|g'| <= k |h'|` by
//! construction. On top of these it evaluates the weighted coefficient
//! sums of the refined inequalities, solves the characteristic equation
//! for the sharp radius, verifies the inequalities up to that radius on
//! r-z grids, and demonstrates sharpness beyond it with the extremal
//! family `h(z) = (a - z)/(1 - a z)`, `g = lambda k h_0`.

pub mod corpus;
pub mod error;
pub mod functions;
pub mod parse;
pub mod problem;
pub mod proof;
pub mod radius;
pub mod series;
pub mod sums;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use functions::{HarmonicPair, SeriesFunction, DEFAULT_ORDER};
pub use problem::RadiusProblem;
pub use radius::{characteristic, closed_form_radius, solve_radius, ClosedForm, RadiusResult};
pub use verify::{
    lemma_c_check, monotonicity_check, radius_table, sharpness_probe, verify_inequality,
    SharpnessReport, VerificationReport,
};
pub use weights::WeightSequence;
