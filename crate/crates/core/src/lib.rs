//! Euclidean ideal classes in imaginary quadratic fields.
//!
//! The crate works entirely in exact arithmetic over `Q(√-D)`:
//!
//! - [`field`]: elements over the integral basis `(1, ω)` and the plane embedding.
//! - [`ideal`]: fractional ideals in normal form, splitting of rational primes,
//!   principality and the class group.
//! - [`forms`]: reduced binary quadratic forms and Gauss composition.
//! - [`lattice`]: planar lattices, Lagrange reduction, closest vectors and the
//!   exact covering radius.
//! - [`motzkin`]: the level sets `A_{C,0} ⊆ A_{C,1} ⊆ …` and the minimal
//!   Euclidean algorithm they induce.
//! - [`classify`]: the reduction to degree-one primes over 2 and 3 and the
//!   covering test that decides each field.
//! - [`report`] and [`figure`]: text/JSON reports and SVG figures.

pub mod classify;
pub mod error;
pub mod field;
pub mod figure;
pub mod forms;
pub mod ideal;
pub mod lattice;
pub mod motzkin;
pub mod par;
pub mod report;

mod util;

pub use classify::{
    candidate_classes, classify_field, classify_range, classify_range_with, Candidate,
    CandidateVerdict, Conclusion, FieldVerdict,
};
pub use error::{Error, Result};
pub use field::{FieldElement, OmegaKind, PlanePoint, QuadField};
pub use forms::QuadForm;
pub use ideal::{FracIdeal, IdealClassLabel, Splitting};
pub use lattice::{CoverKind, CoverVerdict, PlanarLattice};
pub use motzkin::{run_motzkin, MotzkinState, MotzkinStatus};
pub use par::Execution;

/// Exact rational numbers used throughout the crate.
pub type Rational = num_rational::BigRational;
