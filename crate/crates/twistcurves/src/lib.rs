//! Essential simple closed curves on genus-one Seifert surfaces of twist
//! knots.
//!
//! The crate synthesizes a braid-closure representative for every
//! homologically essential simple closed curve on the standard genus-one
//! Seifert surface of a twist knot `K_t`, decides unknottedness and slice
//! status with constructive certificates, verifies claims through an exact
//! Alexander/Jones oracle, and emits the Dehn surgery descriptions that
//! yield homology spheres bounding contractible 4-manifolds.
//!
//! Core arithmetic is generic over the exact coefficient scalar via
//! [`invariants::Coeff`]; the concrete aliases below fix the rings used by
//! the oracle.

pub mod braid;
pub mod curves;
pub mod invariants;
pub mod synthesis;

pub use braid::{BraidWord, CrossingCounts, Letter, Sign, SignClass};
pub use curves::{case_of, CaseLabel, CurveError, EssentialCurve, Pattern, TwistKnot};
pub use synthesis::{synthesize, SynthesisResult};

/// Alexander polynomials: arbitrary-precision integer coefficients.
pub type AlexanderPoly = invariants::LaurentPoly<num_bigint::BigInt>;

/// Jones polynomials from the budgeted Kauffman bracket: machine integers
/// are ample within the crossing budget.
pub type JonesPoly = invariants::LaurentPoly<i64>;
