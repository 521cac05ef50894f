//! Independent verification oracle: exact Laurent arithmetic, the reduced
//! Burau representation for Alexander polynomials, and a budgeted Kauffman
//! bracket for Jones polynomials.
//!
//! Alexander triviality never certifies unknottedness here; the oracle
//! refutes (nontrivial polynomial means knotted) or corroborates.

pub mod burau;
pub mod kauffman;
pub mod poly;

pub use burau::{alexander, alexander_at_one, AlexanderError};
pub use kauffman::{jones_kauffman, normalized_bracket, JonesError, DEFAULT_MAX_CROSSINGS};
pub use poly::{Coeff, LaurentPoly};
