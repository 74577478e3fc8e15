//! Exact slope calculus for contact surgery on torus neighborhoods, together
//! with the homology and braid invariants used to check it.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact_math`]: big-integer rationals, integer matrices, Smith normal
//!   form, Laurent polynomials.
//! - [`slope_calculus`]: slopes `p/q` on a torus, the Farey structure and the
//!   `SL(2, Z)` action.
//! - [`surgery_twists`]: the contact `+-1` twist action, reduction of
//!   admissible transverse surgeries to contact surgery programs, realizable
//!   and excluded slope sequences, and the slope classifier.
//! - [`open_books`]: marked surfaces, monodromy words, homology of open book
//!   manifolds and their binding fillings, FDTC and contact status rules for
//!   the genus one two-boundary family.
//! - [`braids`]: braid words, closure components, the reduced Burau
//!   representation and link determinants.

pub mod braids;
pub mod citations;
pub mod error;
pub mod exact_math;
pub mod json;
pub mod open_books;
pub mod slope_calculus;
pub mod surgery_twists;

pub use braids::BraidWord;
pub use error::{BraidError, MathError, OpenBookError, SurgeryError};
pub use exact_math::{IntMatrix, LaurentPoly, Rational};
pub use open_books::{FamilyParams, MarkedSurface, MonodromyWord};
pub use slope_calculus::{Slope, SlopeInterval, SlopeMatrix};
pub use surgery_twists::{ContactSign, SlopeVerdict, TwistProgram, TwistStep};
