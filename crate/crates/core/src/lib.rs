//! Exact computations for Seifert fibered spaces, cyclic branched covers of
//! torus knots, Dehn filling slope calculus and coarse left-orderability
//! obstructions.
//!
//! Everything is exact: integers are arbitrary precision and rationals are
//! always kept in lowest terms.

pub mod arith;
pub mod cable;
pub mod cli;
pub mod error;
pub mod foliation;
pub mod group;
pub mod homology;
pub mod lo;
pub mod seifert;
pub mod slope;
pub mod surgery;
pub mod torus_covers;

pub use arith::{ContinuedFraction, ExpansionPolicy, Rational};
pub use error::{Error, Result};
pub use foliation::{ExcellenceVerdict, FoliationDecision, VerdictKind, Witness};
pub use seifert::{Fiber, H1Order, SeifertInvariants};
