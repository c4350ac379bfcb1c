//! Exact compilation of rational polynomials into one-parameter multifold
//! constructions.
//!
//! A polynomial `p` is written in Horner form and compiled into a
//! [`FoldScript`](compiler::FoldScript): a fixed setup of reference creases
//! followed by one strip-transfer iteration per coefficient. Each iteration
//! maps a strip pair encoding the signed distance `d` to a pair encoding
//! `x*d + a`, so the final pair's gap is `p(x)` and the alignment condition
//! (the inner edges touching) is `p(x) = 0`.
//!
//! The [`simulator`] elaborates a script into geometry whose coordinates are
//! exact polynomials in the sliding parameter `x`, the [`solver`] rolls that
//! parameter to alignment under Sturm certification, and [`reduction`]
//! produces rational polynomials whose real roots include the real and
//! imaginary parts of every complex root.

pub mod algebra;
pub mod compiler;
pub mod error;
pub mod reduction;
pub mod simulator;
pub mod solver;

pub use algebra::{Interval, Poly, Rational};
pub use error::{Error, Result};
