//! Certified linearly independent solutions of Kummer's equation.
//!
//! The confluent hypergeometric equation z w'' + (b - z) w' - a w = 0 has
//! three standard solutions — the Kummer function M(a,b,z), the second power
//! series solution M-tilde(a,b,z) = z^{1-b} M(1+a-b, 2-b, z), and the
//! Tricomi function U(a,b,z) — but for integer values of a, b, or a - b some
//! of them are undefined or proportional to one another. This crate
//! classifies any exact-tagged parameter pair into its case cell, constructs
//! a certified pair of linearly independent solutions (including the
//! logarithmic non-standard second solutions required in two of the cells),
//! evaluates everything with truncation-error estimates, and applies the
//! machinery to hydrogenic and cutoff-Coulomb bound states.

pub mod asympt;
pub mod batch;
pub mod bigfloat;
pub mod classify;
pub mod error;
pub mod jet;
pub mod kernel;
pub mod oracle;
pub mod param;
pub mod physics;
pub mod series;
pub mod tricomi;

pub use error::{EvalError, Result};
pub use param::{EvalConfig, ExactParam, IntegerTag};
pub use series::{SeriesEval, Termination};
