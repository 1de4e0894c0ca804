//! Exact computations around Poincaré series, monodromy and Coxeter elements of
//! quasihomogeneous surface singularities, and the frame shapes of the Conway
//! group they produce.

pub mod catalog;
pub mod cyclo;
mod error;
pub mod exactalg;
pub mod graded;
pub mod lattice;
pub mod monodromy;
pub mod moonshine;
pub mod suite;

pub use cyclo::FrameShape;
pub use error::{Error, Result};
pub use exactalg::{IntMatrix, IntPolynomial, PowerSeries, RationalFunction};
