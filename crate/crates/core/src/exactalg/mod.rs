//! Exact integer polynomials, truncated power series, rational functions and
//! characteristic polynomials of integer matrices.

mod matrix;
mod pencil;
mod poly;
mod rational;
mod series;

pub use matrix::IntMatrix;
pub use pencil::{charpoly_of_product, product_matrix, RankOneFactor, SparseVec};
pub use poly::IntPolynomial;
pub use rational::RationalFunction;
pub use series::{series_divide, series_expand, series_inverse, PowerSeries};

/// `det(tI - m)`, computed without division.
pub fn charpoly(m: &IntMatrix) -> IntPolynomial {
    m.charpoly()
}
