use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole at origin: denominator has zero constant term")]
    PoleAtOrigin,
    #[error("series expansion is not integral")]
    NonIntegralSeries,
    #[error("exact division failed")]
    InexactDivision,
    #[error("not a polynomial: cyclotomic multiplicity of Phi_{0} is {1}")]
    NotPolynomial(u64, i64),
    #[error("not a cyclotomic product")]
    NotCyclotomic,
    #[error("h = {0} incompatible with support")]
    IncompatibleModulus(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid weight system: {0}")]
    InvalidWeights(String),
    #[error("Riemann-Roch shortcut only valid for genus 0")]
    GenusNotZero,
    #[error("no valid beta: gcd(R, {0}) > 1")]
    NoValidBeta(u64),
    #[error("missing theorem-case metadata for {0}")]
    MissingCase(String),
    #[error("convention violation: {0}")]
    Convention(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid ADE rank {0}{1}")]
    InvalidRank(char, usize),
    #[error("dataset corrupted: {0}")]
    Dataset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
