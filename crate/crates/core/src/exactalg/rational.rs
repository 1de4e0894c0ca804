use std::fmt;
use std::ops::{Div, Mul};

use num_traits::Signed;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Reduced quotient of integer polynomials.
///
/// After normalization the polynomial gcd (content included) is a unit and the
/// lowest nonzero coefficient of the denominator is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self { num, den: IntPolynomial::one() });
        }
        let g = IntPolynomial::gcd(&num, &den);
        let mut num = num.div_exact(&g)?;
        let mut den = den.div_exact(&g)?;
        let low = den.valuation().map(|k| den.coeff(k)).unwrap_or_default();
        if low.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        Self { num: p, den: IntPolynomial::one() }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// The polynomial this function equals, if any.
    pub fn as_polynomial(&self) -> Option<IntPolynomial> {
        match self.den.degree() {
            Some(0) => self.num.div_exact(&self.den).ok(),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators is nonzero")
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.num.is_zero() {
            return Err(Error::Precondition("division by zero".into()));
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeff(0) == 1.into() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn normalizes_common_factor() {
        // (1-t^2)/(1-t)^2 = (1+t)/(1-t)
        let rf = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -2, 1])).unwrap();
        assert_eq!(rf.numerator(), &p(&[1, 1]));
        assert_eq!(rf.denominator(), &p(&[1, -1]));
    }

    #[test]
    fn sign_convention() {
        let rf = RationalFunction::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert_eq!(rf.numerator(), &p(&[-1]));
        assert_eq!(rf.denominator(), &p(&[1, -1]));
    }

    #[test]
    fn content_is_removed() {
        let rf = RationalFunction::new(p(&[2, 2]), p(&[4])).unwrap();
        assert_eq!(rf.as_polynomial(), None);
        assert_eq!(rf.numerator(), &p(&[1, 1]));
        assert_eq!(rf.denominator(), &p(&[2]));
    }

    #[test]
    fn equality_is_canonical() {
        let a = RationalFunction::new(p(&[1, 0, 0, 1]), p(&[1, -2, 1])).unwrap();
        let b = RationalFunction::new(&p(&[1, 0, 0, 1]) * &p(&[1, 1]), &p(&[1, -2, 1]) * &p(&[1, 1])).unwrap();
        assert_eq!(a, b);
        let s = a.add(&b);
        assert_eq!(s, RationalFunction::new(p(&[2, 0, 0, 2]), p(&[1, -2, 1])).unwrap());
    }
}
