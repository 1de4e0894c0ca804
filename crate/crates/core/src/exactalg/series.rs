use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntPolynomial, RationalFunction};
use crate::error::{Error, Result};

/// Power series truncated after `t^N`; always holds exactly `N + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn new(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::from_polynomial(&IntPolynomial::one(), order)
    }

    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        Self::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Multiply in place by `(1 - t^m)`.
    pub fn mul_one_minus(&mut self, m: usize) {
        for k in (m..self.coeffs.len()).rev() {
            let prev = self.coeffs[k - m].clone();
            self.coeffs[k] -= prev;
        }
    }

    /// Multiply in place by `1 / (1 - t^m)`.
    pub fn div_one_minus(&mut self, m: usize) {
        for k in m..self.coeffs.len() {
            let prev = self.coeffs[k - m].clone();
            self.coeffs[k] += prev;
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Taylor coefficients of `rf` at the origin through `t^n`.
pub fn series_expand(rf: &RationalFunction, n: usize) -> Result<PowerSeries> {
    series_divide(rf.numerator(), rf.denominator(), n)
}

/// Taylor coefficients of `num / den` through `t^n`, without reducing first.
pub fn series_divide(num: &IntPolynomial, den: &IntPolynomial, n: usize) -> Result<PowerSeries> {
    let q0 = den.constant_term();
    if q0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let dq = den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num.coeff(k);
        for j in 1..dq.len().min(k + 1) {
            if !dq[j].is_zero() {
                acc -= &dq[j] * &out[k - j];
            }
        }
        let (c, r) = acc.div_rem(&q0);
        if !r.is_zero() {
            return Err(Error::NonIntegralSeries);
        }
        out.push(c);
    }
    Ok(PowerSeries { coeffs: out })
}

/// The inverse of a series whose constant term is a unit.
pub fn series_inverse(s: &PowerSeries) -> Result<PowerSeries> {
    let q0 = s.coeff(0).clone();
    if !(q0.is_one() || q0 == -BigInt::one()) {
        return Err(Error::NonIntegralSeries);
    }
    let n = s.order();
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = if k == 0 { BigInt::one() } else { BigInt::zero() };
        for j in 1..=k {
            acc -= &s.coeffs[j] * &out[k - j];
        }
        out.push(acc * &q0);
    }
    Ok(PowerSeries { coeffs: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn geometric() {
        let rf = RationalFunction::new(IntPolynomial::one(), IntPolynomial::from_i64(&[1, -1])).unwrap();
        assert_eq!(ints(&series_expand(&rf, 3).unwrap()), vec![1, 1, 1, 1]);
    }

    #[test]
    fn pole_at_origin() {
        let rf = RationalFunction::new(IntPolynomial::one(), IntPolynomial::from_i64(&[0, 1])).unwrap();
        assert_eq!(series_expand(&rf, 3), Err(Error::PoleAtOrigin));
    }

    #[test]
    fn inverse_round_trip() {
        let s = PowerSeries::from_polynomial(&IntPolynomial::from_i64(&[1, -3, 2, 5]), 10);
        let inv = series_inverse(&s).unwrap();
        assert_eq!(s.mul(&inv), PowerSeries::one(10));
    }

    #[test]
    fn in_place_binomials() {
        let mut s = PowerSeries::one(8);
        s.div_one_minus(3);
        assert_eq!(ints(&s), vec![1, 0, 0, 1, 0, 0, 1, 0, 0]);
        s.mul_one_minus(3);
        assert_eq!(s, PowerSeries::one(8));
    }
}
