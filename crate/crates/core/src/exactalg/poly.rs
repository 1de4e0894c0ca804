use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over the integers, coefficients ascending by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The binomial `1 - t^m`.
    pub fn one_minus_t_pow(m: usize) -> Self {
        if m == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = BigInt::one();
        coeffs[m] = -BigInt::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `t^deg * p(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    /// Equals plus or minus its own reversal.
    pub fn is_self_reciprocal(&self) -> bool {
        let r = self.reversed();
        r == *self || r == -self
    }

    /// Gcd of the coefficients, signed like the leading coefficient.
    pub fn content(&self) -> BigInt {
        let g = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        match self.leading() {
            Some(l) if l.is_negative() => -g,
            _ => g,
        }
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Quotient and remainder when the divisor's leading coefficient divides
    /// every intermediate leading term. Returns `None` otherwise.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead = d.leading()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient `self / d`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        match self.div_rem(d) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::InexactDivision),
        }
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let Some(dd) = d.degree() else {
            return self.clone();
        };
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.leading().unwrap().clone();
            let shifted = Self::monomial(top, rd - dd);
            rem = &rem.scale(&lead) - &(&shifted * d);
        }
        rem
    }

    /// Greatest common divisor over the integers, positive leading coefficient.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_part().scale(&b.content().abs());
        }
        if b.is_zero() {
            return a.primitive_part().scale(&a.content().abs());
        }
        let c = a.content().abs().gcd(&b.content().abs());
        let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = x.pseudo_rem(&y);
            x = y;
            y = if r.is_zero() { r } else { r.primitive_part() };
        }
        x.primitive_part().scale(&c)
    }
}

impl From<BigInt> for IntPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], sign: bool) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            match b.get(k) {
                Some(y) if sign => x + y,
                Some(y) => x - y,
                None => x,
            }
        })
        .collect()
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending form with explicit signs, e.g. `1 - 2*t + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Accepts the display form: terms `c`, `c*t`, `t^k`, `c*t^k`, joined by `+`/`-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (c, k) = match body.find('t') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let head = &body[..pos];
                    let c = match head {
                        "" => BigInt::one(),
                        _ => head.strip_suffix('*').ok_or_else(bad)?.parse::<BigInt>().map_err(|_| bad())?,
                    };
                    let tail = &body[pos + 1..];
                    let k = match tail {
                        "" => 1,
                        _ => tail.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?,
                    };
                    (c, k)
                }
            };
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            if neg {
                coeffs[k] -= c;
            } else {
                coeffs[k] += c;
            }
        }
        Ok(Self::new(coeffs))
    }
}
