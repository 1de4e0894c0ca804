//! Frame shapes: finite products `prod (1 - t^m)^chi_m`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{series_divide, IntPolynomial, PowerSeries, RationalFunction};

/// The symbol `prod m^chi_m`, standing for `prod (1 - t^m)^chi_m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrameShape {
    exps: BTreeMap<u64, i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Multiply,
    Divide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FsInvariants {
    pub degree: i64,
    pub order: u64,
    pub self_dual: bool,
}

impl FrameShape {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds from `(m, chi_m)` pairs, summing repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (u64, i64)>>(pairs: I) -> Self {
        let mut fs = Self::one();
        for (m, e) in pairs {
            fs.bump(m, e);
        }
        fs
    }

    /// The single factor `(1 - t^m)^e`.
    pub fn factor(m: u64, e: i64) -> Self {
        Self::from_pairs([(m, e)])
    }

    fn bump(&mut self, m: u64, e: i64) {
        assert!(m >= 1, "frame shape bases are positive");
        if e == 0 {
            return;
        }
        let slot = self.exps.entry(m).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&m);
        }
    }

    pub fn exponent(&self, m: u64) -> i64 {
        self.exps.get(&m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exps.iter().map(|(&m, &e)| (m, e))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn combine(&self, rhs: &Self, mode: Combine) -> Self {
        let sign = match mode {
            Combine::Multiply => 1,
            Combine::Divide => -1,
        };
        let mut out = self.clone();
        for (m, e) in rhs.iter() {
            out.bump(m, sign * e);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.combine(rhs, Combine::Multiply)
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.combine(rhs, Combine::Divide)
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::from_pairs(self.iter().map(|(m, e)| (m, e * k)))
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// `sum m * chi_m`.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(m, e)| m as i64 * e).sum()
    }

    /// Least common multiple of the support; 1 for the empty product.
    pub fn order(&self) -> u64 {
        self.exps.keys().fold(1u64, |acc, &m| acc.lcm(&m))
    }

    /// Saito's dual `k -> -chi_{h/k}`, with `h` defaulting to the order.
    pub fn saito_dual(&self, h: Option<u64>) -> Result<Self> {
        let h = h.unwrap_or_else(|| self.order());
        if h == 0 || self.exps.keys().any(|m| !h.is_multiple_of(*m)) {
            return Err(Error::IncompatibleModulus(h));
        }
        Ok(Self::from_pairs(self.iter().map(|(m, e)| (h / m, -e))))
    }

    pub fn dual(&self) -> Self {
        self.saito_dual(None).expect("order is divisible by its support")
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    pub fn invariants(&self) -> FsInvariants {
        FsInvariants { degree: self.degree(), order: self.order(), self_dual: self.is_self_dual() }
    }

    /// Multiplicity of `Phi_d` in the product, for every `d` dividing the order.
    pub fn cyclotomic_multiplicities(&self) -> BTreeMap<u64, i64> {
        let mut out = BTreeMap::new();
        for d in divisors(self.order()) {
            let k: i64 = self.iter().filter(|(m, _)| m % d == 0).map(|(_, e)| e).sum();
            if k != 0 {
                out.insert(d, k);
            }
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.cyclotomic_multiplicities().values().all(|&k| k >= 0)
    }

    /// Truncated expansion of the product through `t^n`.
    pub fn series(&self, n: usize) -> PowerSeries {
        let mut s = PowerSeries::one(n);
        for (m, e) in self.iter() {
            let m = m as usize;
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    s.mul_one_minus(m);
                } else {
                    s.div_one_minus(m);
                }
            }
        }
        s
    }

    pub fn to_polynomial(&self) -> Result<IntPolynomial> {
        if let Some((&d, &k)) = self.cyclotomic_multiplicities().iter().find(|(_, k)| **k < 0) {
            return Err(Error::NotPolynomial(d, k));
        }
        let deg = self.degree().max(0) as usize;
        Ok(IntPolynomial::new(self.series(deg).coeffs().to_vec()))
    }

    pub fn to_rational(&self) -> RationalFunction {
        let mut num = IntPolynomial::one();
        let mut den = IntPolynomial::one();
        for (m, e) in self.iter() {
            let f = IntPolynomial::one_minus_t_pow(m as usize).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    /// Recognizes `p` as a cyclotomic product, normalized so `p(0) = 1`.
    pub fn from_polynomial(p: &IntPolynomial) -> Result<Self> {
        if !p.constant_term().is_one() {
            return Err(Error::Precondition("constant term must be 1".into()));
        }
        let deg = p.degree().unwrap_or(0);
        if deg == 0 {
            return Ok(Self::one());
        }
        let bound = max_cyclotomic_index(deg as u64) as usize;
        // a_n of -t p'/p, so that sum_{m | n} m chi_m = a_n
        let num = -(&IntPolynomial::monomial(BigInt::one(), 1) * &p.derivative());
        let a = series_divide(&num, p, bound)?;
        let mut pairs = Vec::new();
        for m in 1..=bound as u64 {
            let mut s = BigInt::zero();
            for d in divisors(m) {
                let mu = mobius(m / d);
                if mu != 0 {
                    s += a.coeff(d as usize) * BigInt::from(mu);
                }
            }
            let (q, r) = s.div_rem(&BigInt::from(m));
            if !r.is_zero() {
                return Err(Error::NotCyclotomic);
            }
            if !q.is_zero() {
                let e = q.to_i64().ok_or(Error::NotCyclotomic)?;
                pairs.push((m, e));
            }
        }
        let fs = Self::from_pairs(pairs);
        match fs.to_polynomial() {
            Ok(q) if q == *p => Ok(fs),
            _ => Err(Error::NotCyclotomic),
        }
    }

    fn fmt_part(parts: &[(u64, i64)]) -> String {
        if parts.is_empty() {
            return "1^0".to_string();
        }
        parts
            .iter()
            .map(|&(m, e)| if e == 1 { m.to_string() } else { format!("{m}^{e}") })
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl fmt::Display for FrameShape {
    /// Canonical text: ascending bases, `·` separators, `/` before the denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos: Vec<(u64, i64)> = self.iter().filter(|(_, e)| *e > 0).collect();
        let neg: Vec<(u64, i64)> = self.iter().filter(|(_, e)| *e < 0).map(|(m, e)| (m, -e)).collect();
        write!(f, "{}", Self::fmt_part(&pos))?;
        if !neg.is_empty() {
            write!(f, "/{}", Self::fmt_part(&neg))?;
        }
        Ok(())
    }
}

impl FromStr for FrameShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("frame shape {s:?}: {why}"));
        let mut halves = s.split('/');
        let num = halves.next().unwrap_or("");
        let den = halves.next();
        if halves.next().is_some() {
            return Err(bad("more than one '/'"));
        }
        let mut fs = Self::one();
        for (part, sign) in [(Some(num), 1i64), (den, -1)] {
            let Some(part) = part else { continue };
            let factors: Vec<&str> =
                part.split(|c: char| c == '·' || c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
            if factors.is_empty() {
                return Err(bad("empty product"));
            }
            for tok in factors {
                let (base, exp) = match tok.split_once('^') {
                    Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad("exponent"))?),
                    None => (tok, 1),
                };
                let base: i64 = base.parse().map_err(|_| bad("base"))?;
                if base <= 0 {
                    return Err(bad("zero or negative base"));
                }
                fs.bump(base as u64, sign * exp);
            }
        }
        Ok(fs)
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n0 = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n0 {
        if n0.is_multiple_of(p) {
            while n0.is_multiple_of(p) {
                n0 /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n0 > 1 {
        out -= out / n0;
    }
    out
}

/// Largest `n` with `phi(n) <= deg`; uses `phi(n) >= sqrt(n / 2)`.
fn max_cyclotomic_index(deg: u64) -> u64 {
    (1..=2 * deg * deg + 2).filter(|&n| euler_phi(n) <= deg).max().unwrap_or(1)
}

/// `IntPolynomial` coefficients as `i64`, for tests and display.
pub fn small_coeffs(p: &IntPolynomial) -> Option<Vec<i64>> {
    p.coeffs().iter().map(|c| c.to_i64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(s: &str) -> FrameShape {
        s.parse().unwrap()
    }

    #[test]
    fn parse_table_symbols() {
        let a = fs("2^6 6^6/1^6 3^6");
        assert_eq!(a, FrameShape::from_pairs([(2, 6), (6, 6), (1, -6), (3, -6)]));
        assert_eq!(a.to_string(), "2^6·6^6/1^6·3^6");
        let b = fs("2·46/1·23");
        assert_eq!(b, FrameShape::from_pairs([(2, 1), (46, 1), (1, -1), (23, -1)]));
        assert_eq!(fs("2*3/1^2"), fs("2·3/1^2"));
        assert!("0^2".parse::<FrameShape>().is_err());
        assert!("-3".parse::<FrameShape>().is_err());
        assert!("2//1".parse::<FrameShape>().is_err());
        assert!("2^x".parse::<FrameShape>().is_err());
    }

    #[test]
    fn empty_product_formats() {
        assert_eq!(FrameShape::one().to_string(), "1^0");
        assert_eq!(fs("1^0"), FrameShape::one());
        assert_eq!(FrameShape::factor(1, -2).to_string(), "1^0/1^2");
        assert_eq!(fs("1^0/1^2"), FrameShape::factor(1, -2));
    }

    #[test]
    fn combine_examples() {
        assert_eq!(fs("2^4/1^2").mul(&fs("2^2/1^4")), fs("2^6/1^6"));
        let p = fs("2·3/1^2");
        assert!(p.mul(&p.inverse()).is_one());
        assert_eq!(fs("2·3·7/1").mul(&fs("42/6·14·21")), fs("2·3·7·42/1·6·14·21"));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(fs("2^4/1^2").saito_dual(Some(2)).unwrap(), fs("2^2/1^4"));
        let e12 = fs("2·3·7·42/1·6·14·21");
        assert_eq!(e12.saito_dual(Some(42)).unwrap(), e12);
        assert_eq!(fs("2·3").saito_dual(Some(4)), Err(Error::IncompatibleModulus(4)));
    }

    #[test]
    fn invariants_examples() {
        let one_a = fs("2^24/1^24").invariants();
        assert_eq!((one_a.degree, one_a.order, one_a.self_dual), (24, 2, true));
        let e = FrameShape::one().invariants();
        assert_eq!((e.degree, e.order, e.self_dual), (0, 1, true));
        let d24 = fs("2·46/1·23").invariants();
        assert_eq!((d24.degree, d24.order, d24.self_dual), (24, 46, true));
    }

    #[test]
    fn polynomial_conversion() {
        // Phi_42 = t^12+t^11-t^9-t^8+t^6-t^4-t^3+t+1, checked against the series oracle
        let p = fs("2·3·7·42/1·6·14·21").to_polynomial().unwrap();
        assert_eq!(small_coeffs(&p).unwrap(), vec![1, 1, 0, -1, -1, 0, 1, 0, -1, -1, 0, 1, 1]);
        assert_eq!(fs("1").to_polynomial().unwrap(), IntPolynomial::from_i64(&[1, -1]));
        assert_eq!(fs("2^2/1^4").to_polynomial(), Err(Error::NotPolynomial(1, -2)));
    }

    #[test]
    fn recognition() {
        let rec = |c: &[i64]| FrameShape::from_polynomial(&IntPolynomial::from_i64(c));
        assert_eq!(rec(&[1, 1]).unwrap(), fs("2/1"));
        assert_eq!(rec(&[1, 1, 1]).unwrap(), fs("3/1"));
        // 1 + t^3 = (1 - t^6)/(1 - t^3)
        assert_eq!(rec(&[1, 0, 0, 1]).unwrap(), fs("6/3"));
        assert_eq!(rec(&[1, 2]), Err(Error::NotCyclotomic));
        assert_eq!(rec(&[1, 1, 2]), Err(Error::NotCyclotomic));
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!((1..=10).map(mobius).collect::<Vec<_>>(), vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
        assert_eq!(euler_phi(42), 12);
        assert_eq!(max_cyclotomic_index(2), 6);
    }
}
