use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics unless every row has length `rows.len()`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        Self { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.n).map(|i| self.row(i).iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()).collect()
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_polynomial(&self, p: &IntPolynomial) -> Self {
        let mut acc = Self::zeros(self.n);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..self.n {
                acc.data[i * self.n + i] += c;
            }
        }
        acc
    }

    /// `det(tI - M)` by Berkowitz's division-free algorithm.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.n;
        // coefficients of the current leading-minor char poly, highest degree first
        let mut poly: Vec<BigInt> = vec![BigInt::one()];
        for r in 0..n {
            // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
            let mut toeplitz = Vec::with_capacity(r + 2);
            toeplitz.push(BigInt::one());
            toeplitz.push(-self.get(r, r));
            let mut col: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let dot: BigInt = (0..r).filter(|&j| !col[j].is_zero()).map(|j| self.get(r, j) * &col[j]).sum();
                toeplitz.push(-dot);
                if k + 1 < r {
                    col = (0..r)
                        .map(|i| (0..r).filter(|&j| !col[j].is_zero()).map(|j| self.get(i, j) * &col[j]).sum())
                        .collect();
                }
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, p) in poly.iter().enumerate().take(i + 1) {
                    if !p.is_zero() && !toeplitz[i - j].is_zero() {
                        *slot += &toeplitz[i - j] * p;
                    }
                }
            }
            poly = next;
        }
        poly.reverse();
        IntPolynomial::new(poly)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
