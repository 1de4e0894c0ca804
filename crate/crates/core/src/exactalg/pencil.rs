//! Characteristic polynomials of products `(I - u_1 w_1^T) ... (I - u_m w_m^T)`.
//!
//! With `A = (w_i . u_j)` split as `N + D + L` (strict upper, diagonal, strict
//! lower), the product equals `I - U (I + N)^{-1} W^T`, so Sylvester's
//! determinant identity gives
//!
//! ```text
//! det(tI - c) = (t - 1)^(n - m) * det((t - 1) I + t N + D + L).
//! ```
//!
//! The right-hand pencil is as sparse as `A`, which for reflection groups is
//! the incidence pattern of the underlying graph. It is reduced by
//! fraction-free elimination of columns with a single off-diagonal entry;
//! whatever core survives is expanded by cofactors.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntMatrix, IntPolynomial};

pub type SparseVec = Vec<(usize, i64)>;

/// The map `x -> x - (w . x) u` on `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneFactor {
    pub u: SparseVec,
    pub w: SparseVec,
}

impl RankOneFactor {
    pub fn matrix(&self, n: usize) -> IntMatrix {
        let mut m = IntMatrix::identity(n);
        for &(i, ui) in &self.u {
            for &(j, wj) in &self.w {
                let v = m.get(i, j) - BigInt::from(ui) * BigInt::from(wj);
                m.set(i, j, v);
            }
        }
        m
    }
}

/// The product matrix, rightmost factor applied first.
pub fn product_matrix(n: usize, factors: &[RankOneFactor]) -> IntMatrix {
    let mut acc = IntMatrix::identity(n);
    for f in factors {
        // acc * (I - u w^T) = acc - (acc u) w^T
        let mut au = vec![BigInt::zero(); n];
        for &(k, uk) in &f.u {
            let uk = BigInt::from(uk);
            for (i, slot) in au.iter_mut().enumerate() {
                let a = acc.get(i, k);
                if !a.is_zero() {
                    *slot += a * &uk;
                }
            }
        }
        for (i, ai) in au.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for &(j, wj) in &f.w {
                let v = acc.get(i, j) - ai * BigInt::from(wj);
                acc.set(i, j, v);
            }
        }
    }
    acc
}

/// `det(tI - f_1 ... f_m)` for factors acting on `Z^n`.
pub fn charpoly_of_product(n: usize, factors: &[RankOneFactor]) -> IntPolynomial {
    let pairing = pairing_matrix(factors);
    let core = eliminate::<i128>(&pairing).or_else(|| eliminate::<BigInt>(&pairing));
    match core {
        Some(det) => {
            let shift = IntPolynomial::from_i64(&[-1, 1]).pow((n - factors.len()) as u32);
            &shift * &det
        }
        None => product_matrix(n, factors).charpoly(),
    }
}

fn pairing_matrix(factors: &[RankOneFactor]) -> Vec<BTreeMap<usize, i64>> {
    let mut by_coord: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
    for (j, f) in factors.iter().enumerate() {
        for &(k, uk) in &f.u {
            by_coord.entry(k).or_default().push((j, uk));
        }
    }
    factors
        .iter()
        .map(|f| {
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, wk) in &f.w {
                if let Some(hits) = by_coord.get(&k) {
                    for &(j, uk) in hits {
                        *row.entry(j).or_default() += wk * uk;
                    }
                }
            }
            row.retain(|_, v| *v != 0);
            row
        })
        .collect()
}

trait Coef: Clone + PartialEq + Sized {
    fn nil() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn sub(&self, rhs: &Self) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Coef for i128 {
    fn nil() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_sub(*rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coef for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

type Poly<C> = Vec<C>;

fn trim<C: Coef>(mut p: Poly<C>) -> Poly<C> {
    while p.last().is_some_and(|c| c.is_nil()) {
        p.pop();
    }
    p
}

fn pmul<C: Coef>(a: &[C], b: &[C]) -> Option<Poly<C>> {
    if a.is_empty() || b.is_empty() {
        return Some(Vec::new());
    }
    let mut out = vec![C::nil(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_nil() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_nil() {
                out[i + j] = out[i + j].add(&x.mul(y)?)?;
            }
        }
    }
    Some(trim(out))
}

fn psub<C: Coef>(a: &[C], b: &[C]) -> Option<Poly<C>> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(C::nil);
        out.push(match b.get(k) {
            Some(y) => x.sub(y)?,
            None => x,
        });
    }
    Some(trim(out))
}

/// The pencil entry at `(i, j)` for pairing value `a`.
fn entry<C: Coef>(i: usize, j: usize, a: i64) -> Poly<C> {
    let a = C::from_i64(a);
    let one = C::from_i64(1);
    let p = match i.cmp(&j) {
        std::cmp::Ordering::Less => vec![C::nil(), a],
        std::cmp::Ordering::Greater => vec![a],
        std::cmp::Ordering::Equal => vec![a.sub(&one).unwrap_or_else(C::nil), one],
    };
    trim(p)
}

const MAX_CORE: usize = 6;

fn eliminate<C: Coef>(pairing: &[BTreeMap<usize, i64>]) -> Option<IntPolynomial> {
    let m = pairing.len();
    let mut rows: Vec<BTreeMap<usize, Poly<C>>> = vec![BTreeMap::new(); m];
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
    for i in 0..m {
        let mut diag = 0i64;
        for (&j, &a) in &pairing[i] {
            if i == j {
                diag = a;
            } else {
                rows[i].insert(j, entry(i, j, a));
                cols[j].insert(i);
            }
        }
        rows[i].insert(i, entry(i, i, diag));
        cols[i].insert(i);
    }
    let mut active = vec![true; m];
    let mut acc: Poly<C> = vec![C::from_i64(1)];

    let mut progress = true;
    while progress {
        progress = false;
        for v in (0..m).rev() {
            if !active[v] || !cols[v].contains(&v) {
                continue;
            }
            let others: Vec<usize> = cols[v].iter().copied().filter(|&r| r != v).collect();
            if others.len() > 1 {
                continue;
            }
            let row_v = std::mem::take(&mut rows[v]);
            let pivot = row_v[&v].clone();
            if let Some(&u) = others.first() {
                // row_u <- pivot * row_u - m_uv * row_v; det is unchanged
                let row_u = std::mem::take(&mut rows[u]);
                let muv = row_u[&v].clone();
                let mut next: BTreeMap<usize, Poly<C>> = BTreeMap::new();
                for (&j, val) in &row_u {
                    if j != v {
                        next.insert(j, pmul(&pivot, val)?);
                    }
                }
                for (&j, val) in &row_v {
                    if j == v {
                        continue;
                    }
                    let prod = pmul(&muv, val)?;
                    let cur = next.remove(&j).unwrap_or_default();
                    next.insert(j, psub(&cur, &prod)?);
                }
                for j in row_u.keys() {
                    cols[*j].remove(&u);
                }
                next.retain(|_, p| !p.is_empty());
                for j in next.keys() {
                    cols[*j].insert(u);
                }
                rows[u] = next;
            } else {
                acc = pmul(&acc, &pivot)?;
            }
            for j in row_v.keys() {
                cols[*j].remove(&v);
            }
            cols[v].clear();
            active[v] = false;
            progress = true;
        }
    }

    let rest: Vec<usize> = (0..m).filter(|&i| active[i]).collect();
    if rest.len() > MAX_CORE {
        return None;
    }
    let dense: Vec<Vec<Poly<C>>> =
        rest.iter().map(|&i| rest.iter().map(|j| rows[i].get(j).cloned().unwrap_or_default()).collect()).collect();
    let core = cofactor_det(&dense)?;
    let det = pmul(&acc, &core)?;
    Some(IntPolynomial::new(det.iter().map(Coef::to_bigint).collect()))
}

fn cofactor_det<C: Coef>(m: &[Vec<Poly<C>>]) -> Option<Poly<C>> {
    let n = m.len();
    if n == 0 {
        return Some(vec![C::from_i64(1)]);
    }
    let mut total: Poly<C> = Vec::new();
    for j in 0..n {
        if m[0][j].is_empty() {
            continue;
        }
        let minor: Vec<Vec<Poly<C>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = pmul(&m[0][j], &cofactor_det(&minor)?)?;
        total = if j % 2 == 0 { psub(&total, &psub(&[], &term)?)? } else { psub(&total, &term)? };
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_coxeter_element() {
        // Gram of -A_2: [[-2,1],[1,-2]]; s_i(x) = x + <x,e_i> e_i
        let g = [[-2i64, 1], [1, -2]];
        let factors: Vec<RankOneFactor> =
            (0..2).map(|i| RankOneFactor { u: vec![(i, 1)], w: (0..2).map(|j| (j, -g[i][j])).collect() }).collect();
        let dense = product_matrix(2, &factors).charpoly();
        assert_eq!(dense, IntPolynomial::from_i64(&[1, 1, 1]));
        assert_eq!(charpoly_of_product(2, &factors), dense);
    }

    #[test]
    fn agrees_with_dense_on_dense_factors() {
        // arbitrary dense factors force the cofactor core and the fallback
        let factors: Vec<RankOneFactor> = (0..4)
            .map(|i| RankOneFactor {
                u: (0..5).map(|k| (k, (i as i64 + 2 * k as i64) % 3 - 1)).collect(),
                w: (0..5).map(|k| (k, (3 * i as i64 + k as i64) % 4 - 2)).collect(),
            })
            .collect();
        assert_eq!(charpoly_of_product(5, &factors), product_matrix(5, &factors).charpoly());
    }
}
