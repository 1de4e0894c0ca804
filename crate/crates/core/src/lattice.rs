//! The lattice `M_inf + U` of a Fuchsian signature and its Coxeter element.
//!
//! Basis order: the chain vectors `delta_{i,j}` (chain by chain), then
//! `eps`, `f1`, `f2`. Vectors are dense integer coordinates in that basis.

use std::fmt;

use num_bigint::BigInt;

use crate::cyclo::FrameShape;
use crate::error::{Error, Result};
use crate::exactalg::{charpoly_of_product, product_matrix, IntMatrix, IntPolynomial, RankOneFactor, SparseVec};
use crate::graded::FuchsianSignature;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Chain { arm: usize, step: usize },
    Eps,
    F1,
    F2,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Chain { arm, step } => write!(f, "delta_{},{}", arm + 1, step),
            BasisLabel::Eps => write!(f, "eps"),
            BasisLabel::F1 => write!(f, "f1"),
            BasisLabel::F2 => write!(f, "f2"),
        }
    }
}

/// An integral lattice given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    gram: Vec<Vec<i64>>,
    labels: Vec<BasisLabel>,
}

impl Lattice {
    pub fn new(gram: Vec<Vec<i64>>, labels: Vec<BasisLabel>) -> Result<Self> {
        let n = gram.len();
        if labels.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(Error::Precondition("Gram matrix and labels disagree in size".into()));
        }
        if let Some((i, j)) = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).find(|&(i, j)| gram[i][j] != gram[j][i])
        {
            return Err(Error::Precondition(format!("Gram matrix not symmetric at ({i}, {j})")));
        }
        Ok(Self { gram, labels })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self.gram.clone();
        IntMatrix::from_rows(&rows)
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis_vector(&self, k: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[k] = 1;
        v
    }

    /// `G x`, the functional `y -> <y, x>` in coordinates.
    pub fn dual_of(&self, x: &[i64]) -> Vec<i64> {
        self.gram.iter().map(|row| row.iter().zip(x).map(|(g, v)| g * v).sum()).collect()
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        self.dual_of(x).iter().zip(y).map(|(a, b)| a * b).sum()
    }

    fn eps(&self) -> usize {
        self.index_of(&BasisLabel::Eps).expect("lattice has no eps vector")
    }

    fn f1(&self) -> usize {
        self.index_of(&BasisLabel::F1).expect("lattice has no f1 vector")
    }

    fn f2(&self) -> usize {
        self.index_of(&BasisLabel::F2).expect("lattice has no f2 vector")
    }

    /// Whether `m^T G m = G`.
    pub fn preserves(&self, m: &IntMatrix) -> bool {
        let g = self.gram_matrix();
        &(&m.transpose() * &g) * m == g
    }
}

/// The dual graph of the resolution plus a hyperbolic plane.
pub fn build_fuchsian_lattice(sig: &FuchsianSignature) -> Lattice {
    let mut labels = Vec::with_capacity(sig.rank());
    for (arm, &a) in sig.alphas.iter().enumerate() {
        for step in 1..a as usize {
            labels.push(BasisLabel::Chain { arm, step });
        }
    }
    let chains = labels.len();
    labels.extend([BasisLabel::Eps, BasisLabel::F1, BasisLabel::F2]);
    let n = labels.len();
    let (e, f1, f2) = (chains, chains + 1, chains + 2);
    let mut gram = vec![vec![0i64; n]; n];
    let mut k = 0;
    for &a in &sig.alphas {
        for step in 1..a as usize {
            gram[k][k] = -2;
            let prev = if step == 1 { e } else { k - 1 };
            gram[k][prev] = 1;
            gram[prev][k] = 1;
            k += 1;
        }
    }
    gram[e][e] = 2 * sig.g as i64 - 2;
    gram[f1][f2] = 1;
    gram[f2][f1] = 1;
    Lattice { gram, labels }
}

/// The maps built from lattice vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsometryKind {
    /// `x -> x - (2 <x, d> / <d, d>) d` for `<d, d> = +-2`.
    Reflection(Vec<i64>),
    /// `x -> x + <x,f> w - <x,w> f - 1/2 <w,w> <x,f> f` for isotropic `f`.
    EichlerSiegel { f: Vec<i64>, w: Vec<i64> },
    /// `x -> x - <x, v> u`; not an isometry in general.
    PseudoReflection { u: Vec<i64>, v: Vec<i64> },
}

fn sparse(v: &[i64]) -> SparseVec {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
}

/// Rank-one factors whose product, rightmost first, is the map.
pub fn rank_one_factors(lat: &Lattice, kind: &IsometryKind) -> Result<Vec<RankOneFactor>> {
    match kind {
        IsometryKind::Reflection(d) => {
            let dd = lat.pair(d, d);
            if dd != 2 && dd != -2 {
                return Err(Error::Precondition(format!("reflection vector has norm {dd}")));
            }
            let w: Vec<i64> = lat.dual_of(d).iter().map(|x| x * 2 / dd).collect();
            Ok(vec![RankOneFactor { u: sparse(d), w: sparse(&w) }])
        }
        IsometryKind::PseudoReflection { u, v } => Ok(vec![RankOneFactor { u: sparse(u), w: sparse(&lat.dual_of(v)) }]),
        IsometryKind::EichlerSiegel { f, w } => {
            check_eichler_siegel(lat, f, w)?;
            let half = lat.pair(w, w) / 2;
            let tilde: Vec<i64> = f.iter().zip(w).map(|(a, b)| half * a - b).collect();
            Ok(vec![
                RankOneFactor { u: sparse(&tilde), w: sparse(&lat.dual_of(f)) },
                RankOneFactor { u: sparse(f), w: sparse(&lat.dual_of(w)) },
            ])
        }
    }
}

fn check_eichler_siegel(lat: &Lattice, f: &[i64], w: &[i64]) -> Result<()> {
    if lat.pair(f, f) != 0 {
        return Err(Error::Precondition("Eichler-Siegel vector f is not isotropic".into()));
    }
    if lat.pair(w, w) % 2 != 0 {
        return Err(Error::Precondition("Eichler-Siegel vector w has odd norm".into()));
    }
    Ok(())
}

/// The matrix of the map, Gram-checked unless it is a pseudo-reflection.
pub fn elementary_isometry(lat: &Lattice, kind: &IsometryKind) -> Result<IntMatrix> {
    let n = lat.rank();
    let m = match kind {
        IsometryKind::EichlerSiegel { f, w } => {
            check_eichler_siegel(lat, f, w)?;
            let (gf, gw) = (lat.dual_of(f), lat.dual_of(w));
            let half = lat.pair(w, w) / 2;
            let mut m = IntMatrix::identity(n);
            for i in 0..n {
                for j in 0..n {
                    let delta = w[i] * gf[j] - f[i] * gw[j] - half * f[i] * gf[j];
                    if delta != 0 {
                        let v = m.get(i, j) + BigInt::from(delta);
                        m.set(i, j, v);
                    }
                }
            }
            m
        }
        _ => product_matrix(n, &rank_one_factors(lat, kind)?),
    };
    if !matches!(kind, IsometryKind::PseudoReflection { .. }) && !lat.preserves(&m) {
        return Err(Error::Convention("constructed map does not preserve the Gram matrix".into()));
    }
    Ok(m)
}

/// The factors of `c_inf`: chain reflections, `psi_{f1, eps}`, then `s_{f1 - f2}`.
pub fn coxeter_factors(lat: &Lattice) -> Vec<RankOneFactor> {
    let n = lat.rank();
    let (e, f1, f2) = (lat.eps(), lat.f1(), lat.f2());
    let mut out = Vec::with_capacity(n);
    for (k, label) in lat.labels.iter().enumerate() {
        if let BasisLabel::Chain { .. } = label {
            let w: Vec<(usize, i64)> =
                lat.gram[k].iter().enumerate().filter(|(_, &g)| g != 0).map(|(j, &g)| (j, -g)).collect();
            out.push(RankOneFactor { u: vec![(k, 1)], w });
        }
    }
    let eps_vec = lat.basis_vector(e);
    let f1_vec = lat.basis_vector(f1);
    let psi = IsometryKind::EichlerSiegel { f: f1_vec, w: eps_vec };
    out.extend(rank_one_factors(lat, &psi).expect("f1 is isotropic and eps has even norm"));
    let mut d = vec![0; n];
    d[f1] = 1;
    d[f2] = -1;
    out.extend(rank_one_factors(lat, &IsometryKind::Reflection(d)).expect("f1 - f2 has norm -2"));
    out
}

/// `c_inf` as a matrix and its characteristic polynomial.
pub fn coxeter_infinity(sig: &FuchsianSignature) -> (IntMatrix, IntPolynomial) {
    let lat = build_fuchsian_lattice(sig);
    let factors = coxeter_factors(&lat);
    let n = lat.rank();
    (product_matrix(n, &factors), charpoly_of_product(n, &factors))
}

/// Only the characteristic polynomial of `c_inf`, skipping the matrix.
pub fn coxeter_infinity_charpoly(sig: &FuchsianSignature) -> IntPolynomial {
    let lat = build_fuchsian_lattice(sig);
    charpoly_of_product(lat.rank(), &coxeter_factors(&lat))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdeType {
    A,
    D,
    E,
}

impl AdeType {
    pub fn letter(self) -> char {
        match self {
            AdeType::A => 'A',
            AdeType::D => 'D',
            AdeType::E => 'E',
        }
    }
}

/// Dynkin edges with vertices `0..rank`.
fn dynkin_edges(ty: AdeType, rank: usize) -> Result<Vec<(usize, usize)>> {
    let ok = match ty {
        AdeType::A => rank >= 1,
        AdeType::D => rank >= 4,
        AdeType::E => (6..=8).contains(&rank),
    };
    if !ok {
        return Err(Error::InvalidRank(ty.letter(), rank));
    }
    let path_len = match ty {
        AdeType::A => rank,
        _ => rank - 1,
    };
    let mut edges: Vec<(usize, usize)> = (1..path_len).map(|i| (i - 1, i)).collect();
    match ty {
        AdeType::A => {}
        AdeType::D => edges.push((rank - 3, rank - 1)),
        AdeType::E => edges.push((2, rank - 1)),
    }
    Ok(edges)
}

/// The negative definite root lattice.
pub fn root_lattice(ty: AdeType, rank: usize) -> Result<Lattice> {
    let mut gram = vec![vec![0i64; rank]; rank];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (a, b) in dynkin_edges(ty, rank)? {
        gram[a][b] = 1;
        gram[b][a] = 1;
    }
    let labels = (0..rank).map(|step| BasisLabel::Chain { arm: 0, step: step + 1 }).collect();
    Lattice::new(gram, labels)
}

/// Frame shape of the Coxeter element of a root system.
pub fn ade_coxeter(ty: AdeType, rank: usize) -> Result<FrameShape> {
    let lat = root_lattice(ty, rank)?;
    let factors: Vec<RankOneFactor> = (0..rank)
        .map(|k| RankOneFactor {
            u: vec![(k, 1)],
            w: sparse(&lat.dual_of(&lat.basis_vector(k)).iter().map(|x| -x).collect::<Vec<_>>()),
        })
        .collect();
    FrameShape::from_polynomial(&charpoly_of_product(rank, &factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::phi_a;
    use num_traits::Zero;

    fn sig(s: &str) -> FuchsianSignature {
        s.parse().unwrap()
    }

    #[test]
    fn gram_shapes() {
        let lat = build_fuchsian_lattice(&sig("0;2,3,7"));
        assert_eq!(lat.rank(), 12);
        let diag: Vec<i64> = (0..12).map(|i| lat.gram()[i][i]).collect();
        assert_eq!(diag, [vec![-2; 10], vec![0, 0]].concat());
        let lat = build_fuchsian_lattice(&sig("2;"));
        assert_eq!(lat.gram(), &[vec![2, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]);
        let lat = build_fuchsian_lattice(&sig("1;5"));
        assert_eq!(lat.rank(), 7);
        assert_eq!(lat.gram()[4][4], 0);
        assert_eq!(lat.gram()[0][4], 1);
    }

    #[test]
    fn reflection_negates_root() {
        let lat = build_fuchsian_lattice(&sig("0;2,3,7"));
        let d = lat.basis_vector(3);
        let m = elementary_isometry(&lat, &IsometryKind::Reflection(d.clone())).unwrap();
        let img = m.mul_vec(&d.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        assert_eq!(img, d.iter().map(|&x| BigInt::from(-x)).collect::<Vec<_>>());
    }

    #[test]
    fn eichler_siegel_on_f2() {
        let lat = build_fuchsian_lattice(&sig("0;2,3,7"));
        let (e, f1, f2) = (9, 10, 11);
        let kind = IsometryKind::EichlerSiegel { f: lat.basis_vector(f1), w: lat.basis_vector(e) };
        let m = elementary_isometry(&lat, &kind).unwrap();
        // f2 -> f2 + eps + f1, f1 fixed
        let col = |j: usize| (0..12).map(|i| m.get(i, j).clone()).collect::<Vec<_>>();
        let mut expect = vec![BigInt::zero(); 12];
        expect[e] = 1.into();
        expect[f1] = 1.into();
        expect[f2] = 1.into();
        assert_eq!(col(f2), expect);
        let mut fixed = vec![BigInt::zero(); 12];
        fixed[f1] = 1.into();
        assert_eq!(col(f1), fixed);
    }

    #[test]
    fn eichler_siegel_is_two_pseudo_reflections() {
        for s in ["0;2,3,7", "2;", "1;2,5"] {
            let lat = build_fuchsian_lattice(&sig(s));
            let n = lat.rank();
            let (e, f1) = (n - 3, n - 2);
            let kind = IsometryKind::EichlerSiegel { f: lat.basis_vector(f1), w: lat.basis_vector(e) };
            let direct = elementary_isometry(&lat, &kind).unwrap();
            let split = product_matrix(n, &rank_one_factors(&lat, &kind).unwrap());
            assert_eq!(direct, split, "{s}");
        }
    }

    #[test]
    fn genus_zero_psi_is_a_reflection_pair() {
        let lat = build_fuchsian_lattice(&sig("0;2,3,7"));
        let (e, f1) = (9, 10);
        let psi =
            elementary_isometry(&lat, &IsometryKind::EichlerSiegel { f: lat.basis_vector(f1), w: lat.basis_vector(e) })
                .unwrap();
        let eps = lat.basis_vector(e);
        let mut d = eps.clone();
        d[f1] = -1;
        let s_e = elementary_isometry(&lat, &IsometryKind::Reflection(eps)).unwrap();
        let s_d = elementary_isometry(&lat, &IsometryKind::Reflection(d)).unwrap();
        assert_eq!(psi, &s_e * &s_d);
    }

    #[test]
    fn small_coxeter_elements() {
        for (s, expect) in [("2;", "1 + t^3"), ("3;", "1 + t + t^2 + t^3")] {
            let (m, cp) = coxeter_infinity(&sig(s));
            assert_eq!(cp.to_string(), expect);
            assert_eq!(m.charpoly(), cp);
        }
        for s in ["0;2,3,7", "1;2", "3;2,5", "0;2,2,2,2,2", "4;3,13"] {
            let sg = sig(s);
            let (m, cp) = coxeter_infinity(&sg);
            assert_eq!(cp, phi_a(&sg).unwrap(), "{s}");
            assert_eq!(m.charpoly(), cp, "{s}");
            assert!(build_fuchsian_lattice(&sg).preserves(&m));
        }
    }

    #[test]
    fn ade_shapes() {
        let cases = [
            (AdeType::A, 1, "2/1"),
            (AdeType::A, 4, "5/1"),
            (AdeType::D, 4, "2·6/1·3"),
            (AdeType::D, 24, "2·46/1·23"),
            (AdeType::E, 6, "2·3·12/1·4·6"),
            (AdeType::E, 7, "2·3·18/1·6·9"),
            (AdeType::E, 8, "2·3·5·30/1·6·10·15"),
        ];
        for (ty, l, shape) in cases {
            assert_eq!(ade_coxeter(ty, l).unwrap().to_string(), shape, "{ty:?}{l}");
        }
        assert!(ade_coxeter(AdeType::E, 9).is_err());
        assert!(ade_coxeter(AdeType::D, 3).is_err());
    }
}
