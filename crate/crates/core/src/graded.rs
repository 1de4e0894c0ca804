//! Poincaré series of graded surface singularities and the polynomials built
//! from them: `psi_A`, `phi_A`, the transformed `phi_A` of the ICIS theorems,
//! and the matching adjustment of the monodromy symbol.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;

use crate::cyclo::FrameShape;
use crate::error::{Error, Result};
use crate::exactalg::{IntPolynomial, PowerSeries, RationalFunction};

/// `{g; alpha_1, ..., alpha_r}` with the alphas sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuchsianSignature {
    pub g: u32,
    pub alphas: Vec<u64>,
}

/// Hyperelliptic or non-hyperelliptic variant of a genus `>= 3` signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Hyperelliptic,
    NonHyperelliptic,
}

impl Variant {
    pub fn tag(self) -> &'static str {
        match self {
            Variant::Hyperelliptic => "h",
            Variant::NonHyperelliptic => "nh",
        }
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h" => Ok(Variant::Hyperelliptic),
            "nh" => Ok(Variant::NonHyperelliptic),
            _ => Err(Error::Parse(format!("variant {s:?}"))),
        }
    }
}

impl FuchsianSignature {
    pub fn new(g: u32, mut alphas: Vec<u64>) -> Result<Self> {
        if alphas.iter().any(|&a| a < 2) {
            return Err(Error::Precondition("every alpha must be at least 2".into()));
        }
        alphas.sort_unstable();
        Ok(Self { g, alphas })
    }

    pub fn r(&self) -> usize {
        self.alphas.len()
    }

    /// `sum (alpha_i - 1) + 3`, the rank of the lattice `M_inf + U`.
    pub fn rank(&self) -> usize {
        self.alphas.iter().map(|&a| a as usize - 1).sum::<usize>() + 3
    }

    /// `{g; 2g - 2 + r; (alpha_i, 1)}`.
    pub fn orbit_invariants(&self) -> OrbitInvariants {
        OrbitInvariants {
            g: self.g,
            b: 2 * self.g as i64 - 2 + self.r() as i64,
            pairs: self.alphas.iter().map(|&a| (a, 1)).collect(),
        }
    }

    /// Parses `g;a1,...,ar` with an optional `(h)`/`(nh)` or bare `h`/`nh` suffix.
    pub fn parse_with_variant(s: &str) -> Result<(Self, Option<Variant>)> {
        let bad = || Error::Parse(format!("signature {s:?}"));
        let s = s.trim();
        let (body, variant) = if let Some(rest) = s.strip_suffix("(nh)").or_else(|| s.strip_suffix("nh")) {
            (rest, Some(Variant::NonHyperelliptic))
        } else if let Some(rest) = s.strip_suffix("(h)").or_else(|| s.strip_suffix('h')) {
            (rest, Some(Variant::Hyperelliptic))
        } else {
            (s, None)
        };
        let body = body.trim().trim_start_matches('{').trim_end_matches('}');
        let (g, rest) = body.split_once(';').ok_or_else(bad)?;
        let g = g.trim().parse::<u32>().map_err(|_| bad())?;
        let alphas = rest
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok((Self::new(g, alphas)?, variant))
    }
}

impl fmt::Display for FuchsianSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alphas.iter().map(u64::to_string).collect();
        write!(f, "{};{}", self.g, a.join(","))
    }
}

impl FromStr for FuchsianSignature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with_variant(s).map(|(sig, _)| sig)
    }
}

/// `{g; b; (alpha_i, beta_i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitInvariants {
    pub g: u32,
    pub b: i64,
    pub pairs: Vec<(u64, u64)>,
}

impl OrbitInvariants {
    pub fn new(g: u32, b: i64, mut pairs: Vec<(u64, u64)>) -> Result<Self> {
        for &(a, beta) in &pairs {
            if beta == 0 || beta >= a || a.gcd(&beta) != 1 {
                return Err(Error::Precondition(format!("invalid pair ({a}, {beta})")));
            }
        }
        pairs.sort_unstable();
        Ok(Self { g, b, pairs })
    }

    pub fn r(&self) -> usize {
        self.pairs.len()
    }
}

/// Weights `q_1..q_n` and degrees `d_1..d_{n-2}` of a weighted complete intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    pub weights: Vec<u64>,
    pub degrees: Vec<u64>,
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>, degrees: Vec<u64>) -> Result<Self> {
        if weights.len() < 3 || degrees.len() + 2 != weights.len() {
            return Err(Error::InvalidWeights(format!(
                "{} weights need {} degrees, got {}",
                weights.len(),
                weights.len().saturating_sub(2),
                degrees.len()
            )));
        }
        if weights.iter().chain(&degrees).any(|&x| x == 0) {
            return Err(Error::InvalidWeights("weights and degrees must be positive".into()));
        }
        Ok(Self { weights, degrees })
    }

    pub fn is_hypersurface(&self) -> bool {
        self.degrees.len() == 1
    }

    /// `prod (1 - t^{d_i}) / prod (1 - t^{q_j})` as a frame shape.
    pub fn frame_shape(&self) -> FrameShape {
        FrameShape::from_pairs(self.degrees.iter().map(|&d| (d, 1)).chain(self.weights.iter().map(|&q| (q, -1))))
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        let d: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        write!(f, "{}/{}", w.join(","), d.join(","))
    }
}

impl FromStr for WeightSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (w, d) = s.split_once('/').ok_or_else(|| Error::Parse(format!("weight system {s:?}")))?;
        Self::new(parse_list(w)?, parse_list(d)?)
    }
}

pub fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("integer list {s:?}"))))
        .collect()
}

fn one_minus(m: u64) -> IntPolynomial {
    IntPolynomial::one_minus_t_pow(m as usize)
}

/// `p_A` from weights and degrees, with its frame shape.
pub fn poincare_from_weights(ws: &WeightSystem) -> (RationalFunction, FrameShape) {
    let fs = ws.frame_shape();
    (fs.to_rational(), fs)
}

/// Numerator of the closed Fuchsian formula over `(1 - t)^2 prod (1 - t^{alpha_i})`.
fn fuchsian_numerator(sig: &FuchsianSignature) -> IntPolynomial {
    let g = sig.g as i64;
    let head = IntPolynomial::from_i64(&[1, g - 2, g - 2, 1]);
    let all: IntPolynomial = sig.alphas.iter().fold(IntPolynomial::one(), |acc, &a| &acc * &one_minus(a));
    let mut num = &head * &all;
    let t2 = IntPolynomial::monomial(1.into(), 2);
    for i in 0..sig.r() {
        let others = sig
            .alphas
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(IntPolynomial::one(), |acc, (_, &a)| &acc * &one_minus(a));
        let term = &(&t2 * &one_minus(sig.alphas[i] - 1)) * &others;
        num = &num + &term;
    }
    num
}

fn fuchsian_denominator(sig: &FuchsianSignature) -> IntPolynomial {
    sig.alphas.iter().fold(one_minus(1).pow(2), |acc, &a| &acc * &one_minus(a))
}

/// `p_A` of the Fuchsian singularity with signature `sig`.
pub fn poincare_fuchsian(sig: &FuchsianSignature) -> RationalFunction {
    RationalFunction::new(fuchsian_numerator(sig), fuchsian_denominator(sig)).expect("denominator is nonzero")
}

/// Genus-zero Riemann-Roch: coefficient `k` is
/// `max(0, k(b - r) + sum floor(k(alpha_i - beta_i)/alpha_i) + 1)`.
pub fn poincare_orbit_g0(oi: &OrbitInvariants, n: usize) -> Result<PowerSeries> {
    if oi.g != 0 {
        return Err(Error::GenusNotZero);
    }
    let r = oi.r() as i64;
    let coeffs = (0..=n as i64)
        .map(|k| {
            let frac: i64 = oi
                .pairs
                .iter()
                .map(|&(a, beta)| Integer::div_floor(&(k * (a as i64 - beta as i64)), &(a as i64)))
                .sum();
            BigInt::from((k * (oi.b - r) + frac + 1).max(0))
        })
        .collect();
    Ok(PowerSeries::new(n, coeffs))
}

/// `(1 - t)^{2 - r} prod (1 - t^{alpha_i})`.
pub fn psi_a(alphas: &[u64]) -> FrameShape {
    FrameShape::from_pairs(std::iter::once((1, 2 - alphas.len() as i64)).chain(alphas.iter().map(|&a| (a, 1))))
}

/// `phi_A = p_A psi_A` for a Fuchsian signature, expanded.
pub fn phi_a(sig: &FuchsianSignature) -> Result<IntPolynomial> {
    // p_A psi_A = numerator / (1 - t)^r
    let num = fuchsian_numerator(sig);
    let den = one_minus(1).pow(sig.r() as u32);
    num.div_exact(&den).map_err(|_| Error::Precondition(format!("p_A psi_A is not a polynomial for {sig}")))
}

pub fn psi_phi(sig: &FuchsianSignature) -> Result<(FrameShape, IntPolynomial)> {
    Ok((psi_a(&sig.alphas), phi_a(sig)?))
}

/// Which transformation rule relates `phi_A` to the monodromy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremCase {
    /// Hypersurfaces.
    T1,
    /// One quadric `xw + yz`-type equation.
    T2,
    T3A,
    T3B,
    /// The genus-5 hyperelliptic row, which takes the three-quadric data.
    Special5nh,
    /// Three quadrics in five variables.
    PfaffianNote,
    /// No rule applies.
    Unassigned,
}

impl TheoremCase {
    pub fn tag(self) -> &'static str {
        match self {
            TheoremCase::T1 => "T1",
            TheoremCase::T2 => "T2",
            TheoremCase::T3A => "T3A",
            TheoremCase::T3B => "T3B",
            TheoremCase::Special5nh => "SPECIAL_5NH",
            TheoremCase::PfaffianNote => "PFAFFIAN_NOTE",
            TheoremCase::Unassigned => "NONE",
        }
    }

    fn is_genus5(self) -> bool {
        matches!(self, TheoremCase::Special5nh | TheoremCase::PfaffianNote)
    }
}

impl FromStr for TheoremCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "T1" => TheoremCase::T1,
            "T2" => TheoremCase::T2,
            "T3A" => TheoremCase::T3A,
            "T3B" => TheoremCase::T3B,
            "SPECIAL_5NH" => TheoremCase::Special5nh,
            "PFAFFIAN_NOTE" => TheoremCase::PfaffianNote,
            "NONE" => TheoremCase::Unassigned,
            _ => return Err(Error::Parse(format!("theorem case {s:?}"))),
        })
    }
}

/// Rule plus the parameters it reads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseData {
    pub case: TheoremCase,
    pub g: u32,
    pub d1: u64,
    pub d2: u64,
    pub p: u64,
    pub q: u64,
}

fn genus5_tilde() -> FrameShape {
    FrameShape::from_pairs([(2, 8), (1, -16)])
}

/// The transformed `phi_A` whose dual is `phi_M^b`.
pub fn tilde_phi_a(phi_a: &FrameShape, data: &CaseData) -> Result<FrameShape> {
    let base = phi_a.mul(&FrameShape::factor(1, -2 * data.g as i64));
    let (d1, d2, p, q) = (data.d1, data.d2, data.p as i64, data.q);
    match data.case {
        TheoremCase::T1 => Ok(base),
        TheoremCase::T2 => Ok(base.mul(&FrameShape::from_pairs([(d2, 1), (d1, -1)]))),
        TheoremCase::T3A | TheoremCase::T3B => {
            if d1 % q != 0 || d2 % q != 0 || d2 % data.p != 0 {
                return Err(Error::Precondition(format!(
                    "case parameters p={p}, q={q} do not divide d1={d1}, d2={d2}"
                )));
            }
            Ok(base.mul(&FrameShape::from_pairs([(d2, p - 1), (d1 / q, 1), (d2 / data.p, 1), (d1, -1), (d2 / q, -p)])))
        }
        c if c.is_genus5() => Ok(genus5_tilde()),
        _ => Err(Error::MissingCase(c_tag(data))),
    }
}

fn c_tag(data: &CaseData) -> String {
    format!("case {}", data.case.tag())
}

/// The correction `phi_M^b / phi_M` of each rule.
fn b_correction(data: &CaseData) -> Result<FrameShape> {
    let (p, q) = (data.p, data.q);
    match data.case {
        TheoremCase::T1 => Ok(FrameShape::one()),
        TheoremCase::T2 => Ok(FrameShape::factor(1, -1)),
        TheoremCase::T3A | TheoremCase::T3B => {
            let (g, l) = (p.gcd(&q), p.lcm(&q));
            Ok(FrameShape::from_pairs([(q, p as i64), (1, -(p as i64 - 1)), (l, -(g as i64))]))
        }
        c if c.is_genus5() => Ok(FrameShape::factor(1, -7)),
        _ => Err(Error::MissingCase(c_tag(data))),
    }
}

/// `phi_M^b` from `phi_M`.
pub fn phi_m_b_rule(phi_m: &FrameShape, data: &CaseData) -> Result<FrameShape> {
    Ok(phi_m.mul(&b_correction(data)?))
}

/// `phi_M` from `phi_M^b`, inverting [`phi_m_b_rule`].
pub fn phi_m_from_b(phi_m_b: &FrameShape, data: &CaseData) -> Result<FrameShape> {
    Ok(phi_m_b.div(&b_correction(data)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    pub betas: Vec<u64>,
    pub vdeg: Ratio<i64>,
    pub ok: bool,
}

/// `beta_i = R^{-1} mod alpha_i`, `vdeg = -b + sum beta_i / alpha_i`, and the
/// check `R vdeg = 2 - 2g - r + sum 1/alpha_i`.
pub fn gorenstein_check(g: u32, alphas: &[u64], b: i64, r_exp: u64) -> Result<GorensteinReport> {
    let mut betas = Vec::with_capacity(alphas.len());
    for &a in alphas {
        let ext = (r_exp as i64).extended_gcd(&(a as i64));
        if ext.gcd != 1 {
            return Err(Error::NoValidBeta(a));
        }
        let beta = ext.x.rem_euclid(a as i64) as u64;
        // alpha = 1 would give beta = 0; alphas here are at least 2
        betas.push(beta);
    }
    let vdeg = alphas
        .iter()
        .zip(&betas)
        .fold(Ratio::from_integer(-b), |acc, (&a, &beta)| acc + Ratio::new(beta as i64, a as i64));
    let rhs = alphas
        .iter()
        .fold(Ratio::from_integer(2 - 2 * g as i64 - alphas.len() as i64), |acc, &a| acc + Ratio::new(1, a as i64));
    let ok = vdeg * Ratio::from_integer(r_exp as i64) == rhs;
    Ok(GorensteinReport { betas, vdeg, ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::series_expand;

    fn sig(s: &str) -> FuchsianSignature {
        s.parse().unwrap()
    }

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn signature_text() {
        let (s, v) = FuchsianSignature::parse_with_variant("3;2(h)").unwrap();
        assert_eq!((s.g, s.alphas.clone(), v), (3, vec![2], Some(Variant::Hyperelliptic)));
        let (s, v) = FuchsianSignature::parse_with_variant("{5;}nh").unwrap();
        assert_eq!((s.to_string(), v), ("5;".to_string(), Some(Variant::NonHyperelliptic)));
        assert_eq!(sig("0;7,3,2").to_string(), "0;2,3,7");
        assert!("0;1,3".parse::<FuchsianSignature>().is_err());
        assert!("x;2".parse::<FuchsianSignature>().is_err());
    }

    #[test]
    fn weight_system_text() {
        let ws: WeightSystem = "6,14,21/42".parse().unwrap();
        assert_eq!(ws.to_string(), "6,14,21/42");
        assert!("1,2,3/4,5".parse::<WeightSystem>().is_err());
    }

    #[test]
    fn weights_formula() {
        let (rf, fs) = poincare_from_weights(&"6,14,21/42".parse().unwrap());
        assert_eq!(fs.to_string(), "42/6·14·21");
        let s = series_expand(&rf, 14).unwrap();
        assert_eq!(ints(&s), vec![1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1]);
        let (rf, _) = poincare_from_weights(&"1,1,3/6".parse().unwrap());
        assert_eq!(ints(&series_expand(&rf, 5).unwrap()), vec![1, 2, 3, 5, 7, 9]);
        let (rf, _) = poincare_from_weights(&"4,4,4/4".parse().unwrap());
        assert_eq!(rf, FrameShape::factor(4, -2).to_rational());
    }

    #[test]
    fn fuchsian_formula() {
        let rf = poincare_fuchsian(&sig("2;"));
        let expect =
            RationalFunction::new(IntPolynomial::from_i64(&[1, 0, 0, 1]), IntPolynomial::from_i64(&[1, -2, 1]))
                .unwrap();
        assert_eq!(rf, expect);
        let e12 = poincare_fuchsian(&sig("0;2,3,7"));
        let (w, _) = poincare_from_weights(&"6,14,21/42".parse().unwrap());
        assert_eq!(e12, w);
    }

    #[test]
    fn orbit_formula() {
        let u24 = OrbitInvariants::new(0, 1, vec![(7, 2), (7, 2), (7, 2)]).unwrap();
        let (w, _) = poincare_from_weights(&"3,7,7/21".parse().unwrap());
        assert_eq!(poincare_orbit_g0(&u24, 256).unwrap(), series_expand(&w, 256).unwrap());
        let trivial = OrbitInvariants::new(0, 0, vec![]).unwrap();
        assert_eq!(ints(&poincare_orbit_g0(&trivial, 4).unwrap()), vec![1; 5]);
        let g1 = OrbitInvariants::new(1, 1, vec![(2, 1)]).unwrap();
        assert_eq!(poincare_orbit_g0(&g1, 4), Err(Error::GenusNotZero));
        assert!(OrbitInvariants::new(0, 1, vec![(4, 2)]).is_err());
    }

    #[test]
    fn psi_and_phi() {
        let (psi, phi) = psi_phi(&sig("0;2,3,7")).unwrap();
        assert_eq!(psi.to_string(), "2·3·7/1");
        assert_eq!(phi, "2·3·7·42/1·6·14·21".parse::<FrameShape>().unwrap().to_polynomial().unwrap());
        let (psi, phi) = psi_phi(&sig("2;")).unwrap();
        assert_eq!(psi.to_string(), "1^2");
        assert_eq!(phi, IntPolynomial::from_i64(&[1, 0, 0, 1]));
        assert_eq!(psi_a(&[2, 2, 2, 2]).to_string(), "2^4/1^2");
    }

    #[test]
    fn theorem_rules() {
        // L_10: signature {0;2,5,7}, weights 4,5,6,7/11,12
        let l10 = CaseData { case: TheoremCase::T2, g: 0, d1: 11, d2: 12, p: 0, q: 0 };
        let phi = psi_a(&[2, 5, 7]).mul(&"11·12/4·5·6·7".parse().unwrap());
        let t = tilde_phi_a(&phi, &l10).unwrap();
        assert_eq!(t.to_string(), "2·12^2/1·4·6");
        let m = "2·3·12/1·6".parse::<FrameShape>().unwrap();
        assert_eq!(phi_m_b_rule(&m, &l10).unwrap().to_string(), "2·3·12/1^2·6");
        assert_eq!(phi_m_from_b(&phi_m_b_rule(&m, &l10).unwrap(), &l10).unwrap(), m);

        let g5 = CaseData { case: TheoremCase::PfaffianNote, g: 5, d1: 0, d2: 0, p: 0, q: 0 };
        assert_eq!(tilde_phi_a(&FrameShape::one(), &g5).unwrap().to_string(), "2^8/1^16");
        let m5 = FrameShape::from_pairs([(2, 16), (1, -1)]);
        assert_eq!(phi_m_b_rule(&m5, &g5).unwrap().to_string(), "2^16/1^8");

        let hyp = CaseData { case: TheoremCase::T1, g: 0, d1: 0, d2: 0, p: 0, q: 0 };
        assert_eq!(phi_m_b_rule(&m, &hyp).unwrap(), m);
        let none = CaseData { case: TheoremCase::Unassigned, ..hyp };
        assert!(tilde_phi_a(&m, &none).is_err());
    }

    #[test]
    fn gorenstein() {
        let u24 = gorenstein_check(0, &[7, 7, 7], 1, 4).unwrap();
        assert_eq!(u24.betas, vec![2, 2, 2]);
        assert_eq!(u24.vdeg, Ratio::new(-1, 7));
        assert!(u24.ok);
        let e12 = gorenstein_check(0, &[2, 3, 7], 1, 1).unwrap();
        assert_eq!((e12.betas.clone(), e12.vdeg, e12.ok), (vec![1, 1, 1], Ratio::new(-1, 42), true));
        assert_eq!(gorenstein_check(0, &[7, 7, 7], 1, 7), Err(Error::NoValidBeta(7)));
    }
}
