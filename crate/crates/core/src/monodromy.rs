//! Characteristic polynomials of the classical monodromy.
//!
//! Hypersurfaces use the Milnor-Orlik divisor calculus, independent of any
//! Poincaré series. Complete intersections recover `phi_M` from the dual of the
//! transformed `phi_A` by undoing the matching `phi_M^b` correction.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::catalog::SingularityRecord;
use crate::cyclo::FrameShape;
use crate::error::{Error, Result};
use crate::graded::{phi_m_from_b, TheoremCase, WeightSystem};

/// `sum c_a Lambda_a` with `Lambda_a Lambda_b = gcd(a, b) Lambda_lcm(a, b)`;
/// `Lambda_a` is the divisor of `t^a - 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisorElement {
    terms: BTreeMap<u64, Ratio<i64>>,
}

impl DivisorElement {
    pub fn lambda(a: u64, c: Ratio<i64>) -> Self {
        let mut d = Self::default();
        d.add_term(a, c);
        d
    }

    /// `Lambda_1`, the multiplicative identity.
    pub fn one() -> Self {
        Self::lambda(1, Ratio::one())
    }

    fn add_term(&mut self, a: u64, c: Ratio<i64>) {
        let slot = self.terms.entry(a).or_insert_with(Ratio::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&a, &c) in &rhs.terms {
            out.add_term(a, c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (&a, &c) in &self.terms {
            for (&b, &d) in &rhs.terms {
                let g = a.gcd(&b) as i64;
                out.add_term(a.lcm(&b), c * d * Ratio::from_integer(g));
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, Ratio<i64>)> + '_ {
        self.terms.iter().map(|(&a, &c)| (a, c))
    }

    /// Degree of the divisor, `sum a c_a`.
    pub fn degree(&self) -> Ratio<i64> {
        self.terms().map(|(a, c)| c * Ratio::from_integer(a as i64)).sum()
    }

    /// The frame shape `prod (1 - t^a)^{c_a}`, when every coefficient is integral.
    pub fn to_frame_shape(&self) -> Result<FrameShape> {
        let mut pairs = Vec::new();
        for (a, c) in self.terms() {
            if !c.is_integer() {
                return Err(Error::Convention(format!("coefficient {c} of Lambda_{a} is not integral")));
            }
            pairs.push((a, c.to_integer()));
        }
        Ok(FrameShape::from_pairs(pairs))
    }
}

impl fmt::Display for DivisorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(a, c)| format!("{c}L{a}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `prod_i (Lambda_{u_i} / v_i - 1)` with `d / q_i = u_i / v_i` in lowest terms.
pub fn milnor_orlik_divisor(ws: &WeightSystem) -> Result<DivisorElement> {
    let [d] = ws.degrees[..] else {
        return Err(Error::InvalidWeights("Milnor-Orlik needs a single degree".into()));
    };
    let mut acc = DivisorElement::one();
    for &q in &ws.weights {
        if q >= d {
            return Err(Error::InvalidWeights(format!("weight {q} is not below the degree {d}")));
        }
        let g = d.gcd(&q);
        let (u, v) = (d / g, q / g);
        let factor = DivisorElement::lambda(u, Ratio::new(1, v as i64)).add(&DivisorElement::lambda(1, -Ratio::one()));
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

pub fn milnor_orlik(ws: &WeightSystem) -> Result<FrameShape> {
    milnor_orlik_divisor(ws)?.to_frame_shape()
}

/// `prod (d - q_i) / q_i`.
pub fn milnor_number_hypersurface(ws: &WeightSystem) -> Result<u64> {
    let [d] = ws.degrees[..] else {
        return Err(Error::InvalidWeights("not a hypersurface".into()));
    };
    let mu = ws.weights.iter().fold(Ratio::<i64>::one(), |acc, &q| acc * Ratio::new(d as i64 - q as i64, q as i64));
    if !mu.is_integer() || mu.to_integer() <= 0 {
        return Err(Error::InvalidWeights(format!("Milnor number {mu} is not a positive integer")));
    }
    Ok(mu.to_integer() as u64)
}

/// `phi_M` of a catalog record.
pub fn phi_m_of_record(rec: &SingularityRecord) -> Result<FrameShape> {
    match rec.case.case {
        TheoremCase::T1 => milnor_orlik(&rec.weights),
        TheoremCase::Special5nh | TheoremCase::PfaffianNote => Ok(genus5_phi_m()),
        TheoremCase::Unassigned => Err(Error::MissingCase(rec.display_name())),
        _ => {
            let b = rec.tilde_phi_a()?.dual();
            let m = phi_m_from_b(&b, &rec.case)?;
            if !m.is_polynomial() {
                return Err(Error::Convention(format!(
                    "recovered phi_M {m} of {} is not a polynomial",
                    rec.display_name()
                )));
            }
            Ok(m)
        }
    }
}

/// `(1 - t^2)^16 / (1 - t)` for the genus-5 rows.
pub fn genus5_phi_m() -> FrameShape {
    FrameShape::from_pairs([(2, 16), (1, -1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(s: &str) -> WeightSystem {
        s.parse().unwrap()
    }

    #[test]
    fn e12_expansion() {
        // (L7 - 1)(L3 - 1)(L2 - 1) = L42 - L21 - L14 + L7 - L6 + L3 + L2 - L1
        let d = milnor_orlik_divisor(&ws("6,14,21/42")).unwrap();
        let expect: Vec<(u64, i64)> = vec![(1, -1), (2, 1), (3, 1), (6, -1), (7, 1), (14, -1), (21, -1), (42, 1)];
        let got: Vec<(u64, i64)> = d.terms().map(|(a, c)| (a, c.to_integer())).collect();
        assert_eq!(got, expect);
        let fs = milnor_orlik(&ws("6,14,21/42")).unwrap();
        assert_eq!(fs.to_string(), "2·3·7·42/1·6·14·21");
        assert_eq!(fs.degree(), 12);
    }

    #[test]
    fn a1_quadric() {
        let fs = milnor_orlik(&ws("1,1,1/2")).unwrap();
        assert_eq!(fs.to_string(), "2/1");
        assert_eq!(milnor_number_hypersurface(&ws("1,1,1/2")).unwrap(), 1);
    }

    #[test]
    fn s12_degree() {
        let fs = milnor_orlik(&ws("3,4,5/13")).unwrap();
        assert_eq!(fs.degree(), 12);
        assert_eq!(fs.to_string(), "13/1");
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(milnor_number_hypersurface(&ws("6,14,21/42")).unwrap(), 12);
        assert_eq!(milnor_number_hypersurface(&ws("3,4,5/13")).unwrap(), 12);
        assert_eq!(milnor_number_hypersurface(&ws("1,1,3/6")).unwrap(), 25);
        assert!(milnor_number_hypersurface(&ws("2,3,4,5/7,8")).is_err());
    }

    #[test]
    fn rejects_weights_at_degree() {
        assert!(milnor_orlik(&ws("1,2,6/6")).is_err());
    }
}
