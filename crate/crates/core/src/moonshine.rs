//! Self-dual frame shapes of degree 24 and eta products.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;

pub use crate::catalog::Construction;
use crate::catalog::{SingularityRecord, Table5Row};
use crate::cyclo::FrameShape;
use crate::error::Result;
use crate::exactalg::PowerSeries;
use crate::graded::psi_a;
use crate::lattice::{ade_coxeter, AdeType};

/// A symbol produced by one of the constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub construction: Construction,
    pub shape: FrameShape,
    pub realizer: String,
}

/// `pi pi*`, with the dual taken at the order of `pi`.
pub fn times_dual(pi: &FrameShape) -> FrameShape {
    pi.mul(&pi.dual())
}

struct Component {
    name: String,
    shape: FrameShape,
    size: u64,
}

/// Multisets of components of equal order whose sizes add up to `total`.
fn equal_order_sums(parts: &[Component], total: u64) -> Vec<Vec<(usize, u64)>> {
    fn go(
        parts: &[Component],
        start: usize,
        rest: u64,
        order: Option<u64>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for (j, c) in parts.iter().enumerate().skip(start) {
            let o = c.shape.order();
            if c.size > rest || order.is_some_and(|h| h != o) {
                continue;
            }
            cur.push(j);
            go(parts, j, rest - c.size, Some(o), cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    go(parts, 0, total, None, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|choice| {
            let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
            for j in choice {
                *counts.entry(j).or_default() += 1;
            }
            counts.into_iter().collect()
        })
        .collect()
}

fn combine(parts: &[Component], choice: &[(usize, u64)]) -> (FrameShape, String) {
    let mut shape = FrameShape::one();
    let mut names = Vec::new();
    for &(j, k) in choice {
        shape = shape.mul(&parts[j].shape.pow(k as i64));
        names.push(if k > 1 { format!("{}^{k}", parts[j].name) } else { parts[j].name.clone() });
    }
    (shape, names.join(" "))
}

/// Root systems of total rank 24 whose Coxeter elements have equal order.
pub fn construction_a() -> Result<Vec<Realization>> {
    let mut parts = Vec::new();
    let systems = (1..=24)
        .map(|l| (AdeType::A, l))
        .chain((4..=24).map(|l| (AdeType::D, l)))
        .chain((6..=8).map(|l| (AdeType::E, l)));
    for (ty, l) in systems {
        parts.push(Component { name: format!("{}_{l}", ty.letter()), shape: ade_coxeter(ty, l)?, size: l as u64 });
    }
    Ok(equal_order_sums(&parts, 24)
        .iter()
        .map(|choice| {
            let (shape, realizer) = combine(&parts, choice);
            Realization { construction: Construction::A, shape, realizer }
        })
        .collect())
}

/// `psi_A` of the simply-elliptic signatures.
pub fn simply_elliptic_symbols() -> Vec<(&'static str, FrameShape)> {
    vec![
        ("D~_5", psi_a(&[2, 2, 2, 2])),
        ("E~_6", psi_a(&[3, 3, 3])),
        ("E~_7", psi_a(&[2, 4, 4])),
        ("E~_8", psi_a(&[2, 3, 6])),
    ]
}

/// Products of simply-elliptic symbols of equal order and degree 24, paired with the dual.
pub fn construction_c() -> Vec<Realization> {
    let parts: Vec<Component> = simply_elliptic_symbols()
        .into_iter()
        .map(|(name, shape)| {
            let size = shape.degree() as u64;
            Component { name: name.to_string(), shape, size }
        })
        .collect();
    equal_order_sums(&parts, 24)
        .iter()
        .map(|choice| {
            let (pi, realizer) = combine(&parts, choice);
            Realization { construction: Construction::C, shape: times_dual(&pi), realizer }
        })
        .collect()
}

/// Per-record outputs of (b) or (d), keeping failures next to their realizer.
fn record_realizations(kind: Construction, catalog: &[SingularityRecord]) -> Vec<(String, Result<Realization>)> {
    catalog
        .iter()
        .filter(|r| match kind {
            Construction::B => r.table >= 3 && r.flags.b,
            _ => r.table <= 2,
        })
        .map(|r| {
            let shape = r.phi_m_b().map(|b| if kind == Construction::D { times_dual(&b) } else { b });
            let out = shape.map(|shape| Realization { construction: kind, shape, realizer: r.realizer_id() });
            (r.display_name(), out)
        })
        .collect()
}

/// `phi_M^b` of the (b)-flagged rows.
pub fn construction_b(catalog: &[SingularityRecord]) -> Result<Vec<Realization>> {
    record_realizations(Construction::B, catalog).into_iter().map(|(_, r)| r).collect()
}

/// `pi pi*` with `pi = phi_M^b` of every Fuchsian complete intersection.
pub fn construction_d(catalog: &[SingularityRecord]) -> Result<Vec<Realization>> {
    record_realizations(Construction::D, catalog).into_iter().map(|(_, r)| r).collect()
}

/// `pi pi*` with `pi = psi_A` of the (e)-flagged rows.
pub fn construction_e(catalog: &[SingularityRecord]) -> Vec<Realization> {
    catalog
        .iter()
        .filter(|r| r.table >= 3 && r.flags.e)
        .map(|r| Realization {
            construction: Construction::E,
            shape: times_dual(&r.psi_a()),
            realizer: r.realizer_id(),
        })
        .collect()
}

pub fn construction(kind: Construction, catalog: &[SingularityRecord]) -> Result<Vec<Realization>> {
    match kind {
        Construction::A => construction_a(),
        Construction::B => construction_b(catalog),
        Construction::C => Ok(construction_c()),
        Construction::D => construction_d(catalog),
        Construction::E => Ok(construction_e(catalog)),
    }
}

pub type RealizationSets = BTreeMap<Construction, BTreeSet<String>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table5Line {
    pub atlas_label: String,
    pub shape: FrameShape,
    pub expected: RealizationSets,
    pub got: RealizationSets,
}

impl Table5Line {
    pub fn ok(&self) -> bool {
        self.expected == self.got
    }
}

/// Construction letters present in `sets`, or `-`.
pub fn letters(sets: &RealizationSets) -> String {
    if sets.is_empty() {
        return "-".into();
    }
    sets.keys().map(|c| c.letter().to_string()).collect::<Vec<_>>().join(",")
}

fn named(sets: &RealizationSets) -> String {
    sets.iter()
        .map(|(c, names)| format!("({c}) {}", names.iter().cloned().collect::<Vec<_>>().join(" | ")))
        .collect::<Vec<_>>()
        .join("; ")
}

impl fmt::Display for Table5Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} expected={} got={} {}",
            self.atlas_label,
            self.shape,
            letters(&self.expected),
            letters(&self.got),
            if self.ok() { "PASS" } else { "FAIL" }
        )
    }
}

impl Table5Line {
    /// Realizer names on both sides, for diagnosing a failed row.
    pub fn detail(&self) -> String {
        format!("expected: {}\ngot: {}", named(&self.expected), named(&self.got))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table5Report {
    pub lines: Vec<Table5Line>,
    /// Outputs that are not self-dual of degree 24.
    pub malformed: Vec<Realization>,
    /// Outputs that match no row.
    pub unmatched: Vec<Realization>,
    /// Construction failures, by realizer.
    pub errors: Vec<String>,
    pub count_a: usize,
    pub shapes_c: BTreeSet<String>,
}

impl Table5Report {
    pub fn ok(&self) -> bool {
        self.lines.len() == 39
            && self.lines.iter().all(Table5Line::ok)
            && self.malformed.is_empty()
            && self.unmatched.is_empty()
            && self.errors.is_empty()
    }
}

fn is_degree24_self_dual(fs: &FrameShape) -> bool {
    fs.degree() == 24 && fs.is_self_dual()
}

/// Runs all constructions and matches the outputs against the table.
pub fn verify_table5(catalog: &[SingularityRecord], table: &[Table5Row]) -> Table5Report {
    let mut outputs = Vec::new();
    let mut errors = Vec::new();
    let mut count_a = 0;
    match construction_a() {
        Ok(list) => {
            count_a = list.len();
            outputs.extend(list);
        }
        Err(e) => errors.push(format!("(a) {e}")),
    }
    let c = construction_c();
    let shapes_c = c.iter().map(|r| r.shape.to_string()).collect();
    outputs.extend(c);
    for kind in [Construction::B, Construction::D] {
        for (name, out) in record_realizations(kind, catalog) {
            match out {
                Ok(r) => outputs.push(r),
                Err(e) => errors.push(format!("({kind}) {name}: {e}")),
            }
        }
    }
    outputs.extend(construction_e(catalog));

    let mut got: BTreeMap<String, RealizationSets> = BTreeMap::new();
    let mut malformed = Vec::new();
    let mut unmatched = Vec::new();
    for out in outputs {
        if !is_degree24_self_dual(&out.shape) {
            malformed.push(out.clone());
        }
        match table.iter().find(|row| row.frame_shape == out.shape) {
            Some(row) => {
                got.entry(row.atlas_label.clone())
                    .or_default()
                    .entry(out.construction)
                    .or_default()
                    .insert(out.realizer);
            }
            None => unmatched.push(out),
        }
    }
    let lines = table
        .iter()
        .map(|row| Table5Line {
            atlas_label: row.atlas_label.clone(),
            shape: row.frame_shape.clone(),
            expected: row.realizations.iter().map(|(c, names)| (*c, names.iter().cloned().collect())).collect(),
            got: got.remove(&row.atlas_label).unwrap_or_default(),
        })
        .collect();
    Table5Report { lines, malformed, unmatched, errors, count_a, shapes_c }
}

/// `q^offset * sum c_k q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaExpansion {
    pub offset: Ratio<i64>,
    pub coeffs: Vec<BigInt>,
}

impl EtaExpansion {
    /// Product of two expansions, truncated to the shorter one.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let a = PowerSeries::new(n - 1, self.coeffs[..n].to_vec());
        let b = PowerSeries::new(n - 1, rhs.coeffs[..n].to_vec());
        Self { offset: self.offset + rhs.offset, coeffs: a.mul(&b).coeffs().to_vec() }
    }
}

impl fmt::Display for EtaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        write!(f, "offset={} coeffs={}", self.offset, cs.join(","))
    }
}

/// `prod_m eta(m tau)^{chi_m}` through `q^n` beyond the leading power.
pub fn eta_expansion(fs: &FrameShape, n: usize) -> EtaExpansion {
    let mut s = PowerSeries::one(n);
    for (m, chi) in fs.iter() {
        let m = m as usize;
        for k in (1..).map(|k| k * m).take_while(|&mk| mk <= n) {
            for _ in 0..chi.unsigned_abs() {
                if chi > 0 {
                    s.mul_one_minus(k);
                } else {
                    s.div_one_minus(k);
                }
            }
        }
    }
    EtaExpansion { offset: Ratio::new(fs.degree(), 24), coeffs: s.coeffs().to_vec() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(list: &[Realization]) -> BTreeSet<String> {
        list.iter().map(|r| r.shape.to_string()).collect()
    }

    #[test]
    fn root_system_combinations() {
        let a = construction_a().unwrap();
        assert_eq!(a.len(), 23);
        assert_eq!(shapes(&a).len(), 23);
        let d24 = a.iter().find(|r| r.realizer == "D_24").unwrap();
        assert_eq!(d24.shape.to_string(), "2·46/1·23");
        let e8 = a.iter().find(|r| r.realizer == "E_8^3").unwrap();
        assert_eq!(e8.shape.to_string(), "2^3·3^3·5^3·30^3/1^3·6^3·10^3·15^3");
        assert!(a.iter().any(|r| r.realizer == "A_5^4 D_4"));
    }

    #[test]
    fn simply_elliptic_pairs() {
        let c = construction_c();
        let got: BTreeSet<(String, String)> = c.iter().map(|r| (r.realizer.clone(), r.shape.to_string())).collect();
        let expect: BTreeSet<(String, String)> =
            [("D~_5^4".to_string(), "2^24/1^24".to_string()), ("E~_6^3".to_string(), "3^12/1^12".to_string())]
                .into_iter()
                .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn eta_of_trivial_symbol() {
        let e = eta_expansion(&FrameShape::one(), 5);
        assert_eq!(e.offset, Ratio::from_integer(0));
        assert_eq!(e.coeffs[0], BigInt::from(1));
        assert!(e.coeffs[1..].iter().all(|c| *c == BigInt::from(0)));
    }

    #[test]
    fn eta_of_delta() {
        let e = eta_expansion(&"1^24".parse().unwrap(), 3);
        assert_eq!(e.offset, Ratio::from_integer(1));
        let c: Vec<i64> = e.coeffs.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(c, vec![1, -24, 252, -1472]);
    }
}
