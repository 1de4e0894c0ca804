//! Tabulated singularities, the frame-shape table, and per-record checks.

mod dataset;
mod table5;
mod theorem4;

use std::collections::BTreeMap;
use std::fmt;

pub use dataset::{format_line, parse_line};
pub use table5::{load_table5, parse_table5, Construction, Table5Row};
pub use theorem4::{enumerate_theorem4, Theorem4Case, Theorem4Entry};

use crate::cyclo::FrameShape;
use crate::error::{Error, Result};
use crate::exactalg::series_expand;
use crate::graded::{
    gorenstein_check, parse_list, phi_a, phi_m_b_rule, poincare_from_weights, poincare_fuchsian, poincare_orbit_g0,
    psi_a, tilde_phi_a, CaseData, FuchsianSignature, OrbitInvariants, TheoremCase, Variant, WeightSystem,
};
use crate::lattice::coxeter_infinity_charpoly;
use crate::monodromy::{genus5_phi_m, milnor_number_hypersurface, milnor_orlik, phi_m_of_record};

const SINGULARITIES: &str = include_str!("../../data/singularities.txt");

/// Default truncation order for series comparisons.
pub const DEFAULT_TERMS: usize = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableFlags {
    pub b: bool,
    pub e: bool,
}

impl fmt::Display for TableFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = [(self.b, "b"), (self.e, "e")].iter().filter(|(on, _)| *on).map(|(_, s)| *s).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// One tabulated singularity.
///
/// `signature` carries `g` and the `alpha_i`; with exponent `R > 1` the
/// `beta_i` follow from `R beta_i = 1 mod alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityRecord {
    pub table: u8,
    pub signature: FuchsianSignature,
    pub variant: Option<Variant>,
    pub weights: WeightSystem,
    pub name: Option<String>,
    pub equations: Option<String>,
    pub mu: u64,
    pub b: i64,
    pub r_exp: u64,
    pub flags: TableFlags,
    pub case: CaseData,
}

impl SingularityRecord {
    fn from_fields(f: &BTreeMap<String, String>) -> Result<Self> {
        let get = |k: &str| f.get(k).ok_or_else(|| Error::Dataset(format!("record lacks key {k:?}")));
        let num =
            |k: &str| -> Result<i64> { get(k)?.parse().map_err(|_| Error::Dataset(format!("bad integer for {k}"))) };
        let opt_num = |k: &str| -> Result<u64> {
            match f.get(k) {
                Some(v) => v.parse().map_err(|_| Error::Dataset(format!("bad integer for {k}"))),
                None => Ok(0),
            }
        };
        let signature: FuchsianSignature = get("sig")?.parse()?;
        let variant = f.get("hyper").map(|v| v.parse()).transpose()?;
        let weights = WeightSystem::new(parse_list(get("weights")?)?, parse_list(get("degrees")?)?)?;
        let mut flags = TableFlags::default();
        if let Some(fl) = f.get("flags") {
            for t in fl.split(',') {
                match t.trim() {
                    "b" => flags.b = true,
                    "e" => flags.e = true,
                    other => return Err(Error::Dataset(format!("unknown flag {other:?}"))),
                }
            }
        }
        let case_tag: TheoremCase = get("case")?.parse()?;
        let d1 = opt_num("d1")?;
        let d2 = if d1 > 0 { partner_degree(&weights, d1)? } else { 0 };
        let case = CaseData { case: case_tag, g: signature.g, d1, d2, p: opt_num("p")?, q: opt_num("q")? };
        let table = num("table")?;
        Ok(Self {
            table: u8::try_from(table).map_err(|_| Error::Dataset("bad table".into()))?,
            signature,
            variant,
            weights,
            name: f.get("name").cloned(),
            equations: f.get("eq").cloned(),
            mu: num("mu")? as u64,
            b: num("b")?,
            r_exp: num("R")? as u64,
            flags,
            case,
        })
    }

    /// The record in dataset syntax.
    pub fn to_line(&self) -> String {
        let mut fields: Vec<(&str, String)> =
            vec![("table", self.table.to_string()), ("sig", self.signature.to_string())];
        if let Some(v) = self.variant {
            fields.push(("hyper", v.tag().to_string()));
        }
        let join = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        fields.push(("weights", join(&self.weights.weights)));
        fields.push(("degrees", join(&self.weights.degrees)));
        if let Some(n) = &self.name {
            fields.push(("name", n.clone()));
        }
        if let Some(e) = &self.equations {
            fields.push(("eq", e.clone()));
        }
        fields.push(("mu", self.mu.to_string()));
        fields.push(("b", self.b.to_string()));
        fields.push(("R", self.r_exp.to_string()));
        if self.flags.b || self.flags.e {
            fields.push(("flags", self.flags.to_string()));
        }
        fields.push(("case", self.case.case.tag().to_string()));
        if self.case.p > 0 {
            fields.push(("p", self.case.p.to_string()));
            fields.push(("q", self.case.q.to_string()));
        }
        if self.case.d1 > 0 {
            fields.push(("d1", self.case.d1.to_string()));
        }
        format_line(fields)
    }

    /// `{g;a1a2...}`, as realizers without a name are referred to.
    pub fn short_signature(&self) -> String {
        let digits: String = self.signature.alphas.iter().map(u64::to_string).collect();
        format!("{{{};{}}}", self.signature.g, digits)
    }

    /// Name used when matching realizations; curve variants share it.
    pub fn realizer_id(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.short_signature())
    }

    pub fn display_name(&self) -> String {
        let base = self.realizer_id();
        match self.variant {
            Some(v) => format!("{base}({})", v.tag()),
            None => base,
        }
    }

    pub fn is_fuchsian(&self) -> bool {
        self.r_exp == 1
    }

    pub fn is_hypersurface(&self) -> bool {
        self.weights.is_hypersurface()
    }

    /// `psi_A` from the signature.
    pub fn psi_a(&self) -> FrameShape {
        psi_a(&self.signature.alphas)
    }

    /// `phi_A = p_A psi_A` as a frame shape, with `p_A` from the weights.
    pub fn phi_a_shape(&self) -> FrameShape {
        self.weights.frame_shape().mul(&self.psi_a())
    }

    pub fn tilde_phi_a(&self) -> Result<FrameShape> {
        tilde_phi_a(&self.phi_a_shape(), &self.case)
    }

    /// `phi_M^b`, the dual of the transformed `phi_A`.
    pub fn phi_m_b(&self) -> Result<FrameShape> {
        Ok(self.tilde_phi_a()?.dual())
    }

    /// `{g; b; (alpha_i, beta_i)}` with `beta_i` determined by `R`.
    pub fn orbit_invariants(&self) -> Result<OrbitInvariants> {
        let rep = gorenstein_check(self.signature.g, &self.signature.alphas, self.b, self.r_exp)?;
        let pairs = self.signature.alphas.iter().copied().zip(rep.betas).collect();
        OrbitInvariants::new(self.signature.g, self.b, pairs)
    }
}

/// The second degree after cancelling degrees that equal weights.
///
/// Embeddings with more than two equations carry linear equations `y = ...`
/// whose degree equals a weight; dropping those leaves the essential pair.
fn partner_degree(ws: &WeightSystem, d1: u64) -> Result<u64> {
    let mut w = ws.weights.clone();
    let mut d = ws.degrees.clone();
    while d.len() > 2 {
        let Some(pos) = d.iter().position(|x| w.contains(x)) else {
            return Err(Error::Dataset(format!("cannot reduce {ws} to two equations")));
        };
        let x = d.remove(pos);
        let wi = w.iter().position(|y| *y == x).expect("checked above");
        w.remove(wi);
    }
    let i =
        d.iter().position(|&x| x == d1).ok_or_else(|| Error::Dataset(format!("d1 = {d1} is not a degree of {ws}")))?;
    d.remove(i);
    d.first().copied().ok_or_else(|| Error::Dataset(format!("{ws} has a single degree but d1 is set")))
}

pub fn load_catalog() -> Result<Vec<SingularityRecord>> {
    parse_catalog(SINGULARITIES)
}

pub fn parse_catalog(text: &str) -> Result<Vec<SingularityRecord>> {
    dataset::checked_body(text)?.into_iter().map(|l| SingularityRecord::from_fields(&parse_line(l)?)).collect()
}

/// Records from the two Fuchsian tables.
pub fn fuchsian_records(all: &[SingularityRecord]) -> Vec<&SingularityRecord> {
    all.iter().filter(|r| r.table <= 2).collect()
}

/// Pairs of records sharing a signature, hyperelliptic first.
pub fn partner_pairs(all: &[SingularityRecord]) -> Vec<(&SingularityRecord, &SingularityRecord)> {
    let mut out = Vec::new();
    for h in all.iter().filter(|r| r.variant == Some(Variant::Hyperelliptic)) {
        if let Some(nh) =
            all.iter().find(|r| r.variant == Some(Variant::NonHyperelliptic) && r.signature == h.signature)
        {
            out.push((h, nh));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// Weights formula against the Fuchsian or genus-0 orbit formula.
    Poincare,
    /// `phi_A` is a polynomial and equals the characteristic polynomial of `c_inf`.
    CoxeterElement,
    /// Dual of the transformed `phi_A` against `phi_M^b`.
    Duality,
    /// `deg phi_M` against the tabulated Milnor number.
    MilnorNumber,
    Gorenstein,
    /// The `phi_M^b` symbol of a (b)-flagged row is self-dual.
    SelfDual,
}

impl CheckId {
    pub fn tag(self) -> &'static str {
        match self {
            CheckId::Poincare => "poincare",
            CheckId::CoxeterElement => "coxeter",
            CheckId::Duality => "duality",
            CheckId::MilnorNumber => "mu",
            CheckId::Gorenstein => "gorenstein",
            CheckId::SelfDual => "selfdual",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: CheckId,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordReport {
    pub record: String,
    pub table: u8,
    pub checks: Vec<CheckResult>,
}

impl RecordReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn get(&self, id: CheckId) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

fn outcome(id: CheckId, r: Result<(bool, String)>) -> CheckResult {
    match r {
        Ok((ok, detail)) => CheckResult { id, ok, detail },
        Err(e) => CheckResult { id, ok: false, detail: e.to_string() },
    }
}

/// Poincaré series from the weights against the series from the orbit data.
pub fn check_poincare(rec: &SingularityRecord, terms: usize) -> Result<(bool, String)> {
    let (rf, _) = poincare_from_weights(&rec.weights);
    let lhs = series_expand(&rf, terms)?;
    let (rhs, via) = if rec.is_fuchsian() {
        (series_expand(&poincare_fuchsian(&rec.signature), terms)?, "fuchsian")
    } else if rec.signature.g == 0 {
        (poincare_orbit_g0(&rec.orbit_invariants()?, terms)?, "orbit")
    } else {
        return Err(Error::Precondition("no orbit formula for g > 0 and R > 1".into()));
    };
    if lhs == rhs {
        return Ok((true, format!("{via} formula agrees through t^{terms}")));
    }
    let k = (0..=terms).find(|&k| lhs.coeff(k) != rhs.coeff(k)).unwrap_or(0);
    Ok((false, format!("{via} formula differs at t^{k}: weights {} vs {}", lhs.coeff(k), rhs.coeff(k))))
}

fn check_coxeter(rec: &SingularityRecord) -> Result<(bool, String)> {
    let phi = phi_a(&rec.signature)?;
    let cp = coxeter_infinity_charpoly(&rec.signature);
    let ok = cp == phi;
    Ok((ok, if ok { format!("charpoly = {phi}") } else { format!("charpoly {cp} != phi_A {phi}") }))
}

fn check_duality(rec: &SingularityRecord) -> Result<(bool, String)> {
    let b = rec.phi_m_b()?;
    match rec.case.case {
        TheoremCase::T1 => {
            let mo = milnor_orlik(&rec.weights)?;
            Ok((mo == b, format!("milnor-orlik {mo}, dual {b}")))
        }
        TheoremCase::Special5nh | TheoremCase::PfaffianNote => {
            let expect = phi_m_b_rule(&genus5_phi_m(), &rec.case)?;
            Ok((expect == b, format!("phi_M^b {expect}, dual {b}")))
        }
        TheoremCase::Unassigned => Err(Error::MissingCase(rec.display_name())),
        _ => {
            let m = phi_m_of_record(rec)?;
            Ok((true, format!("phi_M {m}, phi_M^b {b}")))
        }
    }
}

fn check_mu(rec: &SingularityRecord) -> Result<(bool, String)> {
    let m = phi_m_of_record(rec)?;
    let deg = m.degree();
    let mut ok = deg == rec.mu as i64;
    let mut detail = format!("deg {m} = {deg}, printed {}", rec.mu);
    if rec.is_hypersurface() {
        let mh = milnor_number_hypersurface(&rec.weights)?;
        ok &= mh == rec.mu;
        detail.push_str(&format!(", weights give {mh}"));
    }
    Ok((ok, detail))
}

fn check_gorenstein(rec: &SingularityRecord) -> Result<(bool, String)> {
    let rep = gorenstein_check(rec.signature.g, &rec.signature.alphas, rec.b, rec.r_exp)?;
    let betas: Vec<String> = rep.betas.iter().map(u64::to_string).collect();
    Ok((rep.ok, format!("b={} R={} beta=({}) vdeg={}", rec.b, rec.r_exp, betas.join(","), rep.vdeg)))
}

fn check_self_dual(rec: &SingularityRecord) -> Result<(bool, String)> {
    let b = rec.phi_m_b()?;
    Ok((b.is_self_dual(), format!("phi_M^b {b}")))
}

/// Runs every applicable check on one record; failures are entries, not errors.
pub fn verify_record(rec: &SingularityRecord, terms: usize) -> RecordReport {
    let mut checks = vec![outcome(CheckId::Poincare, check_poincare(rec, terms))];
    if rec.is_fuchsian() {
        checks.push(outcome(CheckId::CoxeterElement, check_coxeter(rec)));
    }
    checks.push(outcome(CheckId::Duality, check_duality(rec)));
    checks.push(outcome(CheckId::MilnorNumber, check_mu(rec)));
    checks.push(outcome(CheckId::Gorenstein, check_gorenstein(rec)));
    if rec.flags.b {
        checks.push(outcome(CheckId::SelfDual, check_self_dual(rec)));
    }
    RecordReport { record: rec.display_name(), table: rec.table, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(all: &'a [SingularityRecord], name: &str) -> &'a SingularityRecord {
        all.iter().find(|r| r.display_name() == name).unwrap()
    }

    #[test]
    fn table_sizes() {
        let all = load_catalog().unwrap();
        let sizes: Vec<usize> = (1..=4).map(|t| all.iter().filter(|r| r.table == t).count()).collect();
        assert_eq!(sizes, vec![33, 28, 12, 13]);
    }

    #[test]
    fn sample_rows() {
        let all = load_catalog().unwrap();
        let e12 = find(&all, "E_{12}");
        assert_eq!(e12.weights.to_string(), "6,14,21/42");
        assert_eq!((e12.mu, e12.signature.to_string()), (12, "0;2,3,7".to_string()));
        let i10 = find(&all, "I_{1,0}^2");
        assert_eq!(i10.weights.to_string(), "2,5,5,5/10,10");
        assert_eq!((i10.mu, i10.r_exp, i10.b), (25, 3, 2));
        assert_eq!(i10.flags, TableFlags { b: true, e: true });
        let g2 = find(&all, "{2;}");
        assert_eq!((g2.weights.to_string(), g2.mu), ("1,1,3/6".to_string(), 25));
    }

    #[test]
    fn partner_degree_drops_linear_equations() {
        let all = load_catalog().unwrap();
        let r = find(&all, "{3;2}(h)");
        assert_eq!((r.case.d1, r.case.d2), (3, 3));
        let l10 = find(&all, "L_{10}");
        assert_eq!((l10.case.d1, l10.case.d2), (11, 12));
    }

    #[test]
    fn lines_round_trip() {
        let all = load_catalog().unwrap();
        for r in &all {
            let again = SingularityRecord::from_fields(&parse_line(&r.to_line()).unwrap()).unwrap();
            assert_eq!(&again, r);
        }
    }

    #[test]
    fn worked_records() {
        let all = load_catalog().unwrap();
        let e12 = verify_record(find(&all, "E_{12}"), 64);
        assert!(e12.ok(), "{e12:?}");
        let l10 = find(&all, "L_{10}");
        assert!(verify_record(l10, 64).ok());
        assert_eq!(phi_m_of_record(l10).unwrap().degree(), 10);
        let g5 = verify_record(find(&all, "{5;}(nh)"), 64);
        assert!(g5.ok(), "{g5:?}");
    }

    #[test]
    fn corrupted_dataset_is_rejected() {
        let tampered = SINGULARITIES.replace("mu=12;", "mu=13;");
        assert!(matches!(parse_catalog(&tampered), Err(Error::Dataset(_))));
    }
}
