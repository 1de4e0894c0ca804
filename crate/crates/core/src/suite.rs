//! The acceptance criteria as runnable checks.
//!
//! Bounds and expected counts are fixed constants; every comparison is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed};

use crate::catalog::{
    check_poincare, enumerate_theorem4, fuchsian_records, load_catalog, load_table5, verify_record, CheckId,
    SingularityRecord, Table5Row, Theorem4Case,
};
use crate::cyclo::{divisors, FrameShape};
use crate::error::Result;
use crate::exactalg::{series_inverse, IntPolynomial, PowerSeries};
use crate::graded::{gorenstein_check, phi_a, FuchsianSignature};
use crate::lattice::{
    build_fuchsian_lattice, coxeter_factors, coxeter_infinity, coxeter_infinity_charpoly, elementary_isometry,
    BasisLabel, IsometryKind,
};
use crate::monodromy::milnor_orlik;
use crate::moonshine::{eta_expansion, verify_table5, EtaExpansion};

pub const SERIES_TERMS: usize = 256;
pub const CATALOG_RECORDS: usize = 86;
pub const GRID_MAX_GENUS: u32 = 5;
pub const GRID_MAX_R: usize = 6;
pub const GRID_MAX_ALPHA: u64 = 13;
/// Sub-grid on which the sparse determinant is compared with dense Berkowitz.
pub const DENSE_MAX_GENUS: u32 = 5;
pub const DENSE_MAX_R: usize = 3;
pub const DENSE_MAX_ALPHA: u64 = 7;
pub const GORENSTEIN_ROWS: usize = 25;
/// Signature counts for cases (i)-(iii), (iv), (v), (vi) by genus 2, 3, 4, and (vii).
pub const THEOREM4_COUNTS: [usize; 7] = [22, 16, 11, 4, 2, 1, 1];
pub const TABLE5_ROWS: usize = 39;
pub const CONSTRUCTION_A_COUNT: usize = 23;
pub const CONSTRUCTION_C_SHAPES: [&str; 2] = ["2^24/1^24", "3^12/1^12"];
pub const ETA_TERMS: usize = 50;
pub const DUAL_MAX_H: u64 = 120;
pub const ROUND_TRIP_MAX_M: u64 = 60;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub summary: String,
    pub failures: Vec<String>,
}

impl CriterionOutcome {
    fn new(id: u8, title: &'static str, summary: String, failures: Vec<String>) -> Self {
        Self { id, title, summary, failures }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {}: {} ({})",
            self.id,
            self.title,
            if self.pass() { "PASS" } else { "FAIL" },
            self.summary
        )
    }
}

/// Shared inputs, loaded once.
pub struct Inputs {
    pub catalog: Vec<SingularityRecord>,
    pub table5: Vec<Table5Row>,
}

impl Inputs {
    pub fn load() -> Result<Self> {
        Ok(Self { catalog: load_catalog()?, table5: load_table5()? })
    }
}

/// All sorted signatures with `g <= max_g`, `r <= max_r`, `2 <= alpha_i <= max_alpha`.
pub fn signature_grid(max_g: u32, max_r: usize, max_alpha: u64) -> Vec<FuchsianSignature> {
    fn go(r: usize, lo: u64, hi: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cur.clone());
        if r == 0 {
            return;
        }
        for a in lo..=hi {
            cur.push(a);
            go(r - 1, a, hi, cur, out);
            cur.pop();
        }
    }
    let mut tuples = Vec::new();
    go(max_r, 2, max_alpha, &mut Vec::new(), &mut tuples);
    (0..=max_g).flat_map(|g| tuples.iter().map(move |a| FuchsianSignature { g, alphas: a.clone() })).collect()
}

pub fn criterion1(inp: &Inputs) -> CriterionOutcome {
    let mut failures = Vec::new();
    for r in &inp.catalog {
        match check_poincare(r, SERIES_TERMS) {
            Ok((true, _)) => {}
            Ok((false, d)) => failures.push(format!("{}: {d}", r.display_name())),
            Err(e) => failures.push(format!("{}: {e}", r.display_name())),
        }
    }
    if inp.catalog.len() != CATALOG_RECORDS {
        failures.push(format!("catalog has {} records, expected {CATALOG_RECORDS}", inp.catalog.len()));
    }
    let summary = format!(
        "{}/{} records agree through t^{SERIES_TERMS}",
        inp.catalog.len() - failures.len().min(inp.catalog.len()),
        inp.catalog.len()
    );
    CriterionOutcome::new(1, "Poincare cross-formula", summary, failures)
}

/// `1 + (g-2) t + (g-2) t^2 + t^3`.
pub fn genus_only_determinant(g: u32) -> IntPolynomial {
    let c = g as i64 - 2;
    IntPolynomial::from_i64(&[1, c, c, 1])
}

pub fn criterion2() -> CriterionOutcome {
    let mut failures = Vec::new();
    let grid = signature_grid(GRID_MAX_GENUS, GRID_MAX_R, GRID_MAX_ALPHA);
    for s in &grid {
        match phi_a(s) {
            Ok(p) => {
                if coxeter_infinity_charpoly(s) != p {
                    failures.push(format!("{s}: charpoly differs from phi_A"));
                }
            }
            Err(e) => failures.push(format!("{s}: {e}")),
        }
    }
    for g in 0..=GRID_MAX_GENUS {
        let s = FuchsianSignature { g, alphas: vec![] };
        let (m, cp) = coxeter_infinity(&s);
        if cp != genus_only_determinant(g) || m.charpoly() != cp {
            failures.push(format!("{s}: determinant {cp}"));
        }
    }
    let dense = signature_grid(DENSE_MAX_GENUS, DENSE_MAX_R, DENSE_MAX_ALPHA);
    for s in &dense {
        let (m, cp) = coxeter_infinity(s);
        if m.charpoly() != cp {
            failures.push(format!("{s}: sparse and dense determinants differ"));
        }
    }
    let summary =
        format!("{} signatures, {} dense cross-checks, {} mismatches", grid.len(), dense.len(), failures.len());
    CriterionOutcome::new(2, "Coxeter element charpoly = phi_A", summary, failures)
}

pub fn criterion3(inp: &Inputs) -> CriterionOutcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for r in inp.catalog.iter().filter(|r| r.table <= 3 && r.is_hypersurface()) {
        n += 1;
        let res = (|| -> Result<Option<String>> {
            let mo = milnor_orlik(&r.weights)?;
            let dual = r.tilde_phi_a()?.saito_dual(None)?;
            Ok(if mo != dual {
                Some(format!("milnor-orlik {mo} != dual {dual}"))
            } else if mo.degree() != r.mu as i64 {
                Some(format!("degree {} != mu {}", mo.degree(), r.mu))
            } else {
                None
            })
        })();
        match res {
            Ok(None) => {}
            Ok(Some(d)) => failures.push(format!("{}: {d}", r.display_name())),
            Err(e) => failures.push(format!("{}: {e}", r.display_name())),
        }
    }
    let summary = format!("{n} hypersurface records");
    CriterionOutcome::new(3, "Milnor-Orlik = dual of phi_A~", summary, failures)
}

pub fn criterion4(inp: &Inputs) -> CriterionOutcome {
    let mut failures = Vec::new();
    let fuchsian = fuchsian_records(&inp.catalog);
    for r in &fuchsian {
        let rep = verify_record(r, 0);
        if let Some(c) = rep.get(CheckId::Duality).filter(|c| !c.ok) {
            failures.push(format!("{}: {}", rep.record, c.detail));
        }
    }
    let summary = format!("{} Fuchsian records", fuchsian.len());
    CriterionOutcome::new(4, "dual of phi_A~ = phi_M^b", summary, failures)
}

pub fn criterion5(inp: &Inputs) -> CriterionOutcome {
    let mut failures = Vec::new();
    for r in &inp.catalog {
        let rep = verify_record(r, 0);
        if let Some(c) = rep.get(CheckId::MilnorNumber).filter(|c| !c.ok) {
            failures.push(format!("{}: {}", rep.record, c.detail));
        }
    }
    let (lo, hi) = inp.catalog.iter().fold((u64::MAX, 0), |(lo, hi), r| (lo.min(r.mu), hi.max(r.mu)));
    let summary = format!("{} records, printed mu in {lo}..={hi}", inp.catalog.len());
    CriterionOutcome::new(5, "deg phi_M = mu", summary, failures)
}

pub fn criterion6(inp: &Inputs) -> CriterionOutcome {
    let mut failures = Vec::new();
    let mut rows = 0;
    for r in &inp.catalog {
        let (b, big_r) = if r.table >= 3 {
            rows += 1;
            (r.b, r.r_exp)
        } else {
            let b = 2 * r.signature.g as i64 - 2 + r.signature.r() as i64;
            if r.b != b || r.r_exp != 1 {
                failures.push(format!("{}: printed (b, R) = ({}, {})", r.display_name(), r.b, r.r_exp));
            }
            (b, 1)
        };
        match gorenstein_check(r.signature.g, &r.signature.alphas, b, big_r) {
            Ok(rep) if rep.ok => {}
            Ok(rep) => failures.push(format!("{}: b={b} R={big_r} vdeg={}", r.display_name(), rep.vdeg)),
            Err(e) => failures.push(format!("{}: {e}", r.display_name())),
        }
    }
    if rows != GORENSTEIN_ROWS {
        failures.push(format!("{rows} rows with R given, expected {GORENSTEIN_ROWS}"));
    }
    let summary = format!("{rows} rows with printed R, {} Fuchsian", inp.catalog.len() - rows);
    CriterionOutcome::new(6, "Gorenstein relations", summary, failures)
}

/// Counts grouped as in [`THEOREM4_COUNTS`].
pub fn theorem4_counts() -> [usize; 7] {
    let mut out = [0; 7];
    for e in enumerate_theorem4() {
        let slot = match e.case {
            Theorem4Case::I | Theorem4Case::II | Theorem4Case::III => 0,
            Theorem4Case::IV => 1,
            Theorem4Case::V => 2,
            Theorem4Case::VI => 1 + e.signature.g as usize,
            Theorem4Case::VII => 6,
        };
        out[slot] += 1;
    }
    out
}

pub fn criterion7(inp: &Inputs) -> CriterionOutcome {
    let mut failures = Vec::new();
    let enumerated: BTreeSet<String> = enumerate_theorem4().iter().map(|e| e.signature.to_string()).collect();
    let tabulated: BTreeSet<String> = fuchsian_records(&inp.catalog).iter().map(|r| r.signature.to_string()).collect();
    for s in enumerated.difference(&tabulated) {
        failures.push(format!("{s} enumerated but not tabulated"));
    }
    for s in tabulated.difference(&enumerated) {
        failures.push(format!("{s} tabulated but not enumerated"));
    }
    let counts = theorem4_counts();
    if counts != THEOREM4_COUNTS {
        failures.push(format!("case counts {counts:?}, expected {THEOREM4_COUNTS:?}"));
    }
    let summary = format!("{} signatures, counts {counts:?}", enumerated.len());
    CriterionOutcome::new(7, "classification enumerator", summary, failures)
}

pub fn criterion8(inp: &Inputs) -> CriterionOutcome {
    let rep = verify_table5(&inp.catalog, &inp.table5);
    let mut failures = Vec::new();
    if rep.lines.len() != TABLE5_ROWS {
        failures.push(format!("{} rows, expected {TABLE5_ROWS}", rep.lines.len()));
    }
    for row in &inp.table5 {
        if row.frame_shape.degree() != 24 || !row.frame_shape.is_self_dual() {
            failures.push(format!("row {} is not self-dual of degree 24", row.atlas_label));
        }
    }
    if rep.count_a != CONSTRUCTION_A_COUNT {
        failures.push(format!("construction (a) gave {}", rep.count_a));
    }
    let c: BTreeSet<String> = CONSTRUCTION_C_SHAPES.iter().map(|s| s.to_string()).collect();
    if rep.shapes_c != c {
        failures.push(format!("construction (c) gave {:?}", rep.shapes_c));
    }
    for m in &rep.malformed {
        failures.push(format!("({}) {} gave {} (deg {})", m.construction, m.realizer, m.shape, m.shape.degree()));
    }
    for m in &rep.unmatched {
        failures.push(format!("({}) {} gave unlisted {}", m.construction, m.realizer, m.shape));
    }
    failures.extend(rep.errors.iter().cloned());
    for l in rep.lines.iter().filter(|l| !l.ok()) {
        failures.push(format!("{l}: {}", l.detail().replace('\n', "; ")));
    }
    let passing = rep.lines.iter().filter(|l| l.ok()).count();
    let summary = format!("{passing}/{} rows match, (a) {}, (c) {}", rep.lines.len(), rep.count_a, rep.shapes_c.len());
    CriterionOutcome::new(8, "frame-shape constructions", summary, failures)
}

/// Eta product by independent means: each `prod_k (1 - q^{mk})` is a finite
/// polynomial, raised by repeated multiplication and inverted as a series.
pub fn eta_oracle(fs: &FrameShape, n: usize) -> EtaExpansion {
    let mut acc = PowerSeries::one(n);
    for (m, chi) in fs.iter() {
        let mut base = PowerSeries::one(n);
        for k in (1..).map(|k| k * m as usize).take_while(|&mk| mk <= n) {
            let f = PowerSeries::from_polynomial(&IntPolynomial::one_minus_t_pow(k), n);
            base = base.mul(&f);
        }
        let base = if chi < 0 { series_inverse(&base).expect("unit constant term") } else { base };
        for _ in 0..chi.unsigned_abs() {
            acc = acc.mul(&base);
        }
    }
    EtaExpansion { offset: num_rational::Ratio::new(fs.degree(), 24), coeffs: acc.coeffs().to_vec() }
}

/// Deterministic sweep over the property families.
pub fn property_sweep(inp: &Inputs) -> Vec<String> {
    let mut failures = Vec::new();

    // duality is an involution for every admissible h
    for h in 1..=DUAL_MAX_H {
        let ds = divisors(h);
        for (i, &a) in ds.iter().enumerate() {
            for &b in &ds[i..] {
                let fs = FrameShape::from_pairs([(a, 2), (b, -3), (h, 1)]);
                let twice = fs.saito_dual(Some(h)).and_then(|d| d.saito_dual(Some(h)));
                if twice.as_ref() != Ok(&fs) {
                    failures.push(format!("dual involution fails for {fs} at h={h}"));
                }
            }
        }
    }

    // polynomial round trip
    let mut shapes = Vec::new();
    for m in 1..=ROUND_TRIP_MAX_M {
        for e in divisors(m) {
            for k in 1..=3 {
                shapes.push(FrameShape::from_pairs([(m, k)]).mul(&FrameShape::from_pairs([(e, -k)])));
            }
        }
    }
    for r in &inp.catalog {
        shapes.push(r.phi_a_shape());
    }
    for fs in shapes.iter().filter(|f| f.is_polynomial()) {
        match fs.to_polynomial().and_then(|p| FrameShape::from_polynomial(&p)) {
            Ok(back) if &back == fs => {}
            Ok(back) => failures.push(format!("round trip {fs} -> {back}")),
            Err(e) => failures.push(format!("round trip {fs}: {e}")),
        }
    }

    // isometries
    let mut sigs: Vec<FuchsianSignature> = fuchsian_records(&inp.catalog).iter().map(|r| r.signature.clone()).collect();
    sigs.dedup();
    for s in &sigs {
        failures.extend(isometry_failures(s));
    }

    // eta products
    for row in &inp.table5 {
        let fs = &row.frame_shape;
        if eta_expansion(fs, ETA_TERMS) != eta_oracle(fs, ETA_TERMS) {
            failures.push(format!("eta {} disagrees with the oracle", row.atlas_label));
        }
        let pos = FrameShape::from_pairs(fs.iter().filter(|(_, e)| *e > 0));
        let neg = FrameShape::from_pairs(fs.iter().filter(|(_, e)| *e < 0));
        if eta_expansion(&pos, ETA_TERMS).mul(&eta_expansion(&neg, ETA_TERMS)) != eta_expansion(fs, ETA_TERMS) {
            failures.push(format!("eta {} is not multiplicative", row.atlas_label));
        }
    }
    failures
}

/// Gram preservation of the elementary maps and `c_inf`, and reciprocity of its charpoly.
pub fn isometry_failures(s: &FuchsianSignature) -> Vec<String> {
    let mut failures = Vec::new();
    let lat = build_fuchsian_lattice(s);
    let n = lat.rank();
    let idx = |l: BasisLabel| lat.index_of(&l).expect("standard basis");
    let (e, f1, f2) = (idx(BasisLabel::Eps), idx(BasisLabel::F1), idx(BasisLabel::F2));
    let mut kinds: Vec<IsometryKind> = (0..n - 3).map(|k| IsometryKind::Reflection(lat.basis_vector(k))).collect();
    let mut d = vec![0; n];
    d[f1] = 1;
    d[f2] = -1;
    kinds.push(IsometryKind::Reflection(d));
    kinds.push(IsometryKind::EichlerSiegel { f: lat.basis_vector(f1), w: lat.basis_vector(e) });
    kinds.push(IsometryKind::EichlerSiegel { f: lat.basis_vector(f2), w: lat.basis_vector(e) });
    for k in &kinds {
        if let Err(err) = elementary_isometry(&lat, k) {
            failures.push(format!("{s}: {err}"));
        }
    }
    let m = crate::exactalg::product_matrix(n, &coxeter_factors(&lat));
    if !lat.preserves(&m) {
        failures.push(format!("{s}: c_inf does not preserve the Gram matrix"));
    }
    let cp = coxeter_infinity_charpoly(s);
    let c0 = cp.constant_term();
    if !cp.is_self_reciprocal() || !c0.abs().is_one() {
        failures.push(format!("{s}: charpoly {cp} is not reciprocal with unit constant term"));
    }
    failures
}

pub fn criterion9(inp: &Inputs) -> CriterionOutcome {
    let failures = property_sweep(inp);
    let summary = format!("deterministic sweep, {} violations", failures.len());
    CriterionOutcome::new(9, "property suites", summary, failures)
}

/// Runs criteria 1-9 in order.
pub fn run_all(inp: &Inputs) -> Vec<CriterionOutcome> {
    vec![
        criterion1(inp),
        criterion2(),
        criterion3(inp),
        criterion4(inp),
        criterion5(inp),
        criterion6(inp),
        criterion7(inp),
        criterion8(inp),
        criterion9(inp),
    ]
}

/// Per-record check outcomes for a table, keyed by record name.
pub fn table_reports(inp: &Inputs, table: u8, terms: usize) -> BTreeMap<String, Vec<(CheckId, bool, String)>> {
    inp.catalog
        .iter()
        .filter(|r| r.table == table)
        .map(|r| {
            let rep = verify_record(r, terms);
            (rep.record.clone(), rep.checks.into_iter().map(|c| (c.id, c.ok, c.detail)).collect())
        })
        .collect()
}
