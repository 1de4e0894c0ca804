//! One function per subcommand. Each returns whether every check passed.

use fuchsian::catalog::{
    enumerate_theorem4, format_line, load_catalog, verify_record, Construction, SingularityRecord, Theorem4Case,
};
use fuchsian::exactalg::series_expand;
use fuchsian::graded::{
    parse_list, phi_a, poincare_from_weights, poincare_fuchsian, psi_a, FuchsianSignature, WeightSystem,
};
use fuchsian::lattice::{ade_coxeter, coxeter_infinity_charpoly, AdeType};
use fuchsian::monodromy::{milnor_orlik, phi_m_of_record};
use fuchsian::moonshine::{construction, eta_expansion, letters, verify_table5};
use fuchsian::suite::{self, Inputs};
use fuchsian::{Error, FrameShape, IntPolynomial, PowerSeries, Result};

use crate::args::*;

/// `println!` that stops quietly when stdout is closed.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout().lock(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

pub fn run(cli: &Cli) -> Result<bool> {
    let out = Out(cli.format);
    match &cli.command {
        Command::Poincare(a) => poincare(out, a),
        Command::Phi(a) => phi(out, a),
        Command::Dual(a) => dual(out, a),
        Command::Monodromy(a) => monodromy(out, a),
        Command::Coxeter(a) => coxeter(out, a),
        Command::Classify => classify(out),
        Command::Verify(a) => verify(out, a),
        Command::Moonshine(a) => moonshine(out, a),
        Command::Eta(a) => eta(out, a),
    }
}

#[derive(Clone, Copy)]
struct Out(Format);

impl Out {
    /// Prints `human` or the fields as one dataset line.
    fn emit(self, human: impl FnOnce() -> String, fields: Vec<(&str, String)>) {
        match self.0 {
            Format::Human => say!("{}", human()),
            Format::Machine => say!("{}", format_line(fields)),
        }
    }

    fn human(self) -> bool {
        self.0 == Format::Human
    }
}

fn pass(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.to_string()
}

fn csv(s: &PowerSeries) -> String {
    s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn weight_system(weights: &str, degrees: &str) -> Result<WeightSystem> {
    WeightSystem::new(parse_list(weights)?, parse_list(degrees)?)
}

/// Name comparison ignoring subscript markup, so `E12` finds `E_{12}`.
fn same_name(a: &str, b: &str) -> bool {
    let norm = |s: &str| s.chars().filter(|c| !"_{} ".contains(*c)).collect::<String>();
    norm(a) == norm(b)
}

/// Tabulated records matching a name, `g;alphas` or `g;alphas(h|nh)`.
fn lookup(catalog: &[SingularityRecord], key: &str) -> Vec<SingularityRecord> {
    let parsed = FuchsianSignature::parse_with_variant(key).ok();
    catalog
        .iter()
        .filter(|r| {
            r.name.as_deref().is_some_and(|n| same_name(n, key))
                || same_name(&r.display_name(), key)
                || parsed.as_ref().is_some_and(|(s, v)| &r.signature == s && (v.is_none() || *v == r.variant))
        })
        .cloned()
        .collect()
}

fn poincare(out: Out, a: &PoincareArgs) -> Result<bool> {
    let (label, rf) = match (&a.weights, &a.degrees, &a.sig) {
        (Some(w), Some(d), _) => {
            let ws = weight_system(w, d)?;
            (vec![("weights", w.clone()), ("degrees", d.clone())], poincare_from_weights(&ws).0)
        }
        (_, _, Some(s)) => {
            let sig: FuchsianSignature = s.parse()?;
            (vec![("sig", sig.to_string())], poincare_fuchsian(&sig))
        }
        _ => return Err(Error::Parse("give --weights and --degrees, or --sig".into())),
    };
    let s = series_expand(&rf, a.terms)?;
    let mut fields = label;
    fields.push(("terms", a.terms.to_string()));
    fields.push(("series", csv(&s)));
    out.emit(|| csv(&s), fields);
    Ok(true)
}

fn phi(out: Out, a: &SigArgs) -> Result<bool> {
    let catalog = load_catalog()?;
    let records = lookup(&catalog, &a.sig);
    let sig = match records.first() {
        Some(r) => r.signature.clone(),
        None => a.sig.parse()?,
    };
    let psi = psi_a(&sig.alphas);
    let p = phi_a(&sig)?;
    let shape = FrameShape::from_polynomial(&p)?;
    out.emit(
        || format!("sig {sig}\npsi_A = {psi}\nphi_A = {shape} = {p}"),
        vec![("sig", sig.to_string()), ("psi_a", psi.to_string()), ("phi_a", shape.to_string())],
    );
    for r in records.iter().filter(|r| r.is_fuchsian()) {
        let tilde = r.tilde_phi_a()?;
        let b = r.phi_m_b()?;
        out.emit(
            || format!("{}: phi_A~ = {tilde}, phi_M^b = {b}", r.display_name()),
            vec![("record", r.display_name()), ("phi_a_tilde", tilde.to_string()), ("phi_m_b", b.to_string())],
        );
    }
    Ok(true)
}

fn dual(out: Out, a: &DualArgs) -> Result<bool> {
    let fs: FrameShape = a.pi.parse()?;
    let d = fs.saito_dual(a.h)?;
    let h = a.h.unwrap_or_else(|| fs.order());
    out.emit(|| d.to_string(), vec![("pi", fs.to_string()), ("h", h.to_string()), ("dual", d.to_string())]);
    Ok(true)
}

fn monodromy(out: Out, a: &MonodromyArgs) -> Result<bool> {
    if let (Some(w), Some(d)) = (&a.weights, &a.degrees) {
        let ws = weight_system(w, d)?;
        let fs = milnor_orlik(&ws)?;
        let p = fs.to_polynomial()?;
        out.emit(
            || format!("phi_M = {fs} = {p}\nmu = {}", fs.degree()),
            vec![
                ("weights", w.clone()),
                ("degrees", d.clone()),
                ("phi_m", fs.to_string()),
                ("mu", fs.degree().to_string()),
            ],
        );
        return Ok(true);
    }
    let key = a.sig.as_deref().unwrap_or_default();
    let records = lookup(&load_catalog()?, key);
    if records.is_empty() {
        return Err(Error::Parse(format!("no tabulated singularity matches {key:?}")));
    }
    let mut ok = true;
    for r in &records {
        match phi_m_of_record(r) {
            Ok(fs) => {
                let good = fs.degree() == r.mu as i64;
                ok &= good;
                out.emit(
                    || {
                        format!(
                            "{}: phi_M = {fs}, degree {} (mu = {}) {}",
                            r.display_name(),
                            fs.degree(),
                            r.mu,
                            pass(good)
                        )
                    },
                    vec![
                        ("record", r.display_name()),
                        ("phi_m", fs.to_string()),
                        ("mu", r.mu.to_string()),
                        ("check", pass(good)),
                    ],
                );
            }
            Err(e) => {
                ok = false;
                out.emit(
                    || format!("{}: {e} FAIL", r.display_name()),
                    vec![("record", r.display_name()), ("error", e.to_string()), ("check", pass(false))],
                );
            }
        }
    }
    Ok(ok)
}

fn parse_ade(s: &str) -> Result<(AdeType, usize)> {
    let bad = || Error::Parse(format!("root system {s:?}"));
    let s = s.replace('_', "");
    let (ty, rank) = s.split_at(1);
    let ty = match ty {
        "A" => AdeType::A,
        "D" => AdeType::D,
        "E" => AdeType::E,
        _ => return Err(bad()),
    };
    Ok((ty, rank.parse().map_err(|_| bad())?))
}

fn coxeter(out: Out, a: &CoxeterArgs) -> Result<bool> {
    if let Some(ade) = &a.ade {
        let (ty, rank) = parse_ade(ade)?;
        let fs = ade_coxeter(ty, rank)?;
        out.emit(
            || format!("{}{rank}: {fs}, Coxeter number {}", ty.letter(), fs.order()),
            vec![
                ("ade", format!("{}{rank}", ty.letter())),
                ("shape", fs.to_string()),
                ("order", fs.order().to_string()),
            ],
        );
        return Ok(true);
    }
    let sig: FuchsianSignature = a.sig.as_deref().unwrap_or_default().parse()?;
    let cp: IntPolynomial = coxeter_infinity_charpoly(&sig);
    let expected = phi_a(&sig)?;
    let ok = cp == expected;
    let shape = FrameShape::from_polynomial(&cp).map(|s| s.to_string()).unwrap_or_else(|_| "-".into());
    out.emit(
        || format!("sig {sig}\ndet(t - c_inf) = {cp}\nshape {shape}\nequals phi_A: {}", pass(ok)),
        vec![("sig", sig.to_string()), ("charpoly", cp.to_string()), ("shape", shape.clone()), ("check", pass(ok))],
    );
    Ok(ok)
}

fn classify(out: Out) -> Result<bool> {
    let entries = enumerate_theorem4();
    for case in Theorem4Case::ALL {
        let block: Vec<_> = entries.iter().filter(|e| e.case == case).collect();
        if out.human() {
            say!("case {case}: {} signatures", block.len());
        }
        for e in block {
            let variants: Vec<&str> = e.variants.iter().map(|v| v.tag()).collect();
            out.emit(
                || {
                    if variants.is_empty() {
                        format!("  {}", e.signature)
                    } else {
                        format!("  {} ({})", e.signature, variants.join(", "))
                    }
                },
                vec![
                    ("case", case.roman().to_string()),
                    ("sig", e.signature.to_string()),
                    ("hyper", variants.join(",")),
                ],
            );
        }
    }
    let inp = Inputs::load()?;
    let c = suite::criterion7(&inp);
    if out.human() {
        say!("agreement with tabulated signatures: {}", pass(c.pass()));
        for f in &c.failures {
            say!("  {f}");
        }
    }
    Ok(c.pass())
}

fn verify(out: Out, a: &VerifyArgs) -> Result<bool> {
    let inp = Inputs::load()?;
    let table = match a.table {
        TableSel::One => 1,
        TableSel::Two => 2,
        TableSel::Three => 3,
        TableSel::Four => 4,
        TableSel::Five => return Ok(verify_five(out, &inp)),
        TableSel::All => return Ok(verify_all(out, &inp)),
    };
    let mut ok = true;
    for r in inp.catalog.iter().filter(|r| r.table == table) {
        let rep = verify_record(r, a.terms);
        ok &= rep.ok();
        let checks: Vec<String> = rep.checks.iter().map(|c| format!("{}={}", c.id.tag(), pass(c.ok))).collect();
        if out.human() {
            say!("{} {} {}", rep.record, checks.join(" "), pass(rep.ok()));
            for c in rep.failures() {
                say!("    {}: {}", c.id.tag(), c.detail);
            }
        } else {
            let mut line = r.to_line();
            let tags: Vec<String> = rep.checks.iter().map(|c| format!("{}:{}", c.id.tag(), pass(c.ok))).collect();
            line.push_str(&format!(";check=\"{}\"", tags.join(",")));
            say!("{line}");
        }
    }
    Ok(ok)
}

fn verify_five(out: Out, inp: &Inputs) -> bool {
    let rep = verify_table5(&inp.catalog, &inp.table5);
    for l in &rep.lines {
        out.emit(
            || {
                if l.ok() {
                    l.to_string()
                } else {
                    format!("{l}\n    {}", l.detail().replace('\n', "\n    "))
                }
            },
            vec![
                ("atl", l.atlas_label.clone()),
                ("shape", l.shape.to_string()),
                ("expected", letters(&l.expected)),
                ("got", letters(&l.got)),
                ("check", pass(l.ok())),
            ],
        );
    }
    if out.human() {
        for m in rep.malformed.iter().chain(&rep.unmatched) {
            say!("unexpected ({}) {} -> {}", m.construction, m.realizer, m.shape);
        }
        for e in &rep.errors {
            say!("error: {e}");
        }
    }
    rep.ok()
}

fn verify_all(out: Out, inp: &Inputs) -> bool {
    let mut ok = true;
    for c in suite::run_all(inp) {
        ok &= c.pass();
        out.emit(
            || {
                let mut s = c.to_string();
                for f in &c.failures {
                    s.push_str(&format!("\n    {f}"));
                }
                s
            },
            vec![
                ("criterion", c.id.to_string()),
                ("title", c.title.to_string()),
                ("summary", c.summary.clone()),
                ("check", pass(c.pass())),
            ],
        );
    }
    ok
}

fn moonshine(out: Out, a: &MoonshineArgs) -> Result<bool> {
    let inp = Inputs::load()?;
    let kinds: Vec<Construction> = match a.construction {
        ConstructionSel::A => vec![Construction::A],
        ConstructionSel::B => vec![Construction::B],
        ConstructionSel::C => vec![Construction::C],
        ConstructionSel::D => vec![Construction::D],
        ConstructionSel::E => vec![Construction::E],
        ConstructionSel::All => Construction::ALL.to_vec(),
    };
    let mut ok = true;
    for kind in kinds {
        for r in construction(kind, &inp.catalog)? {
            let row = inp.table5.iter().find(|t| t.frame_shape == r.shape);
            let atl = row.map_or("-".to_string(), |t| t.atlas_label.clone());
            let listed = row.is_some();
            ok &= listed;
            out.emit(
                || format!("({kind}) {} -> {} [{atl}]", r.realizer, r.shape),
                vec![
                    ("construction", kind.letter().to_string()),
                    ("realizer", r.realizer.clone()),
                    ("shape", r.shape.to_string()),
                    ("atl", atl.clone()),
                    ("check", pass(listed)),
                ],
            );
        }
    }
    Ok(ok)
}

fn eta(out: Out, a: &EtaArgs) -> Result<bool> {
    let fs: FrameShape = a.pi.parse()?;
    let e = eta_expansion(&fs, a.terms);
    let cs = e.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    out.emit(
        || format!("q^({}) * ({cs})", e.offset),
        vec![
            ("pi", fs.to_string()),
            ("offset", e.offset.to_string()),
            ("terms", a.terms.to_string()),
            ("coeffs", cs.clone()),
        ],
    );
    Ok(true)
}
