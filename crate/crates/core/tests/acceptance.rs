//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 9 combines the deterministic sweep in the library with
//! randomized property runs from a fixed seed.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use fuchsian::lattice::{build_fuchsian_lattice, coxeter_infinity_charpoly};
use fuchsian::moonshine::eta_expansion;
use fuchsian::suite::{self, isometry_failures, CriterionOutcome, Inputs, ETA_TERMS};
use fuchsian::FrameShape;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

const PROPTEST_CASES: u32 = 256;

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases: PROPTEST_CASES, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    )
}

fn randomized_properties() -> Vec<String> {
    let mut failures = Vec::new();
    let mut record = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(format!("{name}: {e}"));
        }
    };
    record(
        "dual involution",
        runner()
            .run(&common::shape_with_level(240), |(fs, h)| {
                let twice = fs.saito_dual(Some(h)).and_then(|d| d.saito_dual(Some(h)));
                prop_check(twice.as_ref() == Ok(&fs))
            })
            .map_err(|e| e.to_string()),
    );
    record(
        "polynomial round trip",
        runner()
            .run(&common::polynomial_shape(), |fs| {
                let back = fs.to_polynomial().and_then(|p| FrameShape::from_polynomial(&p));
                prop_check(back.as_ref() == Ok(&fs))
            })
            .map_err(|e| e.to_string()),
    );
    record(
        "isometries",
        runner()
            .run(&common::signature(4, 4, 9), |s| {
                let cp = coxeter_infinity_charpoly(&s);
                prop_check(isometry_failures(&s).is_empty() && cp.degree() == Some(build_fuchsian_lattice(&s).rank()))
            })
            .map_err(|e| e.to_string()),
    );
    record(
        "eta oracle",
        runner()
            .run(&(common::small_shape(), common::small_shape()), |(a, b)| {
                let ab = eta_expansion(&a.mul(&b), ETA_TERMS);
                let ok = ab == suite::eta_oracle(&a.mul(&b), ETA_TERMS)
                    && ab == eta_expansion(&a, ETA_TERMS).mul(&eta_expansion(&b, ETA_TERMS));
                prop_check(ok)
            })
            .map_err(|e| e.to_string()),
    );
    failures
}

fn prop_check(ok: bool) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail("property violated"))
    }
}

fn report(outcome: &CriterionOutcome, started: Instant) {
    println!("{outcome} [{:.1}s]", started.elapsed().as_secs_f64());
    for f in &outcome.failures {
        println!("    {f}");
    }
}

fn main() -> ExitCode {
    let inp = match Inputs::load() {
        Ok(inp) => inp,
        Err(e) => {
            println!("cannot load datasets: {e}");
            return ExitCode::FAILURE;
        }
    };
    let runs: [fn(&Inputs) -> CriterionOutcome; 8] = [
        suite::criterion1,
        |_| suite::criterion2(),
        suite::criterion3,
        suite::criterion4,
        suite::criterion5,
        suite::criterion6,
        suite::criterion7,
        suite::criterion8,
    ];
    let mut all_pass = true;
    for run in runs {
        let t = Instant::now();
        let o = run(&inp);
        all_pass &= o.pass();
        report(&o, t);
    }
    let t = Instant::now();
    let mut c9 = suite::criterion9(&inp);
    let random = randomized_properties();
    c9.summary = format!("{}; {PROPTEST_CASES} seeded cases per property, {} violations", c9.summary, random.len());
    c9.failures.extend(random);
    all_pass &= c9.pass();
    report(&c9, t);
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
