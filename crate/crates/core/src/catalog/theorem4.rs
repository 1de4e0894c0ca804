//! Signatures of Fuchsian singularities that are complete intersections.

use std::fmt;

use crate::graded::{FuchsianSignature, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem4Case {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl Theorem4Case {
    pub const ALL: [Theorem4Case; 7] = [
        Theorem4Case::I,
        Theorem4Case::II,
        Theorem4Case::III,
        Theorem4Case::IV,
        Theorem4Case::V,
        Theorem4Case::VI,
        Theorem4Case::VII,
    ];

    pub fn roman(self) -> &'static str {
        match self {
            Theorem4Case::I => "i",
            Theorem4Case::II => "ii",
            Theorem4Case::III => "iii",
            Theorem4Case::IV => "iv",
            Theorem4Case::V => "v",
            Theorem4Case::VI => "vi",
            Theorem4Case::VII => "vii",
        }
    }

    /// Whether `sig` satisfies the conditions of this case.
    pub fn admits(self, sig: &FuchsianSignature) -> bool {
        let a = &sig.alphas;
        let r = a.len() as u64;
        let sum: u64 = a.iter().sum();
        match (self, sig.g) {
            (Theorem4Case::I, 0) => r == 3 && a[0] == 2 && a[1] == 3 && (7..=10).contains(&a[2]),
            (Theorem4Case::II, 0) => r == 3 && a[0] == 2 && a[1] >= 4 && (9..=12).contains(&(a[1] + a[2])),
            (Theorem4Case::III, 0) => r == 3 && a[0] >= 3 && (10..=13).contains(&sum),
            (Theorem4Case::IV, 0) => r >= 4 && (9..=12).contains(&sum),
            (Theorem4Case::V, 1) => r >= 1 && sum <= r + 4,
            (Theorem4Case::VI, g @ 2..=4) => sum + g as u64 <= r + 4,
            (Theorem4Case::VII, 5) => r == 0,
            _ => false,
        }
    }
}

impl fmt::Display for Theorem4Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.roman())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem4Entry {
    pub case: Theorem4Case,
    pub signature: FuchsianSignature,
    /// Curve variants listed separately for genus at least 3.
    pub variants: Vec<Variant>,
}

/// Sorted tuples of length `r` with entries in `2..` and total at most `max_sum`.
fn tuples(r: usize, max_sum: u64) -> Vec<Vec<u64>> {
    fn go(r: usize, lo: u64, budget: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if r == 0 {
            out.push(cur.clone());
            return;
        }
        let mut a = lo;
        while a * r as u64 <= budget {
            cur.push(a);
            go(r - 1, a, budget - a, cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    go(r, 2, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Every signature satisfying one of the seven cases.
///
/// Each case bounds `sum alpha_i <= 15` and `r <= 6`, so scanning that box
/// for `g <= 5` is exhaustive.
pub fn enumerate_theorem4() -> Vec<Theorem4Entry> {
    let mut out = Vec::new();
    for case in Theorem4Case::ALL {
        for g in 0..=5u32 {
            for r in 0..=6 {
                for alphas in tuples(r, 15) {
                    let sig = FuchsianSignature { g, alphas };
                    if case.admits(&sig) {
                        let variants =
                            if g >= 3 { vec![Variant::Hyperelliptic, Variant::NonHyperelliptic] } else { Vec::new() };
                        out.push(Theorem4Entry { case, signature: sig, variants });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(case: Theorem4Case, all: &[Theorem4Entry]) -> usize {
        all.iter().filter(|e| e.case == case).count()
    }

    #[test]
    fn case_sizes() {
        let all = enumerate_theorem4();
        let sizes: Vec<usize> = Theorem4Case::ALL.iter().map(|&c| count(c, &all)).collect();
        assert_eq!(sizes, vec![4, 8, 10, 16, 11, 7, 1]);
    }

    #[test]
    fn cases_are_disjoint() {
        let all = enumerate_theorem4();
        for e in &all {
            let hits = Theorem4Case::ALL.iter().filter(|c| c.admits(&e.signature)).count();
            assert_eq!(hits, 1, "{}", e.signature);
        }
    }

    #[test]
    fn box_is_large_enough() {
        // nothing admissible just outside the scanned box
        for g in 0..=6u32 {
            for r in 0..=8 {
                for alphas in tuples(r, 18) {
                    let sig = FuchsianSignature { g, alphas };
                    let sum: u64 = sig.alphas.iter().sum();
                    if Theorem4Case::ALL.iter().any(|c| c.admits(&sig)) {
                        assert!(g <= 5 && r <= 6 && sum <= 15, "{sig}");
                    }
                }
            }
        }
    }
}
