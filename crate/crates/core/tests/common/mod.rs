#![allow(dead_code)]

use fuchsian::cyclo::divisors;
use fuchsian::graded::FuchsianSignature;
use fuchsian::FrameShape;
use proptest::prelude::*;

/// A level `h` and a frame shape supported on its divisors.
pub fn shape_with_level(max_h: u64) -> impl Strategy<Value = (FrameShape, u64)> {
    (1..=max_h).prop_flat_map(|h| {
        let ds = divisors(h);
        let n = ds.len();
        (proptest::collection::vec(-4i64..=4, n), Just(ds), Just(h))
            .prop_map(|(es, ds, h)| (FrameShape::from_pairs(ds.into_iter().zip(es)), h))
    })
}

/// Shapes with small support and exponents of either sign.
pub fn small_shape() -> impl Strategy<Value = FrameShape> {
    proptest::collection::vec((1u64..=12, -3i64..=3), 0..4).prop_map(FrameShape::from_pairs)
}

/// Products of `(1 - t^m)^k / (1 - t^e)^k` with `e | m`, which are polynomials.
pub fn polynomial_shape() -> impl Strategy<Value = FrameShape> {
    proptest::collection::vec((1u64..=30, 0usize..8, 1i64..=2), 0..4).prop_map(|parts| {
        parts.into_iter().fold(FrameShape::one(), |acc, (m, pick, k)| {
            let ds = divisors(m);
            let e = ds[pick % ds.len()];
            acc.mul(&FrameShape::from_pairs([(m, k), (e, -k)]))
        })
    })
}

pub fn signature(max_g: u32, max_r: usize, max_alpha: u64) -> impl Strategy<Value = FuchsianSignature> {
    (0..=max_g, proptest::collection::vec(2..=max_alpha, 0..=max_r)).prop_map(|(g, mut alphas)| {
        alphas.sort_unstable();
        FuchsianSignature { g, alphas }
    })
}
