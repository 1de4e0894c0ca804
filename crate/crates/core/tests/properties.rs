mod common;

use fuchsian::catalog::{format_line, parse_line};
use fuchsian::graded::{phi_a, FuchsianSignature};
use fuchsian::lattice::{build_fuchsian_lattice, coxeter_infinity};
use fuchsian::moonshine::eta_expansion;
use fuchsian::suite::eta_oracle;
use fuchsian::FrameShape;
use proptest::prelude::*;
use std::collections::BTreeMap;

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn dual_is_an_involution((fs, h) in common::shape_with_level(360)) {
        let d = fs.saito_dual(Some(h)).unwrap();
        prop_assert_eq!(d.saito_dual(Some(h)).unwrap(), fs.clone());
        prop_assert_eq!(d.iter().map(|(_, e)| e).sum::<i64>(), -fs.iter().map(|(_, e)| e).sum::<i64>());
    }

    #[test]
    fn dual_rejects_incompatible_levels(fs in common::small_shape(), h in 1u64..50) {
        let ok = fs.iter().all(|(m, _)| h % m == 0);
        prop_assert_eq!(fs.saito_dual(Some(h)).is_ok(), ok);
    }

    #[test]
    fn display_parse_round_trip(fs in common::small_shape()) {
        prop_assert_eq!(fs.to_string().parse::<FrameShape>().unwrap(), fs);
    }

    #[test]
    fn mul_div_and_degree(a in common::small_shape(), b in common::small_shape()) {
        prop_assert_eq!(a.mul(&b).div(&b), a.clone());
        prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
        prop_assert!(a.mul(&a.inverse()).is_one());
    }

    #[test]
    fn series_is_multiplicative(a in common::small_shape(), b in common::small_shape()) {
        prop_assert_eq!(a.mul(&b).series(40), a.series(40).mul(&b.series(40)));
    }

    #[test]
    fn polynomial_round_trip(fs in common::polynomial_shape()) {
        prop_assert!(fs.is_polynomial());
        let p = fs.to_polynomial().unwrap();
        prop_assert_eq!(p.degree().unwrap_or(0) as i64, fs.degree());
        prop_assert_eq!(FrameShape::from_polynomial(&p).unwrap(), fs);
    }

    #[test]
    fn eta_matches_oracle(a in common::small_shape(), b in common::small_shape()) {
        let ab = a.mul(&b);
        prop_assert_eq!(eta_expansion(&ab, 30), eta_oracle(&ab, 30));
        prop_assert_eq!(eta_expansion(&ab, 30), eta_expansion(&a, 30).mul(&eta_expansion(&b, 30)));
    }

    #[test]
    fn signature_display_round_trip(s in common::signature(6, 6, 30)) {
        prop_assert_eq!(s.to_string().parse::<FuchsianSignature>().unwrap(), s);
    }

    #[test]
    fn dataset_line_round_trip(vals in proptest::collection::btree_map("[a-z]{1,6}", "[A-Za-z0-9_,^/ {}]{0,12}", 1..6)) {
        let fields: BTreeMap<String, String> = vals;
        let line = format_line(fields.iter().map(|(k, v)| (k.as_str(), v.clone())));
        prop_assert_eq!(parse_line(&line).unwrap(), fields);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn coxeter_element_is_an_isometry_with_charpoly_phi_a(s in common::signature(4, 4, 11)) {
        let lat = build_fuchsian_lattice(&s);
        let (m, cp) = coxeter_infinity(&s);
        prop_assert!(lat.preserves(&m));
        prop_assert_eq!(m.charpoly(), cp.clone());
        prop_assert!(cp.is_self_reciprocal());
        prop_assert_eq!(cp, phi_a(&s).unwrap());
    }
}
