use bonnesen_core::bounds::{full_report_3d, MeasureSource};
use bonnesen_core::convex_core::Polytope3;
use proptest::prelude::*;

fn polytope() -> impl Strategy<Value = Polytope3> {
    prop::collection::vec([-5.0f64..5.0, -5.0f64..5.0, -5.0f64..5.0], 4..12)
        .prop_filter_map("flat hull", |pts| {
            Polytope3::canonical_hull(&pts).ok().filter(|p| p.volume() > 1e-2)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solid_chain_holds(a in polytope(), b in polytope()) {
        for source in [MeasureSource::Projection, MeasureSource::Slice] {
            let r = full_report_3d(&a, &b, &[0.0, 0.0, 1.0], source).unwrap();
            prop_assert!(r.chain_holds(), "{:?}", r);
        }
    }

    #[test]
    fn solid_dilation_scales_volume(a in polytope(), l in 0.5f64..3.0) {
        let big = a.dilate(l, &[1.0, -2.0, 0.5]).unwrap();
        let rel = (big.volume() - l.powi(3) * a.volume()).abs() / big.volume();
        prop_assert!(rel < 1e-9);
        prop_assert!(a.hausdorff_distance(&a.translate(&[0.0, 0.0, 1.0])) - 1.0 < 1e-9);
    }
}
