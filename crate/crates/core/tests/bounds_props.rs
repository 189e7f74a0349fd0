mod common;

use std::cmp::Ordering;

use bonnesen_core::bounds::{
    compare_surds, full_report, largest_valid_eps, lemma_delta_bound, lemma_eps_bound,
    refinement_compare, MeasureSource,
};
use bonnesen_core::convex_core::Polygon;
use bonnesen_core::graph_body::{GraphBody, Kind, PLFunction};
use bonnesen_core::scalar::q;
use bonnesen_core::Rational;
use common::{concave_on, direction, polygon, pos_rat};
use proptest::prelude::*;

fn hypograph(f: &PLFunction<Rational>) -> Polygon<Rational> {
    let zero = PLFunction::constant(&f.domain(), q(0, 1), Kind::Convex).unwrap();
    GraphBody::new(zero, f.clone()).unwrap().to_polygon().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chain_holds_exactly(a in polygon(), b in polygon(), dir in direction()) {
        for source in [MeasureSource::Projection, MeasureSource::Slice] {
            let r = full_report(&a, &b, &dir, source).unwrap();
            prop_assert!(r.exact);
            prop_assert!(r.gap_bonnesen.sign() != Ordering::Less);
            prop_assert!(compare_surds(&r.bonnesen, &r.bm) != Ordering::Less);
            prop_assert!(r.gap_bm.sign() != Ordering::Less);
        }
    }

    #[test]
    fn report_is_scale_equivariant(a in polygon(), b in polygon(), l in pos_rat(), dir in direction()) {
        let z = [q(0, 1), q(0, 1)];
        let r = full_report(&a, &b, &dir, MeasureSource::Projection).unwrap();
        let s = full_report(
            &a.dilate(&l, &z).unwrap(),
            &b.dilate(&l, &z).unwrap(),
            &dir,
            MeasureSource::Projection,
        ).unwrap();
        let l2 = l.clone() * &l;
        prop_assert_eq!(s.vol_sum, r.vol_sum * &l2);
        prop_assert_eq!(s.bonnesen.as_scalar().unwrap(), r.bonnesen.as_scalar().unwrap() * &l2);
        prop_assert_eq!(s.equality_bonnesen, r.equality_bonnesen);
    }

    #[test]
    fn equal_measure_ratio_makes_bounds_coincide(va in pos_rat(), m in pos_rat(), l in 1i64..=4) {
        // |B| = |A| l^2 and N = M l: the refinement is an equality
        let vb = va.clone() * q(l * l, 1);
        let n = m.clone() * q(l, 1);
        prop_assert_eq!(refinement_compare(&va, &vb, &m, &n, 2).unwrap(), (true, true));
    }

    #[test]
    fn delta_lemma_holds(
        (f, g) in (pos_rat(), pos_rat()).prop_flat_map(|(m, n)| (concave_on(m), concave_on(n)))
    ) {
        let vol_sum = hypograph(&f).minkowski_sum(&hypograph(&g)).volume();
        let r = lemma_delta_bound(&f, &g).unwrap();
        prop_assert_eq!(&r.vol_sum, &vol_sum);
        prop_assert!(vol_sum >= r.bound);
        if let Some(eps) = largest_valid_eps(&f, &g) {
            let e = lemma_eps_bound(&f, &g, &eps).unwrap();
            prop_assert!(vol_sum >= e.bound);
        }
    }
}
