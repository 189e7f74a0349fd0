#![allow(dead_code)]

use bonnesen_core::convex_core::Polygon;
use bonnesen_core::graph_body::{Kind, PLFunction};
use bonnesen_core::scalar::q;
use bonnesen_core::Rational;
use proptest::prelude::*;

pub fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

pub fn pos_rat() -> impl Strategy<Value = Rational> {
    (1i64..=24, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

pub fn polygon() -> impl Strategy<Value = Polygon<Rational>> {
    prop::collection::vec([rat(), rat()], 3..10)
        .prop_filter_map("degenerate hull", |pts| Polygon::canonical_hull(&pts).ok())
}

pub fn direction() -> impl Strategy<Value = [Rational; 2]> {
    [-3i64..=3, -3i64..=3]
        .prop_filter("zero direction", |d| d != &[0, 0])
        .prop_map(|[a, b]| [q(a, 1), q(b, 1)])
}

/// A nonnegative concave PL function on `[0, len]`: the minimum of a few
/// affine functions, shifted up so it stays nonnegative.
pub fn concave_on(len: Rational) -> impl Strategy<Value = PLFunction<Rational>> {
    (2usize..6, prop::collection::vec((-8i64..=8, 1i64..=4), 1..4)).prop_map(
        move |(pieces, slopes)| {
            let mut slopes: Vec<Rational> = slopes.iter().map(|&(n, d)| q(n, d)).collect();
            slopes.sort_by(|a, b| b.cmp(a));
            let k = slopes.len().min(pieces);
            let mut pts = vec![(q(0, 1), q(0, 1))];
            for (i, s) in slopes.iter().take(k).enumerate() {
                let x1 = len.clone() * q(i as i64 + 1, k as i64);
                let (x0, y0) = pts.last().unwrap().clone();
                pts.push((x1.clone(), y0 + s.clone() * (x1 - x0)));
            }
            let lowest = pts.iter().map(|p| p.1.clone()).min().unwrap();
            let lift = q(1, 1) - lowest;
            let pts = pts.into_iter().map(|(x, y)| (x, y + &lift)).collect();
            PLFunction::new(pts, Kind::Concave).unwrap()
        },
    )
}
