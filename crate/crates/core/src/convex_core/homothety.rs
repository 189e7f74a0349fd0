use std::cmp::Ordering;

use crate::convex_core::interval::Interval;
use crate::convex_core::polygon::Polygon;
use crate::scalar::Scalar;

/// `source ≈ lambda * target + x0`, with the Hausdorff residual of the match.
#[derive(Clone, Debug, PartialEq)]
pub struct HomothetyWitness<S> {
    pub lambda: S,
    pub x0: Vec<S>,
    /// Hausdorff distance between `lambda * target + x0` and `source`.
    pub residual: f64,
}

impl<S: Scalar> HomothetyWitness<S> {
    pub fn is_exact(&self) -> bool {
        self.residual == 0.0
    }
}

/// Homothety between intervals: `s = lambda * t + x0`.
///
/// Intervals of positive length are always homothetic, so this only fails
/// when exactly one of them is a point.
pub fn homothety_find_interval<S: Scalar>(
    s: &Interval<S>,
    t: &Interval<S>,
) -> Option<HomothetyWitness<S>> {
    let ls = s.length();
    let lt = t.length();
    match (ls.sign(), lt.sign()) {
        (Ordering::Greater, Ordering::Greater) => {}
        _ => return None,
    }
    let lambda = ls / &lt;
    let x0 = s.midpoint() - lambda.clone() * &t.midpoint();
    let residual = t.dilate(&lambda, &x0).hausdorff_distance(s).to_f64();
    Some(HomothetyWitness {
        lambda,
        x0: vec![x0],
        residual,
    })
}

/// Homothety between polygons: `s = lambda * t + x0` up to `tol`.
///
/// `lambda` is the square root of the area ratio, taken exactly when it is
/// rational and otherwise rounded through `f64` (in which case an exact
/// match is impossible anyway). Homotheties map vertex centroids to vertex
/// centroids, so the translation is forced.
pub fn homothety_find_polygon<S: Scalar>(
    s: &Polygon<S>,
    t: &Polygon<S>,
    tol: &S,
) -> Option<HomothetyWitness<S>> {
    let ratio = s.volume() / &t.volume();
    let lambda = ratio
        .sqrt_exact()
        .unwrap_or_else(|| S::approx_from_f64(ratio.to_f64().sqrt()));
    if lambda.sign() != Ordering::Greater {
        return None;
    }
    let cs = s.vertex_centroid();
    let ct = t.vertex_centroid();
    let x0 = [
        cs[0].clone() - lambda.clone() * &ct[0],
        cs[1].clone() - lambda.clone() * &ct[1],
    ];
    let image = t.dilate(&lambda, &x0).ok()?;
    let d2 = image.hausdorff_distance_sq(s);
    if d2.tol_cmp(&(tol.clone() * tol)) == Ordering::Greater {
        return None;
    }
    Some(HomothetyWitness {
        lambda,
        x0: x0.to_vec(),
        residual: d2.to_f64().max(0.0).sqrt(),
    })
}
