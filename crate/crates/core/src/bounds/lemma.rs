//! Sharpened sumset bounds for hypographs of concave functions on boxes.
//!
//! For `f >= 0` concave on `[0, m]^{d-1}` the body `A` is the region
//! between height 0 and the graph of `f`; likewise `B` for `g` on
//! `[0, n]^{d-1}`. Each bound is checked against an independently computed
//! `|A + B|` before it is returned.

use std::cmp::Ordering;

use crate::convex_core::polygon::Polygon;
use crate::convex_core::polytope3::{Point3, Polytope3};
use crate::error::{Error, Result};
use crate::graph_body::{GraphBody, Kind, PLFunction};
use crate::scalar::Scalar;

/// A lemma bound together with the sumset volume it was checked against.
#[derive(Clone, Debug, PartialEq)]
pub struct LemmaBound<S> {
    /// The correction term `Δ` (only for the slope-free form).
    pub delta: Option<S>,
    pub bound: S,
    pub vol_sum: S,
}

fn require_nonnegative_concave<S: Scalar>(f: &PLFunction<S>) -> Result<()> {
    if f.kind() != Kind::Concave {
        return Err(Error::KindMismatch { expected: "concave" });
    }
    if f.min_value().sign() == Ordering::Less {
        return Err(Error::PreconditionViolated(
            "function must be nonnegative on its domain".into(),
        ));
    }
    Ok(())
}

fn hypograph<S: Scalar>(f: &PLFunction<S>) -> Result<Polygon<S>> {
    let zero = PLFunction::constant(&f.domain(), S::zero(), Kind::Convex)?;
    GraphBody::new(zero, f.clone())?.to_polygon()
}

fn planar_sum_volume<S: Scalar>(f: &PLFunction<S>, g: &PLFunction<S>) -> Result<S> {
    Ok(hypograph(f)?.minkowski_sum(&hypograph(g)?).volume())
}

fn check_against<S: Scalar>(bound: &S, vol_sum: &S) -> Result<()> {
    if vol_sum.tol_cmp(bound) == Ordering::Less {
        return Err(Error::Inconsistent(format!(
            "sumset volume {} is below the lemma bound {}",
            vol_sum.render(),
            bound.render()
        )));
    }
    Ok(())
}

/// `(m+n)^{d-1} (|A|/m^{d-1} + |B|/n^{d-1}) + (mn/2) (m+n)^{d-2} eps`.
pub fn lemma_eps_value<S: Scalar>(vol_a: &S, vol_b: &S, m: &S, n: &S, eps: &S, d: u32) -> S {
    let pow = |x: &S, k: u32| (0..k).fold(S::one(), |acc, _| acc * x);
    let s = m.clone() + n;
    pow(&s, d - 1) * (vol_a.clone() / pow(m, d - 1) + vol_b.clone() / pow(n, d - 1))
        + (m.clone() * n).half() * pow(&s, d - 2) * eps
}

/// The slope-free planar bound `(m+n)(|A|/m + |B|/n) + Δ` with
/// `Δ = (n f(m) - (n/m) ∫f) + (m g(0) - (m/n) ∫g)`.
pub fn lemma_delta_bound<S: Scalar>(f: &PLFunction<S>, g: &PLFunction<S>) -> Result<LemmaBound<S>> {
    require_nonnegative_concave(f)?;
    require_nonnegative_concave(g)?;
    let (df, dg) = (f.domain(), g.domain());
    let (m, n) = (df.length(), dg.length());
    let (int_f, int_g) = (f.integral(), g.integral());
    let delta = (n.clone() * f.eval(&df.hi)? - n.clone() / &m * &int_f)
        + (m.clone() * g.eval(&dg.lo)? - m.clone() / &n * &int_g);
    let bound = (m.clone() + &n) * (int_f / &m + int_g / &n) + &delta;
    let vol_sum = planar_sum_volume(f, g)?;
    check_against(&bound, &vol_sum)?;
    Ok(LemmaBound {
        delta: Some(delta),
        bound,
        vol_sum,
    })
}

/// The largest `eps` with `f'(x) >= g'(y) + eps` for all `x, y`, if nonnegative.
pub fn largest_valid_eps<S: Scalar>(f: &PLFunction<S>, g: &PLFunction<S>) -> Option<S> {
    let sf = f.slopes();
    let sg = g.slopes();
    let eps = sf[sf.len() - 1].clone() - &sg[0];
    (eps.sign() != Ordering::Less).then_some(eps)
}

fn check_slope_gap<S: Scalar>(f_min: &S, g_max: &S, eps: &S) -> Result<()> {
    if eps.sign() == Ordering::Less {
        return Err(Error::PreconditionViolated("eps must be nonnegative".into()));
    }
    if f_min.tol_cmp(&(g_max.clone() + eps)) == Ordering::Less {
        return Err(Error::HypothesisViolated {
            f_slope: f_min.render(),
            g_slope: g_max.render(),
            eps: eps.render(),
        });
    }
    Ok(())
}

/// The planar slope-gap bound `(m+n)(|A|/m + |B|/n) + (mn/2) eps`, valid when
/// every slope of `f` exceeds every slope of `g` by at least `eps`.
pub fn lemma_eps_bound<S: Scalar>(
    f: &PLFunction<S>,
    g: &PLFunction<S>,
    eps: &S,
) -> Result<LemmaBound<S>> {
    require_nonnegative_concave(f)?;
    require_nonnegative_concave(g)?;
    let sf = f.slopes();
    let sg = g.slopes();
    // concave: the smallest slope is the last one, the largest the first
    check_slope_gap(&sf[sf.len() - 1], &sg[0], eps)?;
    let (m, n) = (f.domain().length(), g.domain().length());
    let bound = lemma_eps_value(&f.integral(), &g.integral(), &m, &n, eps, 2);
    let vol_sum = planar_sum_volume(f, g)?;
    check_against(&bound, &vol_sum)?;
    Ok(LemmaBound {
        delta: None,
        bound,
        vol_sum,
    })
}

/// `f(x1, x2) = first(x1) + second(x2)` on a square `[lo, lo + m]^2`: a
/// concave PL function on a tensor grid, so its directional slopes along the
/// first axis are exactly the slopes of `first`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableConcave<S> {
    pub first: PLFunction<S>,
    pub second: PLFunction<S>,
}

impl<S: Scalar> SeparableConcave<S> {
    pub fn new(first: PLFunction<S>, second: PLFunction<S>) -> Result<Self> {
        for h in [&first, &second] {
            if h.kind() != Kind::Concave {
                return Err(Error::KindMismatch { expected: "concave" });
            }
        }
        let (a, b) = (first.domain(), second.domain());
        if !(a.lo.tol_eq(&b.lo) && a.hi.tol_eq(&b.hi)) {
            return Err(Error::DomainMismatch("both factors need the same interval".into()));
        }
        Ok(Self { first, second })
    }

    pub fn side(&self) -> S {
        self.first.domain().length()
    }

    pub fn min_value(&self) -> S {
        self.first.min_value() + self.second.min_value()
    }

    /// Exact integral over the square.
    pub fn integral(&self) -> S {
        let m = self.side();
        m.clone() * self.first.integral() + m * self.second.integral()
    }

    /// Grid points of the graph and of the base, as a solid.
    pub fn hypograph(&self) -> Result<Polytope3> {
        let mut pts: Vec<Point3> = Vec::new();
        for (x, fx) in self.first.points() {
            for (y, gy) in self.second.points() {
                let (x, y) = (x.to_f64(), y.to_f64());
                pts.push([x, y, 0.0]);
                pts.push([x, y, (fx.clone() + gy).to_f64()]);
            }
        }
        Polytope3::canonical_hull(&pts)
    }
}

/// The solid slope-gap bound
/// `(m+n)^2 (|A|/m^2 + |B|/n^2) + (mn/2)(m+n) eps`.
///
/// The bound itself is exact; the sumset volume it is checked against is a
/// floating-point hull volume, compared with relative slack `1e-9`.
pub fn lemma_eps_bound_solid<S: Scalar>(
    f: &SeparableConcave<S>,
    g: &SeparableConcave<S>,
    eps: &S,
) -> Result<(S, f64)> {
    for h in [f, g] {
        if h.min_value().sign() == Ordering::Less {
            return Err(Error::PreconditionViolated(
                "function must be nonnegative on its domain".into(),
            ));
        }
    }
    let sf = f.first.slopes();
    let sg = g.first.slopes();
    check_slope_gap(&sf[sf.len() - 1], &sg[0], eps)?;
    let bound = lemma_eps_value(&f.integral(), &g.integral(), &f.side(), &g.side(), eps, 3);
    let vol_sum = f.hypograph()?.minkowski_sum(&g.hypograph()?)?.volume();
    let b = bound.to_f64();
    if vol_sum < b - 1e-9 * b.abs().max(1.0) {
        return Err(Error::Inconsistent(format!(
            "sumset volume {vol_sum} is below the lemma bound {b}"
        )));
    }
    Ok((bound, vol_sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    fn pl(pts: &[(Rational, Rational)]) -> PLFunction<Rational> {
        PLFunction::new(pts.to_vec(), Kind::Concave).unwrap()
    }

    fn ramp_up() -> PLFunction<Rational> {
        pl(&[(q(0, 1), q(0, 1)), (q(1, 1), q(1, 1))])
    }

    fn ramp_down() -> PLFunction<Rational> {
        pl(&[(q(0, 1), q(1, 1)), (q(1, 1), q(0, 1))])
    }

    #[test]
    fn delta_for_opposite_ramps() {
        let r = lemma_delta_bound(&ramp_up(), &ramp_down()).unwrap();
        assert_eq!(r.delta, Some(q(1, 1)));
        assert_eq!(r.bound, q(3, 1));
        assert_eq!(r.vol_sum, q(3, 1));
    }

    #[test]
    fn delta_vanishes_for_constants() {
        let c = pl(&[(q(0, 1), q(2, 1)), (q(3, 1), q(2, 1))]);
        let d = pl(&[(q(0, 1), q(2, 1)), (q(1, 1), q(2, 1))]);
        assert_eq!(lemma_delta_bound(&c, &d).unwrap().delta, Some(q(0, 1)));
    }

    #[test]
    fn delta_can_be_negative() {
        let tent = pl(&[(q(0, 1), q(0, 1)), (q(1, 1), q(1, 1)), (q(2, 1), q(0, 1))]);
        let one = pl(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 1))]);
        assert_eq!(lemma_delta_bound(&tent, &one).unwrap().delta, Some(q(-1, 2)));
    }

    #[test]
    fn eps_for_opposite_ramps() {
        let eps = largest_valid_eps(&ramp_up(), &ramp_down()).unwrap();
        assert_eq!(eps, q(2, 1));
        let r = lemma_eps_bound(&ramp_up(), &ramp_down(), &eps).unwrap();
        assert_eq!(r.bound, q(3, 1));
        assert_eq!(r.vol_sum, q(3, 1));
    }

    #[test]
    fn eps_for_trapezoids() {
        let f = pl(&[(q(0, 1), q(0, 1)), (q(1, 1), q(1, 2))]);
        let g = pl(&[(q(0, 1), q(1, 1)), (q(1, 1), q(3, 4))]);
        let r = lemma_eps_bound(&f, &g, &q(3, 4)).unwrap();
        assert_eq!(r.bound, q(2, 1) * (f.integral() + g.integral()) + q(3, 8));
        assert!(r.vol_sum >= r.bound);
    }

    #[test]
    fn eps_zero_is_bonnesen() {
        let f = pl(&[(q(0, 1), q(1, 1)), (q(2, 1), q(2, 1))]);
        let g = pl(&[(q(0, 1), q(1, 1)), (q(1, 1), q(1, 1))]);
        let r = lemma_eps_bound(&f, &g, &q(0, 1)).unwrap();
        assert_eq!(r.bound, q(3, 1) * (f.integral() / q(2, 1) + g.integral()));
    }

    #[test]
    fn hypothesis_is_checked() {
        let err = lemma_eps_bound(&ramp_down(), &ramp_up(), &q(0, 1)).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated { .. }));
        assert_eq!(largest_valid_eps(&ramp_down(), &ramp_up()), None);
        let tent = pl(&[(q(0, 1), q(0, 1)), (q(1, 1), q(1, 1)), (q(2, 1), q(0, 1))]);
        assert!(matches!(
            lemma_eps_bound(&tent.negate(), &ramp_up(), &q(0, 1)),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn solid_bound_for_ramps() {
        let up = SeparableConcave::new(ramp_up(), pl(&[(q(0, 1), q(0, 1)), (q(1, 1), q(0, 1))]))
            .unwrap();
        let down = SeparableConcave::new(ramp_down(), pl(&[(q(0, 1), q(0, 1)), (q(1, 1), q(0, 1))]))
            .unwrap();
        let (bound, vol) = lemma_eps_bound_solid(&up, &down, &q(2, 1)).unwrap();
        // prisms over the planar ramps: |A+B| = 2 * 3 and the bound is tight
        assert_eq!(bound, q(6, 1));
        assert!((vol - 6.0).abs() < 1e-9);
    }
}
