use std::cmp::Ordering;

use crate::convex_core::interval::Interval;
use crate::convex_core::polygon::{Point2, Polygon};
use crate::error::{Error, Result};
use crate::graph_body::pl::{Kind, PLFunction};
use crate::scalar::Scalar;

/// A planar convex body `{(x, y) : floor(x) <= y <= ceiling(x)}` over an
/// interval domain, with a convex floor and a concave ceiling.
///
/// A body whose ceiling coincides with its floor is *flat*: it has no
/// interior and cannot be turned back into a polygon, but arises when a
/// constant-thickness body is compressed.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphBody<S> {
    floor: PLFunction<S>,
    ceiling: PLFunction<S>,
    flat: bool,
}

impl<S: Scalar> GraphBody<S> {
    pub fn new(floor: PLFunction<S>, ceiling: PLFunction<S>) -> Result<Self> {
        if floor.kind() != Kind::Convex {
            return Err(Error::KindMismatch { expected: "convex" });
        }
        if ceiling.kind() != Kind::Concave {
            return Err(Error::KindMismatch { expected: "concave" });
        }
        let xs = floor.merged_breakpoints(&ceiling)?;
        let mut flat = true;
        for x in &xs {
            match ceiling.eval(x)?.tol_cmp(&floor.eval(x)?) {
                Ordering::Less => {
                    return Err(Error::PreconditionViolated(format!(
                        "ceiling below floor at {}",
                        x.render()
                    )))
                }
                Ordering::Greater => flat = false,
                Ordering::Equal => {}
            }
        }
        Ok(Self {
            floor,
            ceiling,
            flat,
        })
    }

    /// Floor and ceiling read off the lower and upper boundary chains of a
    /// polygon, with the vertical direction as the fibre.
    pub fn from_polygon(p: &Polygon<S>) -> Result<Self> {
        let v = p.vertices();
        let n = v.len();
        let max_x = v
            .iter()
            .map(|p| &p[0])
            .fold(&v[0][0], |m, x| if x.tol_cmp(m) == Ordering::Greater { x } else { m });
        // Canonical order starts at the lowest leftmost vertex and runs
        // counter-clockwise, so the lower chain comes first.
        let first_right = v.iter().position(|p| p[0].tol_eq(max_x)).expect("max exists");
        let last_right = if first_right + 1 < n && v[first_right + 1][0].tol_eq(max_x) {
            first_right + 1
        } else {
            first_right
        };
        let lower: Vec<(S, S)> = v[..=first_right]
            .iter()
            .map(|p| (p[0].clone(), p[1].clone()))
            .collect();
        let mut upper: Vec<(S, S)> = v[last_right..]
            .iter()
            .map(|p| (p[0].clone(), p[1].clone()))
            .collect();
        if !v[n - 1][0].tol_eq(&v[0][0]) {
            upper.push((v[0][0].clone(), v[0][1].clone()));
        }
        upper.reverse();
        Self::new(
            PLFunction::new(lower, Kind::Convex)?,
            PLFunction::new(upper, Kind::Concave)?,
        )
    }

    pub fn to_polygon(&self) -> Result<Polygon<S>> {
        if self.flat {
            return Err(Error::DegenerateInput("flat body has no interior".into()));
        }
        let pts: Vec<Point2<S>> = self
            .floor
            .points()
            .iter()
            .chain(self.ceiling.points().iter())
            .map(|(x, y)| [x.clone(), y.clone()])
            .collect();
        Polygon::canonical_hull(&pts)
    }

    pub fn floor(&self) -> &PLFunction<S> {
        &self.floor
    }

    pub fn ceiling(&self) -> &PLFunction<S> {
        &self.ceiling
    }

    pub fn domain(&self) -> Interval<S> {
        self.floor.domain()
    }

    pub fn is_flat(&self) -> bool {
        self.flat
    }

    pub fn volume(&self) -> S {
        self.ceiling.integral() - self.floor.integral()
    }

    /// Raise the ceiling by `h >= 0`.
    pub fn stretch(&self, h: &S) -> Result<Self> {
        if h.sign() == Ordering::Less {
            return Err(Error::NegativeAmount(h.render()));
        }
        Ok(Self {
            floor: self.floor.clone(),
            ceiling: self.ceiling.add_const(h),
            flat: self.flat && h.sign() == Ordering::Equal,
        })
    }

    /// The fibre length `ceiling - floor`, a concave PL function.
    pub fn chord_gap(&self) -> PLFunction<S> {
        self.ceiling
            .difference(&self.floor, Kind::Concave)
            .expect("floor and ceiling share a domain")
    }

    /// The compression: every fibre moved down to rest on height zero.
    pub fn compression(&self) -> Result<Self> {
        let zero = PLFunction::constant(&self.domain(), S::zero(), Kind::Convex)?;
        Self::new(zero, self.chord_gap())
    }

    /// Lower the ceiling by the smallest fibre length `alpha`; returns the
    /// compressed body and `alpha`. Stretching the result by `alpha` gives
    /// back `self`.
    pub fn compress_to_floor(&self) -> (Self, S) {
        let gap = self.chord_gap();
        let alpha = gap.min_value();
        let flat = gap.max_value().tol_eq(&alpha);
        let body = Self {
            floor: self.floor.clone(),
            ceiling: self.ceiling.add_const(&-alpha.clone()),
            flat,
        };
        (body, alpha)
    }

    /// Split a body whose floor lies strictly below its ceiling at the level
    /// `t` halfway between the floor's maximum and the ceiling's minimum.
    ///
    /// Returns `(upper, lower)` measured from that level: `upper` has floor 0
    /// and ceiling `ceiling - t`, `lower` has floor 0 and ceiling `t - floor`
    /// (the part below the level, reflected). Also returns `t`.
    pub fn epigraph_split(&self) -> Result<(Self, Self, S)> {
        let fmax = self.floor.max_value();
        let cmin = self.ceiling.min_value();
        if fmax.tol_cmp(&cmin) != Ordering::Less {
            return Err(Error::PreconditionViolated(format!(
                "floor maximum {} is not below ceiling minimum {}",
                fmax.render(),
                cmin.render()
            )));
        }
        let t = (fmax + &cmin).half();
        let zero = PLFunction::constant(&self.domain(), S::zero(), Kind::Convex)?;
        let upper = Self::new(zero.clone(), self.ceiling.add_const(&-t.clone()))?;
        let lower = Self::new(zero, self.floor.negate().add_const(&t))?;
        Ok((upper, lower, t))
    }

    /// Stretch amount that makes the body splittable: `(max floor - min ceiling)^+ + 1`.
    pub fn separating_stretch(&self) -> S {
        let overlap = self.floor.max_value() - self.ceiling.min_value();
        let overlap = if overlap.sign() == Ordering::Greater {
            overlap
        } else {
            S::zero()
        };
        overlap + S::one()
    }

    pub fn translate(&self, d: &Point2<S>) -> Self {
        Self {
            floor: self.floor.translate(&d[0], &d[1]),
            ceiling: self.ceiling.translate(&d[0], &d[1]),
            flat: self.flat,
        }
    }

    /// `lambda * self + shift`.
    pub fn dilate(&self, lambda: &S, shift: &Point2<S>) -> Self {
        Self {
            floor: self.floor.graph_dilate(lambda, &shift[0]).add_const(&shift[1]),
            ceiling: self.ceiling.graph_dilate(lambda, &shift[0]).add_const(&shift[1]),
            flat: self.flat,
        }
    }
}
