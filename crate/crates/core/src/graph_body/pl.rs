use std::cmp::Ordering;

use crate::convex_core::interval::Interval;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Convex,
    Concave,
}

impl Kind {
    pub fn flipped(self) -> Self {
        match self {
            Kind::Convex => Kind::Concave,
            Kind::Concave => Kind::Convex,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Convex => "convex",
            Kind::Concave => "concave",
        }
    }
}

/// A one-sided slope, with markers for the unbounded side at a domain end.
#[derive(Clone, Debug, PartialEq)]
pub enum Slope<S> {
    NegInf,
    Finite(S),
    PosInf,
}

impl<S: Scalar> Slope<S> {
    pub fn finite(&self) -> Option<&S> {
        match self {
            Slope::Finite(s) => Some(s),
            _ => None,
        }
    }

    fn negated(&self) -> Self {
        match self {
            Slope::NegInf => Slope::PosInf,
            Slope::PosInf => Slope::NegInf,
            Slope::Finite(s) => Slope::Finite(-s.clone()),
        }
    }

    pub fn cmp_slope(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slope::Finite(a), Slope::Finite(b)) => a.tol_cmp(b),
            (Slope::NegInf, Slope::NegInf) | (Slope::PosInf, Slope::PosInf) => Ordering::Equal,
            (Slope::NegInf, _) | (_, Slope::PosInf) => Ordering::Less,
            (Slope::PosInf, _) | (_, Slope::NegInf) => Ordering::Greater,
        }
    }
}

/// The interval `[minus, plus]` of supporting slopes of a convex function.
#[derive(Clone, Debug, PartialEq)]
pub struct Subdifferential<S> {
    pub minus: Slope<S>,
    pub plus: Slope<S>,
}

/// A continuous piecewise-linear function on a closed interval, given by its
/// breakpoints, together with its convexity kind.
#[derive(Clone, Debug, PartialEq)]
pub struct PLFunction<S> {
    points: Vec<(S, S)>,
    kind: Kind,
}

impl<S: Scalar> PLFunction<S> {
    /// Validates strictly increasing abscissae and the convexity kind.
    /// Collinear interior breakpoints are dropped.
    pub fn new(points: Vec<(S, S)>, kind: Kind) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::DegenerateInput(
                "a PL function needs at least two breakpoints".into(),
            ));
        }
        if points
            .windows(2)
            .any(|w| w[0].0.tol_cmp(&w[1].0) != Ordering::Less)
        {
            return Err(Error::DegenerateInput(
                "breakpoints must have strictly increasing abscissae".into(),
            ));
        }
        let f = Self { points, kind };
        let slopes = f.slopes();
        let bad = slopes.windows(2).any(|w| {
            let c = w[0].tol_cmp(&w[1]);
            match kind {
                Kind::Convex => c == Ordering::Greater,
                Kind::Concave => c == Ordering::Less,
            }
        });
        if bad {
            return Err(Error::KindMismatch {
                expected: kind.name(),
            });
        }
        Ok(f.simplified())
    }

    /// The affine function through `(lo, y_lo)` and `(hi, y_hi)`.
    pub fn linear(lo: S, y_lo: S, hi: S, y_hi: S, kind: Kind) -> Result<Self> {
        Self::new(vec![(lo, y_lo), (hi, y_hi)], kind)
    }

    pub fn constant(domain: &Interval<S>, c: S, kind: Kind) -> Result<Self> {
        Self::linear(domain.lo.clone(), c.clone(), domain.hi.clone(), c, kind)
    }

    fn simplified(mut self) -> Self {
        let mut out: Vec<(S, S)> = Vec::with_capacity(self.points.len());
        for p in self.points.drain(..) {
            while out.len() >= 2 {
                let a = &out[out.len() - 2];
                let b = &out[out.len() - 1];
                let s1 = (b.1.clone() - &a.1) * (p.0.clone() - &b.0);
                let s2 = (p.1.clone() - &b.1) * (b.0.clone() - &a.0);
                if s1.tol_eq(&s2) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        self.points = out;
        self
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn points(&self) -> &[(S, S)] {
        &self.points
    }

    pub fn domain(&self) -> Interval<S> {
        Interval {
            lo: self.points[0].0.clone(),
            hi: self.points[self.points.len() - 1].0.clone(),
        }
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = &S> {
        self.points.iter().map(|p| &p.0)
    }

    /// Slopes of the linear pieces, left to right.
    pub fn slopes(&self) -> Vec<S> {
        self.points
            .windows(2)
            .map(|w| (w[1].1.clone() - &w[0].1) / (w[1].0.clone() - &w[0].0))
            .collect()
    }

    pub fn eval(&self, x: &S) -> Result<S> {
        let dom = self.domain();
        if !dom.contains(x) {
            return Err(Error::OutOfDomain(x.render()));
        }
        let idx = self
            .points
            .partition_point(|p| p.0.tol_cmp(x) == Ordering::Less);
        if idx < self.points.len() && self.points[idx].0.tol_eq(x) {
            return Ok(self.points[idx].1.clone());
        }
        let (a, b) = (&self.points[idx - 1], &self.points[idx]);
        let t = (x.clone() - &a.0) / (b.0.clone() - &a.0);
        Ok(a.1.clone() + t * (b.1.clone() - &a.1))
    }

    /// Exact integral over the domain (trapezoid rule is exact for PL).
    pub fn integral(&self) -> S {
        self.points.windows(2).fold(S::zero(), |acc, w| {
            acc + (w[1].0.clone() - &w[0].0) * (w[0].1.clone() + &w[1].1).half()
        })
    }

    pub fn max_value(&self) -> S {
        self.values()
            .reduce(|a, b| if b.tol_cmp(&a) == Ordering::Greater { b } else { a })
            .expect("nonempty")
    }

    pub fn min_value(&self) -> S {
        self.values()
            .reduce(|a, b| if b.tol_cmp(&a) == Ordering::Less { b } else { a })
            .expect("nonempty")
    }

    fn values(&self) -> impl Iterator<Item = S> + '_ {
        self.points.iter().map(|p| p.1.clone())
    }

    pub fn add_const(&self, c: &S) -> Self {
        Self {
            points: self
                .points
                .iter()
                .map(|(x, y)| (x.clone(), y.clone() + c))
                .collect(),
            kind: self.kind,
        }
    }

    /// `-f`, with the kind flipped.
    pub fn negate(&self) -> Self {
        Self {
            points: self
                .points
                .iter()
                .map(|(x, y)| (x.clone(), -y.clone()))
                .collect(),
            kind: self.kind.flipped(),
        }
    }

    /// `x -> lambda * f((x - x0) / lambda)`: the graph dilated by `lambda`
    /// and shifted horizontally by `x0`.
    pub fn graph_dilate(&self, lambda: &S, x0: &S) -> Self {
        Self {
            points: self
                .points
                .iter()
                .map(|(x, y)| (lambda.clone() * x + x0, lambda.clone() * y))
                .collect(),
            kind: self.kind,
        }
    }

    /// The graph translated by `(dx, dy)`.
    pub fn translate(&self, dx: &S, dy: &S) -> Self {
        Self {
            points: self
                .points
                .iter()
                .map(|(x, y)| (x.clone() + dx, y.clone() + dy))
                .collect(),
            kind: self.kind,
        }
    }

    /// Sorted union of both breakpoint sets. Domains must agree.
    pub fn merged_breakpoints(&self, other: &Self) -> Result<Vec<S>> {
        let (da, db) = (self.domain(), other.domain());
        if !(da.lo.tol_eq(&db.lo) && da.hi.tol_eq(&db.hi)) {
            return Err(Error::DomainMismatch(format!(
                "[{}, {}] vs [{}, {}]",
                da.lo.render(),
                da.hi.render(),
                db.lo.render(),
                db.hi.render()
            )));
        }
        let mut xs: Vec<S> = self.breakpoints().chain(other.breakpoints()).cloned().collect();
        xs.sort_by(|a, b| a.tol_cmp(b));
        xs.dedup_by(|a, b| a.tol_eq(b));
        Ok(xs)
    }

    /// `self - other` on the merged breakpoints, labelled with `kind`.
    pub fn difference(&self, other: &Self, kind: Kind) -> Result<Self> {
        let xs = self.merged_breakpoints(other)?;
        let pts = xs
            .into_iter()
            .map(|x| {
                let y = self.eval(&x)? - other.eval(&x)?;
                Ok((x, y))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(pts, kind)
    }

    /// One-sided slopes at `x` of a convex function; the unbounded side at a
    /// domain endpoint is reported as an infinity marker.
    pub fn subdifferential(&self, x: &S) -> Result<Subdifferential<S>> {
        if self.kind != Kind::Convex {
            return Err(Error::KindMismatch { expected: "convex" });
        }
        let dom = self.domain();
        if !dom.contains(x) {
            return Err(Error::OutOfDomain(x.render()));
        }
        let slopes = self.slopes();
        // index of the first breakpoint >= x
        let idx = self
            .points
            .partition_point(|p| p.0.tol_cmp(x) == Ordering::Less);
        let at_breakpoint = idx < self.points.len() && self.points[idx].0.tol_eq(x);
        let (minus, plus) = if at_breakpoint {
            let minus = if idx == 0 {
                Slope::NegInf
            } else {
                Slope::Finite(slopes[idx - 1].clone())
            };
            let plus = if idx == self.points.len() - 1 {
                Slope::PosInf
            } else {
                Slope::Finite(slopes[idx].clone())
            };
            (minus, plus)
        } else {
            let s = slopes[idx - 1].clone();
            (Slope::Finite(s.clone()), Slope::Finite(s))
        };
        Ok(Subdifferential { minus, plus })
    }

    /// Supporting slopes of a concave function, `[plus, minus]` ordered as an
    /// interval: computed as the negated subdifferential of `-f`.
    pub fn superdifferential(&self, x: &S) -> Result<Subdifferential<S>> {
        if self.kind != Kind::Concave {
            return Err(Error::KindMismatch { expected: "concave" });
        }
        let d = self.negate().subdifferential(x)?;
        Ok(Subdifferential {
            minus: d.plus.negated(),
            plus: d.minus.negated(),
        })
    }
}
