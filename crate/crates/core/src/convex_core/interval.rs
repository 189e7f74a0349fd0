use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A closed interval `[lo, hi]`, the one-dimensional convex body.
///
/// Zero-length intervals are allowed: they appear as chords through a single
/// vertex and as domains of flat intermediates.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval<S> {
    pub lo: S,
    pub hi: S,
}

impl<S: Scalar> Interval<S> {
    pub fn new(lo: S, hi: S) -> Result<Self> {
        if lo.tol_cmp(&hi) == Ordering::Greater {
            return Err(Error::DegenerateInput(format!(
                "interval with lo {} > hi {}",
                lo.render(),
                hi.render()
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn length(&self) -> S {
        self.hi.clone() - &self.lo
    }

    pub fn midpoint(&self) -> S {
        (self.lo.clone() + &self.hi).half()
    }

    pub fn contains(&self, x: &S) -> bool {
        self.lo.tol_cmp(x) != Ordering::Greater && x.tol_cmp(&self.hi) != Ordering::Greater
    }

    /// `lambda * self + shift` for `lambda > 0`.
    pub fn dilate(&self, lambda: &S, shift: &S) -> Self {
        Self {
            lo: lambda.clone() * &self.lo + shift,
            hi: lambda.clone() * &self.hi + shift,
        }
    }

    pub fn minkowski_sum(&self, other: &Self) -> Self {
        Self {
            lo: self.lo.clone() + &other.lo,
            hi: self.hi.clone() + &other.hi,
        }
    }

    /// Hausdorff distance between two intervals.
    pub fn hausdorff_distance(&self, other: &Self) -> S {
        let a = (self.lo.clone() - &other.lo).abs_val();
        let b = (self.hi.clone() - &other.hi).abs_val();
        if a.tol_cmp(&b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}
