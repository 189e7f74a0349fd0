use std::cmp::Ordering;

use crate::convex_core::polygon::{apply, det, vertical_normalizer, Matrix2, Point2, Polygon};
use crate::error::{Error, Result};
use crate::graph_body::body::GraphBody;
use crate::graph_body::pl::Slope;
use crate::scalar::Scalar;

/// A linear map with determinant ±1 that sends `kernel_dir` to the vertical axis.
#[derive(Clone, Debug, PartialEq)]
pub struct ShearMap<S> {
    pub matrix: Matrix2<S>,
    pub kernel_dir: Point2<S>,
}

impl<S: Scalar> ShearMap<S> {
    pub fn apply(&self, p: &Point2<S>) -> Point2<S> {
        apply(&self.matrix, p)
    }

    pub fn det(&self) -> S {
        det(&self.matrix)
    }

    /// The inverse map (exact, since the determinant is ±1).
    pub fn inverse_matrix(&self) -> Matrix2<S> {
        let d = self.det();
        let m = &self.matrix;
        [
            [m[1][1].clone() / &d, -(m[0][1].clone() / &d)],
            [-(m[1][0].clone() / &d), m[0][0].clone() / &d],
        ]
    }
}

/// The normalizing map for projection along `kernel`: afterwards the
/// projection is onto the first coordinate and fibres are vertical.
pub fn shear_normalize<S: Scalar>(kernel: &Point2<S>) -> Result<ShearMap<S>> {
    Ok(ShearMap {
        matrix: vertical_normalizer(kernel)?,
        kernel_dir: kernel.clone(),
    })
}

/// Translate `p` so that its largest chord orthogonal to `normal` lies on
/// the line `normal . x = 0`. Returns the translated body and the shift.
pub fn align_max_slice<S: Scalar>(
    p: &Polygon<S>,
    normal: &Point2<S>,
) -> Result<(Polygon<S>, Point2<S>)> {
    let (t, _) = p.max_slice(normal)?;
    let n2 = normal[0].clone() * &normal[0] + normal[1].clone() * &normal[1];
    let k = -(t / &n2);
    let shift = [k.clone() * &normal[0], k * &normal[1]];
    Ok((p.translate(&shift), shift))
}

/// The closed interval of slopes `s` for which projecting along `(s, 1)`
/// maps `p` onto its chord on the x-axis.
///
/// `p` must have its largest horizontal chord on the x-axis.
pub fn feasible_shear_slopes<S: Scalar>(p: &Polygon<S>) -> Result<(S, S)> {
    let up = [S::zero(), S::one()];
    let (_, best) = p.max_slice(&up)?;
    let here = p.slice_measure(&up, &S::zero())?;
    if p.slice(&up, &S::zero())?.is_none() || here.tol_cmp(&best) != Ordering::Equal {
        return Err(Error::PreconditionViolated(format!(
            "chord on the x-axis has length {}, the largest is {}",
            here.render(),
            best.render()
        )));
    }
    // Transpose so the chord endpoints become floor and ceiling functions of the height.
    let swap = [[S::zero(), S::one()], [S::one(), S::zero()]];
    let sideways = GraphBody::from_polygon(&p.linear_image(&swap)?)?;
    let left = sideways.floor().subdifferential(&S::zero())?;
    let right = sideways.ceiling().superdifferential(&S::zero())?;
    let lo = max_slope(&left.minus, &right.minus);
    let hi = min_slope(&left.plus, &right.plus);
    match (lo, hi) {
        (Slope::Finite(lo), Slope::Finite(hi)) if lo.tol_cmp(&hi) != Ordering::Greater => {
            Ok((lo, hi))
        }
        _ => Err(Error::Inconsistent(
            "empty set of feasible shear slopes at a maximal chord".into(),
        )),
    }
}

fn max_slope<S: Scalar>(a: &Slope<S>, b: &Slope<S>) -> Slope<S> {
    if a.cmp_slope(b) == Ordering::Less {
        b.clone()
    } else {
        a.clone()
    }
}

fn min_slope<S: Scalar>(a: &Slope<S>, b: &Slope<S>) -> Slope<S> {
    if a.cmp_slope(b) == Ordering::Greater {
        b.clone()
    } else {
        a.clone()
    }
}

/// A projection direction `(s, 1)` whose image of `p` equals the chord of
/// `p` on the x-axis, with `s` the midpoint of the feasible slope interval.
///
/// Slopes are measured as horizontal displacement per unit height.
pub fn find_shear<S: Scalar>(p: &Polygon<S>) -> Result<ShearMap<S>> {
    let (lo, hi) = feasible_shear_slopes(p)?;
    let s = (lo + &hi).half();
    shear_normalize(&[s, S::one()])
}
