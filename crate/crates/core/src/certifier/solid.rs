//! Equality decision for solids, in floating point.
//!
//! Verdicts here are tolerance-based (relative `1e-9`) and do not certify;
//! they mirror the planar procedure on float polytopes.

use crate::bounds::{full_report_3d, BoundReport, MeasureSource, FLOAT_EQUALITY_TOL};
use crate::convex_core::homothety::HomothetyWitness;
use crate::convex_core::polygon::Polygon;
use crate::convex_core::polytope3::{
    homothety_find_3d, vertical_normalizer3, Matrix3, Point3, Polytope3,
};
use crate::convex_core::homothety::homothety_find_polygon;
use crate::error::{Error, Result};

/// Solid analogue of the planar stretch decomposition, in the coordinates
/// given by `frame` (the kernel direction is the third axis there).
#[derive(Clone, Debug)]
pub struct SolidDecomposition {
    pub a_core: Polytope3,
    pub alpha: f64,
    pub b_core: Polytope3,
    pub beta: f64,
    pub witness: HomothetyWitness<f64>,
    pub frame: Matrix3,
}

#[derive(Clone, Debug)]
pub struct SolidVerdict {
    pub equal: bool,
    pub decomposition: Option<SolidDecomposition>,
    /// Hausdorff residual of the best core homothety candidate, when one
    /// could be formed.
    pub residual: Option<f64>,
    pub report: BoundReport<f64>,
}

/// Fibre `[floor, ceiling]` above `(x, y)`, from the lower and upper facet planes.
fn fibre(p: &Polytope3, x: f64, y: f64) -> (f64, f64) {
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for (n, o) in p.face_planes() {
        if n[2].abs() <= 1e-12 {
            continue;
        }
        let z = (o - n[0] * x - n[1] * y) / n[2];
        if n[2] < 0.0 {
            lo = lo.max(z);
        } else {
            hi = hi.min(z);
        }
    }
    (lo, hi)
}

struct Compressed {
    /// `(x, y, floor, ceiling)` above every vertex position.
    samples: Vec<[f64; 4]>,
    alpha: f64,
    domain: Polygon<f64>,
    scale: f64,
}

impl Compressed {
    fn of(p: &Polytope3) -> Result<Self> {
        let samples: Vec<[f64; 4]> = p
            .vertices()
            .iter()
            .map(|v| {
                let (lo, hi) = fibre(p, v[0], v[1]);
                [v[0], v[1], lo, hi]
            })
            .collect();
        // The fibre length is concave, so its minimum is at a domain vertex.
        let alpha = samples
            .iter()
            .map(|s| s[3] - s[2])
            .fold(f64::INFINITY, f64::min)
            .max(0.0);
        let domain = p.project(&[0.0, 0.0, 1.0])?;
        let scale = p
            .vertices()
            .iter()
            .flatten()
            .fold(1.0f64, |m, c| m.max(c.abs()));
        Ok(Self {
            samples,
            alpha,
            domain,
            scale,
        })
    }

    /// The compressed body raised by `lift`, or `None` if it is flat.
    fn core(&self, lift: f64) -> Option<Polytope3> {
        let pts: Vec<Point3> = self
            .samples
            .iter()
            .flat_map(|s| [[s[0], s[1], s[2]], [s[0], s[1], s[3] - self.alpha + lift]])
            .collect();
        let core = Polytope3::canonical_hull(&pts).ok()?;
        (core.volume() > FLOAT_EQUALITY_TOL * self.scale.powi(3)).then_some(core)
    }
}

/// Decide (within tolerance) whether `|A + B|` equals the projection form of
/// the solid Bonnesen bound for projection along `kernel`.
pub fn decide_equality_projection_3d(
    a: &Polytope3,
    b: &Polytope3,
    kernel: &Point3,
) -> Result<SolidVerdict> {
    let report = full_report_3d(a, b, kernel, MeasureSource::Projection)?;
    let frame = vertical_normalizer3(kernel)?;
    let ca = Compressed::of(&a.linear_image(&frame)?)?;
    let cb = Compressed::of(&b.linear_image(&frame)?)?;
    let tol = FLOAT_EQUALITY_TOL * ca.scale.max(cb.scale);

    let cores = match (ca.core(0.0), cb.core(0.0)) {
        (Some(x), Some(y)) => Some((x, ca.alpha, y, cb.alpha)),
        (None, None) => {
            // Constant-thickness bodies: give the cores part of the stretch.
            homothety_find_polygon(&ca.domain, &cb.domain, &tol).and_then(|w| {
                let t = cb.alpha.min(ca.alpha / w.lambda);
                let lt = w.lambda * t;
                Some((ca.core(lt)?, ca.alpha - lt, cb.core(t)?, cb.alpha - t))
            })
        }
        _ => None,
    };
    let (decomposition, residual) = match cores {
        None => (None, None),
        Some((a_core, alpha, b_core, beta)) => match homothety_find_3d(&a_core, &b_core, tol) {
            Some(witness) => {
                let r = witness.residual;
                (
                    Some(SolidDecomposition {
                        a_core,
                        alpha,
                        b_core,
                        beta,
                        witness,
                        frame,
                    }),
                    Some(r),
                )
            }
            None => {
                let loose = homothety_find_3d(&a_core, &b_core, f64::INFINITY).map(|w| w.residual);
                (None, loose)
            }
        },
    };
    let equal = decomposition.is_some();
    if equal != report.equality_bonnesen {
        return Err(Error::Inconsistent(format!(
            "structural verdict {equal} but bound gap {}",
            report.gap_bonnesen.to_f64()
        )));
    }
    Ok(SolidVerdict {
        equal,
        decomposition,
        residual,
        report,
    })
}
