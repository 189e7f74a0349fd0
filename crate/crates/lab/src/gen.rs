//! Random bodies on a rational grid.

use std::f64::consts::TAU;

use bonnesen_core::convex_core::{Matrix2, Point2, Point3, Polygon, Polytope3};
use bonnesen_core::graph_body::{GraphBody, Kind, PLFunction};
use bonnesen_core::scalar::q;
use bonnesen_core::{Error, Rational, Result};
use rand::Rng;

const RETRIES: usize = 100;
/// Coordinates fall in `[-RADIUS, RADIUS]`.
const RADIUS: f64 = 2.0;

fn grid(rng: &mut impl Rng, x: f64, den: i64) -> Rational {
    // jitter within one grid cell so coarse grids still vary
    let n = (x * den as f64 + rng.gen_range(-0.5..0.5)).round() as i64;
    q(n, den)
}

/// A rational convex polygon with at most `k` vertices: `k` points at sorted
/// random angles and radii, snapped to the grid `Z / d` for a random
/// `d <= denom_bound`, then hulled.
pub fn gen_convex_polygon(rng: &mut impl Rng, k: usize, denom_bound: i64) -> Result<Polygon<Rational>> {
    if k < 3 {
        return Err(Error::PreconditionViolated("a polygon needs k >= 3".into()));
    }
    for _ in 0..RETRIES {
        let den = rng.gen_range(1..=denom_bound.max(1));
        let mut angles: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point2<Rational>> = angles
            .iter()
            .map(|t| {
                let r = RADIUS * rng.gen_range(0.3..1.0);
                [grid(rng, r * t.cos(), den), grid(rng, r * t.sin(), den)]
            })
            .collect();
        if let Ok(p) = Polygon::canonical_hull(&pts) {
            return Ok(p);
        }
    }
    Err(Error::DegenerateInput(format!(
        "no nondegenerate polygon after {RETRIES} draws"
    )))
}

/// A random float polytope: hull of `k >= 4` points in a ball.
pub fn gen_polytope3(rng: &mut impl Rng, k: usize) -> Result<Polytope3> {
    if k < 4 {
        return Err(Error::PreconditionViolated("a polytope needs k >= 4".into()));
    }
    for _ in 0..RETRIES {
        let pts: Vec<Point3> = (0..k)
            .map(|_| {
                let z: f64 = rng.gen_range(-1.0..1.0);
                let t = rng.gen_range(0.0..TAU);
                let r = RADIUS * rng.gen_range(0.3..1.0);
                let s = (1.0 - z * z).sqrt();
                [r * s * t.cos(), r * s * t.sin(), r * z]
            })
            .collect();
        if let Ok(p) = Polytope3::canonical_hull(&pts) {
            if p.volume() > 1e-3 {
                return Ok(p);
            }
        }
    }
    Err(Error::DegenerateInput(format!(
        "no solid polytope after {RETRIES} draws"
    )))
}

/// The parameters a constructed equality pair was built from:
/// `A = M stretch(lambda core + x0, alpha)`, `B = M stretch(core, beta)` with
/// the shear `M = [[1, c], [0, 1]]` and kernel `(c, 1)`.
#[derive(Clone, Debug)]
pub struct GroundTruth {
    pub core: Polygon<Rational>,
    pub lambda: Rational,
    pub x0: Point2<Rational>,
    pub alpha: Rational,
    pub beta: Rational,
    pub kernel: Point2<Rational>,
}

#[derive(Clone, Debug)]
pub struct EqualityPair {
    pub a: Polygon<Rational>,
    pub b: Polygon<Rational>,
    pub truth: GroundTruth,
}

/// Raise the ceiling of `p` (vertical fibres) by `h >= 0`.
pub fn stretch(p: &Polygon<Rational>, h: &Rational) -> Result<Polygon<Rational>> {
    GraphBody::from_polygon(p)?.stretch(h)?.to_polygon()
}

fn small_amount(rng: &mut impl Rng) -> Rational {
    if rng.gen_bool(0.3) {
        q(0, 1)
    } else {
        q(rng.gen_range(1..=12), rng.gen_range(1..=4))
    }
}

/// Build `(A, B)` from explicit parameters.
pub fn equality_pair_from(truth: GroundTruth) -> Result<EqualityPair> {
    let a = stretch(&truth.core.dilate(&truth.lambda, &truth.x0)?, &truth.alpha)?;
    let b = stretch(&truth.core, &truth.beta)?;
    let c = truth.kernel[0].clone() / &truth.kernel[1];
    let shear: Matrix2<Rational> = [[q(1, 1), c], [q(0, 1), q(1, 1)]];
    Ok(EqualityPair {
        a: a.linear_image(&shear)?,
        b: b.linear_image(&shear)?,
        truth,
    })
}

/// A random pair attaining equality in the projection bound, with its recipe.
pub fn gen_equality_pair(rng: &mut impl Rng, k: usize, denom_bound: i64) -> Result<EqualityPair> {
    let core = gen_convex_polygon(rng, k, denom_bound)?;
    let truth = GroundTruth {
        core,
        lambda: q(rng.gen_range(1..=4), rng.gen_range(1..=4)),
        x0: [
            q(rng.gen_range(-20..=20), rng.gen_range(1..=4)),
            q(rng.gen_range(-20..=20), rng.gen_range(1..=4)),
        ],
        alpha: small_amount(rng),
        beta: small_amount(rng),
        kernel: [q(rng.gen_range(-2..=2), 1), q(1, 1)],
    };
    equality_pair_from(truth)
}

/// `p` with every vertical fibre extended upward by `h`.
pub fn stretch3(p: &Polytope3, h: f64) -> Result<Polytope3> {
    if h <= 0.0 {
        return Ok(p.clone());
    }
    let mut pts = p.vertices().to_vec();
    pts.extend(p.vertices().iter().map(|v| [v[0], v[1], v[2] + h]));
    Polytope3::canonical_hull(&pts)
}

/// Solid equality pair: `A = stretch(lambda P + x0, alpha)`, `B = stretch(P, beta)`
/// along the third axis. Returns `(A, B, lambda)`.
pub fn gen_equality_pair_3d(rng: &mut impl Rng, k: usize) -> Result<(Polytope3, Polytope3, f64)> {
    let p = gen_polytope3(rng, k)?;
    let lambda = f64::from(rng.gen_range(1..=4)) / f64::from(rng.gen_range(1..=4));
    let x0 = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
    let amount = |rng: &mut dyn rand::RngCore| {
        if rng.gen_bool(0.3) {
            0.0
        } else {
            rng.gen_range(0.25..3.0)
        }
    };
    let (alpha, beta) = (amount(rng), amount(rng));
    let a = stretch3(&p.dilate(lambda, &x0)?, alpha)?;
    let b = stretch3(&p, beta)?;
    Ok((a, b, lambda))
}

/// A nonnegative concave PL function on `[0, len]` with slopes drawn from
/// `slope_range` (in quarters) and minimum value at least `1/4`.
pub fn gen_concave(
    rng: &mut impl Rng,
    len: &Rational,
    slope_range: std::ops::RangeInclusive<i64>,
) -> Result<PLFunction<Rational>> {
    let pieces = rng.gen_range(1..=4usize);
    let mut slopes: Vec<Rational> = (0..pieces)
        .map(|_| q(rng.gen_range(slope_range.clone()), 4))
        .collect();
    slopes.sort_by(|a, b| b.cmp(a));
    let mut cuts: Vec<i64> = (0..pieces - 1).map(|_| rng.gen_range(1..8)).collect();
    cuts.sort_unstable();
    cuts.dedup();
    let mut xs = vec![q(0, 1)];
    xs.extend(cuts.iter().map(|&c| len.clone() * q(c, 8)));
    xs.push(len.clone());
    let mut pts = vec![(q(0, 1), q(0, 1))];
    for (i, x) in xs.iter().enumerate().skip(1) {
        let (x_prev, y_prev) = pts[i - 1].clone();
        let s = slopes[(i - 1).min(slopes.len() - 1)].clone();
        pts.push((x.clone(), y_prev + s * (x.clone() - x_prev)));
    }
    let lowest = pts.iter().map(|p| p.1.clone()).min().expect("nonempty");
    let lift = q(rng.gen_range(1..=8), 4) - lowest;
    PLFunction::new(pts.into_iter().map(|(x, y)| (x, y + &lift)).collect(), Kind::Concave)
}

/// A regular `k`-gon inscribed in the unit circle.
pub fn regular_polygon(k: usize) -> Result<Polygon<f64>> {
    let pts: Vec<Point2<f64>> = (0..k)
        .map(|i| {
            let t = TAU * i as f64 / k as f64;
            [t.cos(), t.sin()]
        })
        .collect();
    Polygon::canonical_hull(&pts)
}
