use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::bounds::{full_report, BoundReport, MeasureSource};
use crate::convex_core::homothety::{homothety_find_interval, HomothetyWitness};
use crate::convex_core::polygon::{Matrix2, Point2, Polygon};
use crate::error::{Error, Result};
use crate::graph_body::{find_shear, shear_normalize, GraphBody, PLFunction, ShearMap};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphPart {
    Ceiling,
    Floor,
}

/// Why a pair does not attain equality.
#[derive(Clone, Debug, PartialEq)]
pub enum Counterevidence<S> {
    /// Ceiling or floor graphs differ from the homothetic image at abscissa `at`.
    GraphMismatch { part: GraphPart, at: S },
    /// One compressed core is flat and the other is not.
    FlatnessMismatch,
    /// The projection that realizes one body's largest chord gives the other
    /// body a strictly longer image `n_prime` than its chord `n`.
    ProjectionExceedsSlice { n: S, n_prime: S },
}

/// `A = stretch(a_core, alpha)` and `B = stretch(b_core, beta)` with
/// `a_core = lambda * b_core + x0`, all in the coordinates given by `frame`.
#[derive(Clone, Debug, PartialEq)]
pub struct StretchDecomposition<S> {
    pub a_core: GraphBody<S>,
    pub alpha: S,
    pub b_core: GraphBody<S>,
    pub beta: S,
    pub witness: HomothetyWitness<S>,
    /// Linear map from input coordinates to the coordinates of the cores.
    pub frame: Matrix2<S>,
    /// Projection recovered from a largest chord (slice form only).
    pub shear: Option<ShearMap<S>>,
}

fn inverse<S: Scalar>(m: &Matrix2<S>) -> Matrix2<S> {
    let d = m[0][0].clone() * &m[1][1] - m[0][1].clone() * &m[1][0];
    [
        [m[1][1].clone() / &d, -(m[0][1].clone() / &d)],
        [-(m[1][0].clone() / &d), m[0][0].clone() / &d],
    ]
}

fn mat_mul<S: Scalar>(a: &Matrix2<S>, b: &Matrix2<S>) -> Matrix2<S> {
    let e = |i: usize, j: usize| a[i][0].clone() * &b[0][j] + a[i][1].clone() * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

impl<S: Scalar> StretchDecomposition<S> {
    fn rebuild(&self, core: &GraphBody<S>, amount: &S) -> Result<Polygon<S>> {
        core.stretch(amount)?
            .to_polygon()?
            .linear_image(&inverse(&self.frame))
    }

    /// `stretch(a_core, alpha)` mapped back to input coordinates.
    pub fn reconstruct_a(&self) -> Result<Polygon<S>> {
        self.rebuild(&self.a_core, &self.alpha)
    }

    pub fn reconstruct_b(&self) -> Result<Polygon<S>> {
        self.rebuild(&self.b_core, &self.beta)
    }

    /// Squared Hausdorff distance between `a_core` and `lambda * b_core + x0`.
    pub fn core_residual_sq(&self) -> Result<S> {
        let shift = [self.witness.x0[0].clone(), self.witness.x0[1].clone()];
        let image = self.b_core.to_polygon()?.dilate(&self.witness.lambda, &shift)?;
        Ok(self.a_core.to_polygon()?.hausdorff_distance_sq(&image))
    }

    /// Independent check: both reconstructions match the inputs and the cores
    /// are exactly homothetic.
    pub fn verify(&self, a: &Polygon<S>, b: &Polygon<S>) -> Result<bool> {
        let tol = if S::EXACT {
            S::zero()
        } else {
            S::approx_from_f64(1e-18)
        };
        Ok(self.reconstruct_a()?.hausdorff_distance_sq(a).tol_cmp(&tol) != Ordering::Greater
            && self.reconstruct_b()?.hausdorff_distance_sq(b).tol_cmp(&tol) != Ordering::Greater
            && self.core_residual_sq()?.tol_cmp(&tol) != Ordering::Greater)
    }
}

/// Outcome of an equality decision, with the bound report it was checked against.
#[derive(Clone, Debug, PartialEq)]
pub struct EqualityVerdict<S> {
    pub equal: bool,
    pub decomposition: Option<StretchDecomposition<S>>,
    pub counterevidence: Option<Counterevidence<S>>,
    pub report: BoundReport<S>,
}

impl<S: Scalar> EqualityVerdict<S> {
    pub fn to_json(&self) -> Value {
        let d = self.decomposition.as_ref();
        let matrix = |m: &Matrix2<S>| {
            json!([
                [m[0][0].render(), m[0][1].render()],
                [m[1][0].render(), m[1][1].render()]
            ])
        };
        json!({
            "equal": self.equal,
            "lambda": d.map(|d| d.witness.lambda.render()),
            "x0": d.map(|d| d.witness.x0.iter().map(Scalar::render).collect::<Vec<_>>()),
            "alpha": d.map(|d| d.alpha.render()),
            "beta": d.map(|d| d.beta.render()),
            "gap": self.report.gap_bonnesen.render(),
            "shear": d.and_then(|d| d.shear.as_ref()).map(|s| matrix(&s.matrix)),
        })
    }
}

/// `C` with `f(x) = lambda g((x - x0)/lambda) + C` on the merged
/// breakpoints, or the first abscissa where the difference changes.
fn graph_offset<S: Scalar>(
    f: &PLFunction<S>,
    g: &PLFunction<S>,
    lambda: &S,
    x0: &S,
) -> Result<std::result::Result<S, S>> {
    let image = g.graph_dilate(lambda, x0);
    let (df, dg) = (f.domain(), image.domain());
    if !(df.lo.tol_eq(&dg.lo) && df.hi.tol_eq(&dg.hi)) {
        return Err(Error::DomainMismatch(format!(
            "[{}, {}] is not the image [{}, {}]",
            df.lo.render(),
            df.hi.render(),
            dg.lo.render(),
            dg.hi.render()
        )));
    }
    let xs = f.merged_breakpoints(&image)?;
    let c = f.eval(&xs[0])? - image.eval(&xs[0])?;
    for x in &xs[1..] {
        let d = f.eval(x)? - image.eval(x)?;
        if !d.tol_eq(&c) {
            return Ok(Err(x.clone()));
        }
    }
    // Integrating the identity over dom f gives the offset in closed form.
    let expected = f.integral() / df.length() - lambda.clone() * g.integral() / g.domain().length();
    if !expected.tol_eq(&c) {
        return Err(Error::Inconsistent(format!(
            "graph offset {} differs from the integral formula {}",
            c.render(),
            expected.render()
        )));
    }
    Ok(Ok(c))
}

/// The constant `C` with `f(x) = lambda g((x - x0)/lambda) + C`, if the graphs
/// are homothetic in that way. Requires `dom f = lambda dom g + x0`.
pub fn check_graph_homothety<S: Scalar>(
    f: &PLFunction<S>,
    g: &PLFunction<S>,
    lambda: &S,
    x0: &S,
) -> Result<Option<S>> {
    Ok(graph_offset(f, g, lambda, x0)?.ok())
}

/// Decide whether `|A + B|` equals the projection form of Bonnesen's bound
/// for projection along `kernel`, i.e. whether `A` and `B` are stretchings
/// (along `kernel`) of homothetic bodies. On equality the decomposition is
/// returned; otherwise the structural reason.
///
/// The decision is made from the geometry alone and then compared with the
/// bound gap; a disagreement is reported as [`Error::Inconsistent`].
pub fn decide_equality_projection<S: Scalar>(
    a: &Polygon<S>,
    b: &Polygon<S>,
    kernel: &Point2<S>,
) -> Result<EqualityVerdict<S>> {
    let report = full_report(a, b, kernel, MeasureSource::Projection)?;
    let frame = shear_normalize(kernel)?;
    let verdict = decide_in_frame(a, b, &frame.matrix, report)?;
    if verdict.equal != verdict.report.equality_bonnesen {
        return Err(Error::Inconsistent(format!(
            "structural verdict {} but bound gap {}",
            verdict.equal,
            verdict.report.gap_bonnesen.render()
        )));
    }
    Ok(verdict)
}

fn decide_in_frame<S: Scalar>(
    a: &Polygon<S>,
    b: &Polygon<S>,
    frame: &Matrix2<S>,
    report: BoundReport<S>,
) -> Result<EqualityVerdict<S>> {
    let ga = GraphBody::from_polygon(&a.linear_image(frame)?)?;
    let gb = GraphBody::from_polygon(&b.linear_image(frame)?)?;
    // Projections of bodies with interior are intervals of positive length,
    // which are always homothetic.
    let dom = homothety_find_interval(&ga.domain(), &gb.domain())
        .ok_or_else(|| Error::Inconsistent("projection is a point".into()))?;
    let lambda = dom.lambda.clone();
    let x0 = dom.x0[0].clone();
    let (ca, alpha) = ga.compress_to_floor();
    let (cb, beta) = gb.compress_to_floor();

    let unequal = |c: Counterevidence<S>, report: BoundReport<S>| EqualityVerdict {
        equal: false,
        decomposition: None,
        counterevidence: Some(c),
        report,
    };
    if ca.is_flat() != cb.is_flat() {
        return Ok(unequal(Counterevidence::FlatnessMismatch, report));
    }
    let (ua, la, ta) = ca.stretch(&ca.separating_stretch())?.epigraph_split()?;
    let (ub, lb, tb) = cb.stretch(&cb.separating_stretch())?.epigraph_split()?;
    if let Err(at) = graph_offset(ua.ceiling(), ub.ceiling(), &lambda, &x0)? {
        return Ok(unequal(
            Counterevidence::GraphMismatch {
                part: GraphPart::Ceiling,
                at,
            },
            report,
        ));
    }
    let c_low = match graph_offset(la.ceiling(), lb.ceiling(), &lambda, &x0)? {
        Ok(c) => c,
        Err(at) => {
            return Ok(unequal(
                Counterevidence::GraphMismatch {
                    part: GraphPart::Floor,
                    at,
                },
                report,
            ))
        }
    };
    let y0 = ta - lambda.clone() * &tb - &c_low;

    // Flat cores carry no height of their own: move part of the stretch
    // into them so both have interior.
    let (a_core, alpha, b_core, beta) = if ca.is_flat() {
        let t = {
            let r = alpha.clone() / &lambda;
            if r.tol_cmp(&beta) == Ordering::Less {
                r
            } else {
                beta.clone()
            }
        };
        let lt = lambda.clone() * &t;
        (ca.stretch(&lt)?, alpha - lt, cb.stretch(&t)?, beta - t)
    } else {
        (ca, alpha, cb, beta)
    };
    let mut decomposition = StretchDecomposition {
        a_core,
        alpha,
        b_core,
        beta,
        witness: HomothetyWitness {
            lambda,
            x0: vec![x0, y0],
            residual: 0.0,
        },
        frame: frame.clone(),
        shear: None,
    };
    let residual_sq = decomposition.core_residual_sq()?;
    decomposition.witness.residual = residual_sq.to_f64().max(0.0).sqrt();
    if S::EXACT && residual_sq.sign() != Ordering::Equal {
        return Err(Error::Inconsistent(format!(
            "assembled cores are not homothetic (squared residual {})",
            residual_sq.render()
        )));
    }
    Ok(EqualityVerdict {
        equal: true,
        decomposition: Some(decomposition),
        counterevidence: None,
        report,
    })
}

fn h<S: Scalar>(vol_a: &S, vol_b: &S, x: &S, y: &S) -> S {
    (x.clone() + y) * (vol_a.clone() / x + vol_b.clone() / y)
}

/// With `h(x, y) = (x + y)(|A|/x + |B|/y)`: whether `h(M, N') >= h(M, N)`
/// with equality only for `N' = N`. Requires positive inputs, `N <= N'` and
/// `|B|/N^2 <= |A|/M^2`, under which `h(M, .)` is increasing on `[N, inf)`.
pub fn slice_monotonicity_check<S: Scalar>(
    vol_a: &S,
    vol_b: &S,
    m: &S,
    n: &S,
    n_prime: &S,
) -> Result<bool> {
    if [vol_a, vol_b, m, n, n_prime]
        .iter()
        .any(|x| x.sign() != Ordering::Greater)
    {
        return Err(Error::PreconditionViolated("inputs must be positive".into()));
    }
    if n.tol_cmp(n_prime) == Ordering::Greater {
        return Err(Error::PreconditionViolated("N must not exceed N'".into()));
    }
    if (vol_b.clone() * m * m).tol_cmp(&(vol_a.clone() * n * n)) == Ordering::Greater {
        return Err(Error::PreconditionViolated("|B|/N^2 exceeds |A|/M^2".into()));
    }
    let base = h(vol_a, vol_b, m, n);
    let moved = h(vol_a, vol_b, m, n_prime);
    Ok(if n.tol_eq(n_prime) {
        moved.tol_eq(&base)
    } else {
        moved.tol_cmp(&base) == Ordering::Greater
    })
}

/// Rational map sending the line `normal . p = c` to the horizontal line at
/// height `c`, keeping the chord coordinate (x, or y for vertical lines).
fn slice_frame<S: Scalar>(normal: &Point2<S>) -> Result<Matrix2<S>> {
    let [a, b] = normal;
    if b.sign() != Ordering::Equal {
        Ok([[S::one(), S::zero()], [a.clone(), b.clone()]])
    } else if a.sign() != Ordering::Equal {
        Ok([[S::zero(), S::one()], [a.clone(), S::zero()]])
    } else {
        Err(Error::DegenerateInput("zero normal vector".into()))
    }
}

/// Decide whether `|A + B|` equals the slice form of Bonnesen's bound for
/// sections by lines with normal `normal`. Both bodies must already have a
/// largest such chord on the line `normal . p = 0`.
///
/// On equality the decomposition records the projection realizing it.
pub fn decide_equality_slice_2d<S: Scalar>(
    a: &Polygon<S>,
    b: &Polygon<S>,
    normal: &Point2<S>,
) -> Result<EqualityVerdict<S>> {
    let map = slice_frame(normal)?;
    let a1 = a.linear_image(&map)?;
    let b1 = b.linear_image(&map)?;
    let up = [S::zero(), S::one()];
    let mut chords = Vec::with_capacity(2);
    for (name, p) in [("A", &a1), ("B", &b1)] {
        let (_, best) = p.max_slice(&up)?;
        let here = p.slice(&up, &S::zero())?.map(|i| i.length());
        match here {
            Some(len) if len.tol_eq(&best) => chords.push(len),
            _ => {
                return Err(Error::NotAligned(format!(
                    "{name} has no largest chord on the line through the origin"
                )))
            }
        }
    }
    let (m, n) = (chords[0].clone(), chords[1].clone());
    let report = full_report(a, b, normal, MeasureSource::Slice)?;

    // Work with the body of larger |.|/chord^2 as the one to shear; ties keep order.
    let (va, vb) = (a1.volume(), b1.volume());
    let swap = (vb.clone() * &m * &m).tol_cmp(&(va.clone() * &n * &n)) == Ordering::Greater;
    let (first, second, v1, v2, c1, c2) = if swap {
        (&b1, &a1, vb, va, n, m)
    } else {
        (&a1, &b1, va, vb, m, n)
    };
    let shear = find_shear(first)?;
    let n_prime = second.project(&shear.kernel_dir)?.length();
    if !slice_monotonicity_check(&v1, &v2, &c1, &c2, &n_prime)? {
        return Err(Error::Inconsistent("slice bound is not monotone in N'".into()));
    }

    let verdict = if !n_prime.tol_eq(&c2) {
        EqualityVerdict {
            equal: false,
            decomposition: None,
            counterevidence: Some(Counterevidence::ProjectionExceedsSlice { n: c2, n_prime }),
            report,
        }
    } else {
        let frame = mat_mul(&shear.matrix, &map);
        let inner_report = full_report(&a1, &b1, &shear.kernel_dir, MeasureSource::Projection)?;
        let mut v = decide_in_frame(a, b, &frame, inner_report)?;
        if v.equal != v.report.equality_bonnesen {
            return Err(Error::Inconsistent(
                "projection verdict disagrees with its own bound gap".into(),
            ));
        }
        if let Some(d) = v.decomposition.as_mut() {
            d.shear = Some(shear);
        }
        v.report = report;
        v
    };
    if verdict.equal != verdict.report.equality_bonnesen {
        return Err(Error::Inconsistent(format!(
            "slice verdict {} but bound gap {}",
            verdict.equal,
            verdict.report.gap_bonnesen.render()
        )));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_body::Kind;
    use crate::scalar::{q, Rational};

    fn poly(v: &[(i64, i64)]) -> Polygon<Rational> {
        Polygon::canonical_hull(&v.iter().map(|&(x, y)| [q(x, 1), q(y, 1)]).collect::<Vec<_>>())
            .unwrap()
    }

    fn up() -> Point2<Rational> {
        [q(0, 1), q(1, 1)]
    }

    fn tent() -> Polygon<Rational> {
        poly(&[(0, 0), (2, 0), (1, 1)])
    }

    #[test]
    fn stretched_squares_are_equal() {
        let a = poly(&[(0, 0), (1, 0), (1, 2), (0, 2)]);
        let b = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let v = decide_equality_projection(&a, &b, &up()).unwrap();
        assert!(v.equal);
        let d = v.decomposition.as_ref().unwrap();
        assert_eq!(d.alpha, q(1, 1));
        assert_eq!(d.beta, q(0, 1));
        assert_eq!(d.witness.lambda, q(1, 1));
        assert_eq!(d.a_core.to_polygon().unwrap(), b);
        assert!(d.verify(&a, &b).unwrap());
    }

    #[test]
    fn square_and_triangle_are_unequal() {
        let a = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let b = poly(&[(0, 0), (1, 0), (0, 1)]);
        let v = decide_equality_projection(&a, &b, &up()).unwrap();
        assert!(!v.equal);
        assert_eq!(v.report.gap_bonnesen.as_scalar(), Some(q(1, 2)));
        assert!(v.counterevidence.is_some());
    }

    #[test]
    fn house_over_half_tent() {
        let b = tent()
            .dilate(&q(1, 2), &[q(0, 1), q(0, 1)])
            .unwrap();
        let house = GraphBody::from_polygon(&b).unwrap().stretch(&q(1, 4)).unwrap();
        let b = house.to_polygon().unwrap();
        let v = decide_equality_projection(&b, &tent(), &up()).unwrap();
        assert!(v.equal);
        let d = v.decomposition.unwrap();
        assert_eq!(d.witness.lambda, q(1, 2));
        assert_eq!((d.alpha.clone(), d.beta.clone()), (q(1, 4), q(0, 1)));
        let v = decide_equality_projection(&tent(), &b, &up()).unwrap();
        let d = v.decomposition.unwrap();
        assert_eq!(d.witness.lambda, q(2, 1));
        assert_eq!((d.alpha, d.beta), (q(0, 1), q(1, 4)));
        assert_eq!(v.report.gap_bonnesen.as_scalar(), Some(q(0, 1)));
    }

    #[test]
    fn sheared_kernel() {
        // the same tent pair seen along the kernel (1, 1) after shearing both
        let s = [[q(1, 1), q(1, 1)], [q(0, 1), q(1, 1)]];
        let a = tent().linear_image(&s).unwrap();
        let b = tent().dilate(&q(1, 3), &[q(5, 1), q(-2, 1)]).unwrap().linear_image(&s).unwrap();
        let v = decide_equality_projection(&a, &b, &[q(1, 1), q(1, 1)]).unwrap();
        assert!(v.equal);
        assert!(v.decomposition.unwrap().verify(&a, &b).unwrap());
    }

    #[test]
    fn graph_homothety_examples() {
        let tent_f = PLFunction::new(
            vec![(q(0, 1), q(0, 1)), (q(1, 1), q(1, 1)), (q(2, 1), q(0, 1))],
            Kind::Concave,
        )
        .unwrap();
        let one = q(1, 1);
        let zero = q(0, 1);
        assert_eq!(
            check_graph_homothety(&tent_f, &tent_f, &one, &zero).unwrap(),
            Some(q(0, 1))
        );
        let big = tent_f.graph_dilate(&q(2, 1), &zero);
        assert_eq!(
            check_graph_homothety(&big, &tent_f, &q(2, 1), &zero).unwrap(),
            Some(q(0, 1))
        );
        let lifted = tent_f.add_const(&q(3, 1));
        assert_eq!(
            check_graph_homothety(&lifted, &tent_f, &one, &zero).unwrap(),
            Some(q(3, 1))
        );
        let flat = PLFunction::new(vec![(q(0, 1), q(1, 1)), (q(2, 1), q(1, 1))], Kind::Concave)
            .unwrap();
        assert_eq!(check_graph_homothety(&flat, &tent_f, &one, &zero).unwrap(), None);
        assert!(matches!(
            check_graph_homothety(&tent_f, &tent_f, &q(2, 1), &zero),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn monotonicity_examples() {
        let one = q(1, 1);
        assert!(slice_monotonicity_check(&one, &one, &one, &one, &one).unwrap());
        assert!(slice_monotonicity_check(&one, &one, &one, &one, &q(2, 1)).unwrap());
        assert!(matches!(
            slice_monotonicity_check(&one, &q(2, 1), &one, &one, &one),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn slice_form_examples() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let v = decide_equality_slice_2d(&sq, &sq, &up()).unwrap();
        assert!(v.equal);
        let d = v.decomposition.unwrap();
        assert_eq!(d.witness.lambda, q(1, 1));
        assert_eq!(d.shear.unwrap().kernel_dir, up());

        let half = tent().dilate(&q(1, 2), &[q(0, 1), q(0, 1)]).unwrap();
        let v = decide_equality_slice_2d(&tent(), &half, &up()).unwrap();
        assert!(v.equal);
        let d = v.decomposition.unwrap();
        assert_eq!(d.witness.lambda, q(2, 1));
        assert_eq!(d.shear.unwrap().kernel_dir, up());

        let raised = sq.translate(&[q(0, 1), q(1, 2)]);
        assert!(matches!(
            decide_equality_slice_2d(&raised, &sq, &up()),
            Err(Error::NotAligned(_))
        ));
    }

    #[test]
    fn slice_form_square_against_polygonal_disk() {
        // 16-gon symmetric in both axes, so its widest horizontal chord is on the x-axis
        let mut pts = Vec::new();
        for k in 0..16 {
            let t = std::f64::consts::PI * f64::from(k) / 8.0;
            let c = Rational::approx_from_f64((t.cos() * 1e6).round() / 2e6);
            let s = Rational::approx_from_f64((t.sin() * 1e6).round() / 2e6);
            pts.push([c, s]);
        }
        let disk = Polygon::canonical_hull(&pts).unwrap();
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let v = decide_equality_slice_2d(&sq, &disk, &up()).unwrap();
        assert!(!v.equal);
        assert_eq!(v.report.n, q(1, 1));
        assert_eq!(v.report.gap_bonnesen.sign(), Ordering::Greater);
    }
}
