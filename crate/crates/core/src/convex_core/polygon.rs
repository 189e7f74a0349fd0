//! Convex polygons in canonical vertex form.
//!
//! Canonical form: counter-clockwise, no repeated or collinear vertices,
//! starting at the lexicographically least vertex (least x, then least y).
//! Two polygons are equal as sets iff their vertex sequences are equal.

use std::cmp::Ordering;

use crate::convex_core::interval::Interval;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Point2<S> = [S; 2];
pub type Matrix2<S> = [[S; 2]; 2];

pub(crate) fn sub<S: Scalar>(a: &Point2<S>, b: &Point2<S>) -> Point2<S> {
    [a[0].clone() - &b[0], a[1].clone() - &b[1]]
}

pub(crate) fn add<S: Scalar>(a: &Point2<S>, b: &Point2<S>) -> Point2<S> {
    [a[0].clone() + &b[0], a[1].clone() + &b[1]]
}

pub(crate) fn dot<S: Scalar>(a: &Point2<S>, b: &Point2<S>) -> S {
    a[0].clone() * &b[0] + a[1].clone() * &b[1]
}

/// Orientation of `c` relative to the directed line `a -> b`.
pub(crate) fn orient<S: Scalar>(a: &Point2<S>, b: &Point2<S>, c: &Point2<S>) -> Ordering {
    S::orient_sign(a, b, c)
}

fn lex_cmp<S: Scalar>(a: &Point2<S>, b: &Point2<S>) -> Ordering {
    a[0].tol_cmp(&b[0]).then_with(|| a[1].tol_cmp(&b[1]))
}

fn point_eq<S: Scalar>(a: &Point2<S>, b: &Point2<S>) -> bool {
    lex_cmp(a, b) == Ordering::Equal
}

pub(crate) fn apply<S: Scalar>(m: &Matrix2<S>, p: &Point2<S>) -> Point2<S> {
    [
        m[0][0].clone() * &p[0] + m[0][1].clone() * &p[1],
        m[1][0].clone() * &p[0] + m[1][1].clone() * &p[1],
    ]
}

pub(crate) fn det<S: Scalar>(m: &Matrix2<S>) -> S {
    m[0][0].clone() * &m[1][1] - m[0][1].clone() * &m[1][0]
}

/// The volume-preserving linear map that sends `kernel` to the vertical (y) axis.
///
/// For `kernel = (a, b)` with `b != 0` this is the shear `(x, y) -> (x - (a/b) y, y)`;
/// a horizontal kernel is handled by swapping the axes (determinant -1).
/// Projection along `kernel` is "apply this map, keep the x coordinate".
pub fn vertical_normalizer<S: Scalar>(kernel: &Point2<S>) -> Result<Matrix2<S>> {
    let [a, b] = kernel;
    if b.sign() != Ordering::Equal {
        Ok([
            [S::one(), -(a.clone() / b)],
            [S::zero(), S::one()],
        ])
    } else if a.sign() != Ordering::Equal {
        Ok([[S::zero(), S::one()], [S::one(), S::zero()]])
    } else {
        Err(Error::DegenerateInput("zero direction vector".into()))
    }
}

/// Coordinate used to measure points of the line `normal . p = const`:
/// x unless the line is vertical, in which case y.
fn chord_axis<S: Scalar>(normal: &Point2<S>) -> Result<usize> {
    if normal[1].sign() != Ordering::Equal {
        Ok(0)
    } else if normal[0].sign() != Ordering::Equal {
        Ok(1)
    } else {
        Err(Error::DegenerateInput("zero normal vector".into()))
    }
}

/// A full-dimensional convex polygon in canonical form.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon<S> {
    vertices: Vec<Point2<S>>,
}

impl<S: Scalar> Polygon<S> {
    /// Convex hull of `points` in canonical form (Andrew's monotone chain).
    pub fn canonical_hull(points: &[Point2<S>]) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "need at least 3 points, got {}",
                points.len()
            )));
        }
        let mut pts: Vec<Point2<S>> = points.to_vec();
        if pts.iter().flatten().any(|c| c.partial_cmp(c).is_none()) {
            return Err(Error::DegenerateInput("non-finite coordinate".into()));
        }
        pts.sort_by(lex_cmp);
        pts.dedup_by(|a, b| point_eq(a, b));
        if pts.len() < 3 {
            return Err(Error::DegenerateInput("fewer than 3 distinct points".into()));
        }

        let mut hull: Vec<Point2<S>> = Vec::with_capacity(pts.len() + 1);
        for p in pts.iter() {
            while hull.len() >= 2
                && orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p) != Ordering::Greater
            {
                hull.pop();
            }
            hull.push(p.clone());
        }
        let lower_len = hull.len() + 1;
        for p in pts.iter().rev().skip(1) {
            while hull.len() >= lower_len
                && orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p) != Ordering::Greater
            {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();

        if hull.len() < 3 {
            return Err(Error::DegenerateInput("points are collinear".into()));
        }
        let poly = Self { vertices: hull };
        if poly.double_area().sign() != Ordering::Greater {
            return Err(Error::DegenerateInput("hull has zero area".into()));
        }
        Ok(poly)
    }

    /// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
    pub fn rectangle(x0: S, y0: S, x1: S, y1: S) -> Result<Self> {
        Self::canonical_hull(&[
            [x0.clone(), y0.clone()],
            [x1.clone(), y0],
            [x1, y1.clone()],
            [x0, y1],
        ])
    }

    pub fn vertices(&self) -> &[Point2<S>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn double_area(&self) -> S {
        S::shoelace(&self.vertices)
    }

    /// Exact shoelace area.
    pub fn volume(&self) -> S {
        self.double_area().half()
    }

    /// Edge vectors `v[i+1] - v[i]`, cyclically.
    pub fn edges(&self) -> Vec<Point2<S>> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| sub(&self.vertices[(i + 1) % n], &self.vertices[i]))
            .collect()
    }

    pub fn translate(&self, t: &Point2<S>) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| add(v, t)).collect(),
        }
    }

    /// `lambda * self + shift` for `lambda > 0`; canonical order is preserved.
    pub fn dilate(&self, lambda: &S, shift: &Point2<S>) -> Result<Self> {
        if lambda.sign() != Ordering::Greater {
            return Err(Error::PreconditionViolated("dilation factor must be positive".into()));
        }
        Ok(Self {
            vertices: self
                .vertices
                .iter()
                .map(|v| {
                    [
                        lambda.clone() * &v[0] + &shift[0],
                        lambda.clone() * &v[1] + &shift[1],
                    ]
                })
                .collect(),
        })
    }

    /// Minkowski sum by merging the two edge sequences in angular order.
    ///
    /// Debug builds cross-check the result against the hull of all pairwise
    /// vertex sums; the two must agree vertex for vertex.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let ea = self.edges();
        let eb = other.edges();
        let mut out = Vec::with_capacity(ea.len() + eb.len());
        let mut cur = add(&self.vertices[0], &other.vertices[0]);
        let (mut i, mut j) = (0, 0);
        while i < ea.len() || j < eb.len() {
            let step = if i == ea.len() {
                j += 1;
                eb[j - 1].clone()
            } else if j == eb.len() {
                i += 1;
                ea[i - 1].clone()
            } else {
                match angle_cmp(&ea[i], &eb[j]) {
                    Ordering::Less => {
                        i += 1;
                        ea[i - 1].clone()
                    }
                    Ordering::Greater => {
                        j += 1;
                        eb[j - 1].clone()
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        add(&ea[i - 1], &eb[j - 1])
                    }
                }
            };
            out.push(cur.clone());
            cur = add(&cur, &step);
        }
        let sum = Self { vertices: out };
        if S::EXACT {
            debug_assert_eq!(
                Some(&sum),
                self.minkowski_sum_by_hull(other).ok().as_ref(),
                "edge-merge Minkowski sum disagrees with the pairwise-sum hull"
            );
        }
        sum
    }

    /// Minkowski sum as the hull of all pairwise vertex sums (the slow oracle).
    pub fn minkowski_sum_by_hull(&self, other: &Self) -> Result<Self> {
        let pts: Vec<Point2<S>> = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| add(a, b)))
            .collect();
        Self::canonical_hull(&pts)
    }

    /// Image under the linear map `m` (rows are output coordinates).
    pub fn linear_image(&self, m: &Matrix2<S>) -> Result<Self> {
        let pts: Vec<Point2<S>> = self.vertices.iter().map(|v| apply(m, v)).collect();
        Self::canonical_hull(&pts).map_err(|_| {
            Error::DegenerateInput("linear image is not full-dimensional; use project".into())
        })
    }

    /// Projection along `kernel` onto the complementary coordinate axis.
    ///
    /// The image coordinate is the first row of [`vertical_normalizer`], i.e.
    /// `x - (a/b) y` for `kernel = (a, b)` with `b != 0`, and `y` otherwise.
    pub fn project(&self, kernel: &Point2<S>) -> Result<Interval<S>> {
        let m = vertical_normalizer(kernel)?;
        let row = &m[0];
        self.support_interval(row)
    }

    /// `[min, max]` of `dir . v` over the polygon.
    pub fn support_interval(&self, dir: &Point2<S>) -> Result<Interval<S>> {
        let mut vals = self.vertices.iter().map(|v| dot(dir, v));
        let first = vals.next().expect("polygon has vertices");
        let (lo, hi) = vals.fold((first.clone(), first), |(lo, hi), x| {
            let lo = if x.tol_cmp(&lo) == Ordering::Less { x.clone() } else { lo };
            let hi = if x.tol_cmp(&hi) == Ordering::Greater { x } else { hi };
            (lo, hi)
        });
        Interval::new(lo, hi)
    }

    /// The chord `{p in P : normal . p = offset}` in line coordinates, or `None`
    /// when the line misses the polygon.
    ///
    /// Points on the line are measured by their x coordinate, or by y when the
    /// line is vertical.
    pub fn slice(&self, normal: &Point2<S>, offset: &S) -> Result<Option<Interval<S>>> {
        let axis = chord_axis(normal)?;
        let heights: Vec<S> = self.vertices.iter().map(|v| dot(normal, v)).collect();
        self.slice_at(&heights, axis, offset)
    }

    /// Slice given the precomputed `normal . v` of every vertex.
    fn slice_at(&self, heights: &[S], axis: usize, offset: &S) -> Result<Option<Interval<S>>> {
        let n = self.vertices.len();
        let vals: Vec<S> = heights.iter().map(|h| h.clone() - offset).collect();
        let mut coords: Vec<S> = Vec::new();
        for i in 0..n {
            let j = (i + 1) % n;
            let (si, sj) = (vals[i].sign(), vals[j].sign());
            if si == Ordering::Equal {
                coords.push(self.vertices[i][axis].clone());
            }
            if si != Ordering::Equal && sj != Ordering::Equal && si != sj {
                let t = vals[i].clone() / (vals[i].clone() - &vals[j]);
                let a = &self.vertices[i][axis];
                let b = &self.vertices[j][axis];
                coords.push(a.clone() + t * (b.clone() - a));
            }
        }
        if coords.is_empty() {
            return Ok(None);
        }
        let mut lo = coords[0].clone();
        let mut hi = coords[0].clone();
        for c in coords.into_iter().skip(1) {
            if c.tol_cmp(&lo) == Ordering::Less {
                lo = c;
            } else if c.tol_cmp(&hi) == Ordering::Greater {
                hi = c;
            }
        }
        Interval::new(lo, hi).map(Some)
    }

    /// Length of the slice at `offset`, zero when the line misses.
    pub fn slice_measure(&self, normal: &Point2<S>, offset: &S) -> Result<S> {
        Ok(self
            .slice(normal, offset)?
            .map(|i| i.length())
            .unwrap_or_else(S::zero))
    }

    /// The maximal chord orthogonal to `normal`: `(offset, length)`.
    ///
    /// The chord length is concave and piecewise linear in the offset with
    /// breakpoints at vertex offsets, so the maximum is attained at one of
    /// them. Ties report the smallest attaining offset.
    pub fn max_slice(&self, normal: &Point2<S>) -> Result<(S, S)> {
        let axis = chord_axis(normal)?;
        let heights: Vec<S> = self.vertices.iter().map(|v| dot(normal, v)).collect();
        let mut offsets = heights.clone();
        offsets.sort_by(|a, b| a.tol_cmp(b));
        offsets.dedup_by(|a, b| a.tol_eq(b));
        // Along sorted offsets the lengths rise strictly, stay flat only at
        // the maximum, then fall strictly; find the first index that does
        // not rise.
        let len = |i: usize| -> Result<S> {
            Ok(self
                .slice_at(&heights, axis, &offsets[i])?
                .map(|c| c.length())
                .unwrap_or_else(S::zero))
        };
        let (mut lo, mut hi) = (0, offsets.len() - 1);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if len(mid + 1)?.tol_cmp(&len(mid)?) == Ordering::Greater {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        let best = len(lo)?;
        Ok((offsets.swap_remove(lo), best))
    }

    /// Closed containment test.
    pub fn contains(&self, p: &Point2<S>) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| orient(&self.vertices[i], &self.vertices[(i + 1) % n], p) != Ordering::Less)
    }

    /// Squared Euclidean distance from `p` to the polygon (zero inside).
    pub fn distance_sq_to(&self, p: &Point2<S>) -> S {
        if self.contains(p) {
            return S::zero();
        }
        let n = self.vertices.len();
        (0..n)
            .map(|i| segment_distance_sq(p, &self.vertices[i], &self.vertices[(i + 1) % n]))
            .reduce(|a, b| if b.tol_cmp(&a) == Ordering::Less { b } else { a })
            .expect("polygon has vertices")
    }

    /// Squared Hausdorff distance, exact over rationals.
    ///
    /// The distance to a convex set is convex, so each one-sided supremum is
    /// attained at a vertex.
    pub fn hausdorff_distance_sq(&self, other: &Self) -> S {
        let one_sided = |a: &Self, b: &Self| {
            a.vertices
                .iter()
                .map(|v| b.distance_sq_to(v))
                .reduce(|x, y| if y.tol_cmp(&x) == Ordering::Greater { y } else { x })
                .expect("polygon has vertices")
        };
        let d1 = one_sided(self, other);
        let d2 = one_sided(other, self);
        if d2.tol_cmp(&d1) == Ordering::Greater {
            d2
        } else {
            d1
        }
    }

    pub fn hausdorff_distance(&self, other: &Self) -> f64 {
        self.hausdorff_distance_sq(other).to_f64().max(0.0).sqrt()
    }

    /// Mean of the vertices; affine-equivariant, so homotheties map it along.
    pub fn vertex_centroid(&self) -> Point2<S> {
        let n = S::from_int(self.vertices.len() as i64);
        let sum = self
            .vertices
            .iter()
            .fold([S::zero(), S::zero()], |acc, v| add(&acc, v));
        [sum[0].clone() / &n, sum[1].clone() / &n]
    }

    /// Convert the coordinates to another field.
    pub fn map_field<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Result<Polygon<T>> {
        let pts: Vec<Point2<T>> = self.vertices.iter().map(|v| [f(&v[0]), f(&v[1])]).collect();
        Polygon::canonical_hull(&pts)
    }

    pub fn to_f64(&self) -> Result<Polygon<f64>> {
        self.map_field(|x| x.to_f64())
    }
}

fn half_plane<S: Scalar>(d: &Point2<S>) -> u8 {
    match (d[0].sign(), d[1].sign()) {
        (Ordering::Greater, _) | (Ordering::Equal, Ordering::Greater) => 0,
        _ => 1,
    }
}

/// Order of edge directions by polar angle in `(-pi/2, 3pi/2]`, the range
/// swept by a canonical polygon's edges starting from its lex-least vertex.
fn angle_cmp<S: Scalar>(a: &Point2<S>, b: &Point2<S>) -> Ordering {
    half_plane(a)
        .cmp(&half_plane(b))
        .then_with(|| S::cross_sign(b, a))
}

pub(crate) fn segment_distance_sq<S: Scalar>(p: &Point2<S>, a: &Point2<S>, b: &Point2<S>) -> S {
    let d = sub(b, a);
    let w = sub(p, a);
    let len2 = dot(&d, &d);
    let t = dot(&w, &d);
    let closest = if t.sign() != Ordering::Greater || len2.sign() == Ordering::Equal {
        a.clone()
    } else if t.tol_cmp(&len2) != Ordering::Less {
        b.clone()
    } else {
        let t = t / &len2;
        [a[0].clone() + t.clone() * &d[0], a[1].clone() + t * &d[1]]
    };
    let e = sub(p, &closest);
    dot(&e, &e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    fn pts(v: &[(i64, i64)]) -> Vec<Point2<Rational>> {
        v.iter().map(|&(x, y)| [q(x, 1), q(y, 1)]).collect()
    }

    fn unit_square() -> Polygon<Rational> {
        Polygon::canonical_hull(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap()
    }

    fn triangle() -> Polygon<Rational> {
        Polygon::canonical_hull(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap()
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let mut p = pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        p.push([q(1, 2), q(1, 2)]);
        let sq = Polygon::canonical_hull(&p).unwrap();
        assert_eq!(sq.vertices(), pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]).as_slice());

        let tri = Polygon::canonical_hull(&pts(&[(0, 0), (2, 0), (1, 1), (1, 0)])).unwrap();
        assert_eq!(tri.vertices(), pts(&[(0, 0), (2, 0), (1, 1)]).as_slice());
    }

    #[test]
    fn collinear_input_is_degenerate() {
        let err = Polygon::canonical_hull(&pts(&[(0, 0), (1, 0), (2, 0)])).unwrap_err();
        assert!(matches!(err, Error::DegenerateInput(_)));
    }

    #[test]
    fn canonical_start_is_lex_min() {
        let p = Polygon::canonical_hull(&pts(&[(3, 1), (0, 2), (0, 0), (2, 3)])).unwrap();
        assert_eq!(p.vertices()[0], [q(0, 1), q(0, 1)]);
    }

    #[test]
    fn areas() {
        assert_eq!(unit_square().volume(), q(1, 1));
        assert_eq!(triangle().volume(), q(1, 2));
    }

    #[test]
    fn square_plus_triangle_is_pentagon() {
        let sum = unit_square().minkowski_sum(&triangle());
        assert_eq!(
            sum.vertices(),
            pts(&[(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]).as_slice()
        );
        assert_eq!(sum.volume(), q(7, 2));
    }

    #[test]
    fn square_plus_square() {
        let sum = unit_square().minkowski_sum(&unit_square());
        assert_eq!(sum.vertices(), pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]).as_slice());
        assert_eq!(sum.volume(), q(4, 1));
    }

    #[test]
    fn sum_with_tiny_body_translates() {
        // A point is not a polygon; a shrinking triangle shows the translation limit
        // and the exact identity A + (B + p) = (A + B) + p.
        let p = [q(3, 1), q(-2, 5)];
        let a = triangle();
        let b = unit_square();
        assert_eq!(a.minkowski_sum(&b.translate(&p)), a.minkowski_sum(&b).translate(&p));
    }

    #[test]
    fn linear_images() {
        let sq = unit_square();
        let id = [[q(1, 1), q(0, 1)], [q(0, 1), q(1, 1)]];
        assert_eq!(sq.linear_image(&id).unwrap(), sq);
        let shear = [[q(1, 1), q(1, 1)], [q(0, 1), q(1, 1)]];
        assert_eq!(sq.linear_image(&shear).unwrap().volume(), q(1, 1));
        let rot = [[q(0, 1), q(-1, 1)], [q(1, 1), q(0, 1)]];
        let t = triangle();
        assert_eq!(t.linear_image(&rot).unwrap().volume(), t.volume());
        let flat = [[q(1, 1), q(0, 1)], [q(0, 1), q(0, 1)]];
        assert!(sq.linear_image(&flat).is_err());
    }

    #[test]
    fn projections() {
        let sq = unit_square();
        let i = sq.project(&[q(0, 1), q(1, 1)]).unwrap();
        assert_eq!((i.lo, i.hi), (q(0, 1), q(1, 1)));
        let tent = Polygon::canonical_hull(&pts(&[(0, 0), (2, 0), (1, 1)])).unwrap();
        assert_eq!(tent.project(&[q(0, 1), q(1, 1)]).unwrap().length(), q(2, 1));
        // along (1,1) the image coordinate is x - y: values 0, 2, 0
        let i = tent.project(&[q(1, 1), q(1, 1)]).unwrap();
        assert_eq!((i.lo, i.hi), (q(0, 1), q(2, 1)));
        // horizontal kernel keeps y
        let i = tent.project(&[q(1, 1), q(0, 1)]).unwrap();
        assert_eq!((i.lo, i.hi), (q(0, 1), q(1, 1)));
    }

    #[test]
    fn slices() {
        let sq = unit_square();
        let up = [q(0, 1), q(1, 1)];
        assert_eq!(sq.slice_measure(&up, &q(1, 2)).unwrap(), q(1, 1));
        assert!(sq.slice(&up, &q(2, 1)).unwrap().is_none());
        let tent = Polygon::canonical_hull(&pts(&[(0, 0), (2, 0), (1, 1)])).unwrap();
        for t in [q(0, 1), q(1, 4), q(1, 2), q(1, 1)] {
            let chord = tent.slice(&up, &t).unwrap().unwrap();
            assert_eq!(chord.lo, t.clone());
            assert_eq!(chord.hi, q(2, 1) - &t);
        }
    }

    #[test]
    fn max_slices() {
        let sq = unit_square();
        assert_eq!(sq.max_slice(&[q(1, 1), q(0, 1)]).unwrap(), (q(0, 1), q(1, 1)));
        let tent = Polygon::canonical_hull(&pts(&[(0, 0), (2, 0), (1, 1)])).unwrap();
        assert_eq!(tent.max_slice(&[q(0, 1), q(1, 1)]).unwrap(), (q(0, 1), q(2, 1)));
        // diagonal normal: chord x = y through the origin, x-extent [0, 1/2]
        let (off, len) = triangle().max_slice(&[q(1, 1), q(-1, 1)]).unwrap();
        assert_eq!(off, q(0, 1));
        assert_eq!(len, q(1, 2));
    }

    #[test]
    fn hausdorff_examples() {
        let sq = unit_square();
        assert_eq!(sq.hausdorff_distance_sq(&sq), q(0, 1));
        let moved = sq.translate(&[q(3, 1), q(0, 1)]);
        assert_eq!(sq.hausdorff_distance_sq(&moved), q(9, 1));
        let big = Polygon::rectangle(q(0, 1), q(0, 1), q(2, 1), q(2, 1)).unwrap();
        assert_eq!(sq.hausdorff_distance_sq(&big), q(2, 1));
        assert!((sq.hausdorff_distance(&big) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn float_field_runs_the_same_code() {
        let sq = Polygon::<f64>::canonical_hull(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
            .unwrap();
        let tri = Polygon::<f64>::canonical_hull(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert!((sq.minkowski_sum(&tri).volume() - 3.5).abs() < 1e-12);
    }
}
