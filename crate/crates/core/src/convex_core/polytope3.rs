//! Convex polytopes in three dimensions, over `f64`.
//!
//! Hulls are built incrementally with a tolerance scaled to the input's
//! extent. All measures are approximate; callers compare them with explicit
//! tolerances.

use crate::convex_core::homothety::HomothetyWitness;
use crate::convex_core::polygon::Polygon;
use crate::error::{Error, Result};

pub type Point3 = [f64; 3];
pub type Matrix3 = [[f64; 3]; 3];

/// Relative tolerance for plane-side tests, scaled by the point-set extent.
const REL_EPS: f64 = 1e-10;

fn sub3(a: &Point3, b: &Point3) -> Point3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn add3(a: &Point3, b: &Point3) -> Point3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn scale3(a: &Point3, s: f64) -> Point3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn dot3(a: &Point3, b: &Point3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: &Point3, b: &Point3) -> Point3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(a: &Point3) -> f64 {
    dot3(a, a).sqrt()
}

fn apply3(m: &Matrix3, p: &Point3) -> Point3 {
    [dot3(&m[0], p), dot3(&m[1], p), dot3(&m[2], p)]
}

fn extent(points: &[Point3]) -> f64 {
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for p in points {
        for k in 0..3 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    (0..3).map(|k| hi[k] - lo[k]).fold(0.0, f64::max).max(1e-300)
}

/// Volume-preserving (|det| = 1) map sending `kernel` to the third axis.
///
/// With `j` the last index where `kernel[j] != 0`, the first two output
/// coordinates are `x_i - (kernel[i] / kernel[j]) x_j` for the other two
/// indices `i` in increasing order, and the third is `x_j`.
pub fn vertical_normalizer3(kernel: &Point3) -> Result<Matrix3> {
    let j = (0..3)
        .rev()
        .find(|&k| kernel[k] != 0.0)
        .ok_or_else(|| Error::DegenerateInput("zero direction vector".into()))?;
    let mut m = [[0.0; 3]; 3];
    for (row, i) in (0..3).filter(|&i| i != j).enumerate() {
        m[row][i] = 1.0;
        m[row][j] = -kernel[i] / kernel[j];
    }
    m[2][j] = 1.0;
    Ok(m)
}

#[derive(Clone, Debug)]
struct Face {
    v: [usize; 3],
    normal: Point3,
    offset: f64,
}

impl Face {
    fn new(points: &[Point3], v: [usize; 3]) -> Self {
        let n = cross3(&sub3(&points[v[1]], &points[v[0]]), &sub3(&points[v[2]], &points[v[0]]));
        let len = norm3(&n);
        let normal = scale3(&n, 1.0 / len);
        let offset = dot3(&normal, &points[v[0]]);
        Self { v, normal, offset }
    }

    fn distance(&self, p: &Point3) -> f64 {
        dot3(&self.normal, p) - self.offset
    }
}

/// A plane section of a solid: its outline in two plane coordinates and area.
#[derive(Clone, Debug)]
pub struct PlaneSection {
    pub vertices: Vec<[f64; 2]>,
    pub area: f64,
}

/// A full-dimensional convex polytope: extreme vertices and an outward
/// triangulated boundary.
#[derive(Clone, Debug)]
pub struct Polytope3 {
    vertices: Vec<Point3>,
    faces: Vec<[usize; 3]>,
    normals: Vec<Point3>,
    offsets: Vec<f64>,
    eps: f64,
}

impl Polytope3 {
    /// Convex hull of `points`, keeping only extreme vertices.
    pub fn canonical_hull(points: &[Point3]) -> Result<Self> {
        if points.len() < 4 {
            return Err(Error::DegenerateInput(format!(
                "need at least 4 points, got {}",
                points.len()
            )));
        }
        if points.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::DegenerateInput("non-finite coordinate".into()));
        }
        let first = incremental_hull(points)?;
        let extreme = first.extreme_vertices();
        if extreme.len() == first.vertices.len() {
            return Ok(first);
        }
        incremental_hull(&extreme)
    }

    /// Axis-aligned box `[lo, hi]`.
    pub fn cuboid(lo: Point3, hi: Point3) -> Result<Self> {
        let mut pts = Vec::with_capacity(8);
        for &x in &[lo[0], hi[0]] {
            for &y in &[lo[1], hi[1]] {
                for &z in &[lo[2], hi[2]] {
                    pts.push([x, y, z]);
                }
            }
        }
        Self::canonical_hull(&pts)
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    /// Outward-oriented boundary triangles (indices into `vertices`).
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    /// Unit outward normal and offset of every boundary triangle.
    pub fn face_planes(&self) -> impl Iterator<Item = (Point3, f64)> + '_ {
        self.normals.iter().copied().zip(self.offsets.iter().copied())
    }

    /// Tolerance used for plane-side tests on this body.
    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn vertex_centroid(&self) -> Point3 {
        let s = self.vertices.iter().fold([0.0; 3], |acc, v| add3(&acc, v));
        scale3(&s, 1.0 / self.vertices.len() as f64)
    }

    /// Volume by tetrahedra from the vertex centroid.
    pub fn volume(&self) -> f64 {
        let c = self.vertex_centroid();
        self.faces
            .iter()
            .map(|f| {
                let a = sub3(&self.vertices[f[0]], &c);
                let b = sub3(&self.vertices[f[1]], &c);
                let d = sub3(&self.vertices[f[2]], &c);
                dot3(&a, &cross3(&b, &d))
            })
            .sum::<f64>()
            / 6.0
    }

    pub fn translate(&self, t: &Point3) -> Self {
        let mut out = self.clone();
        for v in out.vertices.iter_mut() {
            *v = add3(v, t);
        }
        for (n, o) in out.normals.iter().zip(out.offsets.iter_mut()) {
            *o += dot3(n, t);
        }
        out
    }

    pub fn dilate(&self, lambda: f64, shift: &Point3) -> Result<Self> {
        if lambda.is_nan() || lambda <= 0.0 {
            return Err(Error::PreconditionViolated("dilation factor must be positive".into()));
        }
        let pts: Vec<Point3> = self
            .vertices
            .iter()
            .map(|v| add3(&scale3(v, lambda), shift))
            .collect();
        Self::canonical_hull(&pts)
    }

    /// Minkowski sum as the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        let pts: Vec<Point3> = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| add3(a, b)))
            .collect();
        Self::canonical_hull(&pts)
    }

    pub fn linear_image(&self, m: &Matrix3) -> Result<Self> {
        let pts: Vec<Point3> = self.vertices.iter().map(|v| apply3(m, v)).collect();
        Self::canonical_hull(&pts)
    }

    /// Projection along `kernel` onto the first two coordinates of
    /// [`vertical_normalizer3`].
    pub fn project(&self, kernel: &Point3) -> Result<Polygon<f64>> {
        let m = vertical_normalizer3(kernel)?;
        let pts: Vec<[f64; 2]> = self
            .vertices
            .iter()
            .map(|v| {
                let w = apply3(&m, v);
                [w[0], w[1]]
            })
            .collect();
        Polygon::canonical_hull(&pts)
    }

    /// Closed containment up to the body's tolerance.
    pub fn contains(&self, p: &Point3) -> bool {
        self.face_planes().all(|(n, o)| dot3(&n, p) - o <= self.eps)
    }

    /// Euclidean distance from `p` to the body (zero inside).
    pub fn distance_to(&self, p: &Point3) -> f64 {
        if self.contains(p) {
            return 0.0;
        }
        self.faces
            .iter()
            .map(|f| {
                let c = closest_on_triangle(
                    p,
                    &self.vertices[f[0]],
                    &self.vertices[f[1]],
                    &self.vertices[f[2]],
                );
                norm3(&sub3(p, &c))
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn hausdorff_distance(&self, other: &Self) -> f64 {
        let one_sided = |a: &Self, b: &Self| {
            a.vertices
                .iter()
                .map(|v| b.distance_to(v))
                .fold(0.0, f64::max)
        };
        one_sided(self, other).max(one_sided(other, self))
    }

    /// Section by the plane `normal . p = offset`, or `None` if it misses.
    ///
    /// The section is expressed in the two coordinates left after dropping
    /// the last index where `normal` is nonzero; its area is measured in
    /// those coordinates, which rescales every section with the same normal
    /// by the same factor.
    pub fn slice(&self, normal: &Point3, offset: f64) -> Result<Option<PlaneSection>> {
        let j = (0..3)
            .rev()
            .find(|&k| normal[k] != 0.0)
            .ok_or_else(|| Error::DegenerateInput("zero normal vector".into()))?;
        let keep: Vec<usize> = (0..3).filter(|&i| i != j).collect();
        let tol = self.eps * norm3(normal);
        let vals: Vec<f64> = self.vertices.iter().map(|v| dot3(normal, v) - offset).collect();
        let mut pts: Vec<[f64; 2]> = Vec::new();
        let mut push = |p: &Point3| pts.push([p[keep[0]], p[keep[1]]]);
        for (i, v) in self.vertices.iter().enumerate() {
            if vals[i].abs() <= tol {
                push(v);
            }
        }
        for f in &self.faces {
            for k in 0..3 {
                // every boundary edge appears once in each orientation
                let (a, b) = (f[k], f[(k + 1) % 3]);
                let (sa, sb) = (vals[a], vals[b]);
                if a < b && ((sa > tol && sb < -tol) || (sa < -tol && sb > tol)) {
                    let t = sa / (sa - sb);
                    let d = sub3(&self.vertices[b], &self.vertices[a]);
                    push(&add3(&self.vertices[a], &scale3(&d, t)));
                }
            }
        }
        if pts.is_empty() {
            return Ok(None);
        }
        Ok(Some(match Polygon::canonical_hull(&pts) {
            Ok(section) => PlaneSection {
                area: section.volume(),
                vertices: section.vertices().to_vec(),
            },
            Err(_) => PlaneSection {
                vertices: pts,
                area: 0.0,
            },
        }))
    }

    pub fn slice_measure(&self, normal: &Point3, offset: f64) -> Result<f64> {
        Ok(self.slice(normal, offset)?.map(|s| s.area).unwrap_or(0.0))
    }

    /// The largest section orthogonal to `normal`: `(offset, area)`.
    ///
    /// The square root of the section area is concave in the offset, so the
    /// best vertex offset is refined by ternary search over its neighbouring
    /// vertex offsets until the bracket is narrower than `1e-12` (or a few
    /// ulps of the offsets, whichever is larger). Ties keep the smallest
    /// offset.
    pub fn max_slice(&self, normal: &Point3) -> Result<(f64, f64)> {
        let mut offsets: Vec<f64> = self.vertices.iter().map(|v| dot3(normal, v)).collect();
        offsets.sort_by(f64::total_cmp);
        let spread = (offsets[offsets.len() - 1] - offsets[0]).abs();
        let merge_tol = self.eps * norm3(normal);
        offsets.dedup_by(|a, b| (*a - *b).abs() <= merge_tol);

        let root = |t: f64| self.slice_measure(normal, t).map(|a| a.max(0.0).sqrt());
        let mut best_i = 0;
        let mut best = root(offsets[0])?;
        for (i, &t) in offsets.iter().enumerate().skip(1) {
            let r = root(t)?;
            if r > best + 1e-12 * best.max(1.0) {
                best = r;
                best_i = i;
            }
        }
        let mut best_t = offsets[best_i];

        let mut lo = offsets[best_i.saturating_sub(1)];
        let mut hi = offsets[(best_i + 1).min(offsets.len() - 1)];
        let stop = 1e-12_f64.max(4.0 * f64::EPSILON * (lo.abs().max(hi.abs())));
        let mut iterations = 0;
        while hi - lo > stop && iterations < 400 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if root(m1)? < root(m2)? {
                lo = m1;
            } else {
                hi = m2;
            }
            iterations += 1;
        }
        let t = 0.5 * (lo + hi);
        let r = root(t)?;
        if r > best + 1e-12 * best.max(1.0) * spread.max(1.0) {
            best = r;
            best_t = t;
        }
        Ok((best_t, best * best))
    }

    fn extreme_vertices(&self) -> Vec<Point3> {
        let mut normals: Vec<Vec<Point3>> = vec![Vec::new(); self.vertices.len()];
        for (f, n) in self.faces.iter().zip(self.normals.iter()) {
            for &v in f {
                if !normals[v].iter().any(|m| dot3(m, n) > 1.0 - 1e-9) {
                    normals[v].push(*n);
                }
            }
        }
        self.vertices
            .iter()
            .zip(normals.iter())
            .filter(|(_, ns)| ns.len() >= 3)
            .map(|(v, _)| *v)
            .collect()
    }
}

fn incremental_hull(points: &[Point3]) -> Result<Polytope3> {
    let scale = extent(points);
    let eps = REL_EPS * scale;
    let degenerate = || Error::DegenerateInput("points do not span three dimensions".into());

    let i0 = (0..points.len())
        .min_by(|&a, &b| points[a][0].total_cmp(&points[b][0]))
        .expect("nonempty");
    let far = |key: &dyn Fn(&Point3) -> f64| {
        (0..points.len())
            .max_by(|&a, &b| key(&points[a]).total_cmp(&key(&points[b])))
            .expect("nonempty")
    };
    let p0 = points[i0];
    let i1 = far(&|p| norm3(&sub3(p, &p0)));
    let d01 = sub3(&points[i1], &p0);
    if norm3(&d01) <= eps {
        return Err(degenerate());
    }
    let i2 = far(&|p| norm3(&cross3(&d01, &sub3(p, &p0))) / norm3(&d01));
    let n012 = cross3(&d01, &sub3(&points[i2], &p0));
    if norm3(&n012) / norm3(&d01) <= eps {
        return Err(degenerate());
    }
    let unit = scale3(&n012, 1.0 / norm3(&n012));
    let i3 = far(&|p| dot3(&unit, &sub3(p, &p0)).abs());
    if dot3(&unit, &sub3(&points[i3], &p0)).abs() <= eps {
        return Err(degenerate());
    }

    let mut faces: Vec<Face> = Vec::new();
    let inner = scale3(
        &add3(&add3(&points[i0], &points[i1]), &add3(&points[i2], &points[i3])),
        0.25,
    );
    for tri in [[i0, i1, i2], [i0, i1, i3], [i0, i2, i3], [i1, i2, i3]] {
        let mut f = Face::new(points, tri);
        if f.distance(&inner) > 0.0 {
            f = Face::new(points, [tri[0], tri[2], tri[1]]);
        }
        faces.push(f);
    }

    for (pi, p) in points.iter().enumerate() {
        if [i0, i1, i2, i3].contains(&pi) {
            continue;
        }
        let visible: Vec<bool> = faces.iter().map(|f| f.distance(p) > eps).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut horizon: Vec<(usize, usize)> = Vec::new();
        for (f, _) in faces.iter().zip(visible.iter()).filter(|(_, &v)| v) {
            for k in 0..3 {
                let (a, b) = (f.v[k], f.v[(k + 1) % 3]);
                let shared = faces
                    .iter()
                    .zip(visible.iter())
                    .any(|(g, &gv)| gv && (0..3).any(|m| g.v[m] == b && g.v[(m + 1) % 3] == a));
                if !shared {
                    horizon.push((a, b));
                }
            }
        }
        let mut kept: Vec<Face> = faces
            .into_iter()
            .zip(visible)
            .filter(|(_, v)| !v)
            .map(|(f, _)| f)
            .collect();
        for (a, b) in horizon {
            kept.push(Face::new(points, [a, b, pi]));
        }
        faces = kept;
    }

    let mut remap = vec![usize::MAX; points.len()];
    let mut vertices = Vec::new();
    for f in &faces {
        for &v in &f.v {
            if remap[v] == usize::MAX {
                remap[v] = vertices.len();
                vertices.push(points[v]);
            }
        }
    }
    let poly = Polytope3 {
        faces: faces.iter().map(|f| [remap[f.v[0]], remap[f.v[1]], remap[f.v[2]]]).collect(),
        normals: faces.iter().map(|f| f.normal).collect(),
        offsets: faces.iter().map(|f| f.offset).collect(),
        vertices,
        eps,
    };
    if poly.volume() <= eps * scale * scale {
        return Err(Error::DegenerateInput("hull has zero volume".into()));
    }
    Ok(poly)
}

/// Closest point to `p` on triangle `abc`.
fn closest_on_triangle(p: &Point3, a: &Point3, b: &Point3, c: &Point3) -> Point3 {
    let ab = sub3(b, a);
    let ac = sub3(c, a);
    let ap = sub3(p, a);
    let d1 = dot3(&ab, &ap);
    let d2 = dot3(&ac, &ap);
    if d1 <= 0.0 && d2 <= 0.0 {
        return *a;
    }
    let bp = sub3(p, b);
    let d3 = dot3(&ab, &bp);
    let d4 = dot3(&ac, &bp);
    if d3 >= 0.0 && d4 <= d3 {
        return *b;
    }
    let vc = d1 * d4 - d3 * d2;
    if vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0 {
        return add3(a, &scale3(&ab, d1 / (d1 - d3)));
    }
    let cp = sub3(p, c);
    let d5 = dot3(&ab, &cp);
    let d6 = dot3(&ac, &cp);
    if d6 >= 0.0 && d5 <= d6 {
        return *c;
    }
    let vb = d5 * d2 - d1 * d6;
    if vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0 {
        return add3(a, &scale3(&ac, d2 / (d2 - d6)));
    }
    let va = d3 * d6 - d5 * d4;
    if va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0 {
        let w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return add3(b, &scale3(&sub3(c, b), w));
    }
    let denom = 1.0 / (va + vb + vc);
    let v = vb * denom;
    let w = vc * denom;
    add3(a, &add3(&scale3(&ab, v), &scale3(&ac, w)))
}

/// Homothety `s ≈ lambda * t + x0` within `tol`, with `lambda` the cube root
/// of the volume ratio and `x0` matching vertex centroids.
pub fn homothety_find_3d(s: &Polytope3, t: &Polytope3, tol: f64) -> Option<HomothetyWitness<f64>> {
    let lambda = (s.volume() / t.volume()).cbrt();
    if !lambda.is_finite() || lambda <= 0.0 {
        return None;
    }
    let cs = s.vertex_centroid();
    let ct = t.vertex_centroid();
    let x0 = sub3(&cs, &scale3(&ct, lambda));
    let image = t.dilate(lambda, &x0).ok()?;
    let residual = image.hausdorff_distance(s);
    (residual <= tol).then(|| HomothetyWitness {
        lambda,
        x0: x0.to_vec(),
        residual,
    })
}
