use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::bounds::values::{bm_bound, bonnesen_value, compare_surds};
use crate::convex_core::polygon::{Point2, Polygon};
use crate::convex_core::polytope3::{Point3, Polytope3};
use crate::error::Result;
use crate::scalar::{Scalar, Surd};

/// Relative tolerance for equality and chain checks in floating point.
pub const FLOAT_EQUALITY_TOL: f64 = 1e-9;

/// How the hyperplane measures `M`, `N` were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureSource {
    /// Largest section by hyperplanes with the given normal.
    Slice,
    /// Projection along the given kernel direction.
    Projection,
}

impl MeasureSource {
    pub fn name(self) -> &'static str {
        match self {
            MeasureSource::Slice => "slice",
            MeasureSource::Projection => "projection",
        }
    }
}

/// Volumes, hyperplane measures, both lower bounds and their gaps for a pair.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport<S> {
    pub dim: u32,
    pub vol_a: S,
    pub vol_b: S,
    pub vol_sum: S,
    pub m: S,
    pub n: S,
    pub source: MeasureSource,
    pub bm: Surd<S>,
    pub bonnesen: Surd<S>,
    /// `vol_sum - bm`.
    pub gap_bm: Surd<S>,
    /// `vol_sum - bonnesen`.
    pub gap_bonnesen: Surd<S>,
    pub equality_bonnesen: bool,
    /// True when every field was computed without rounding.
    pub exact: bool,
}

impl<S: Scalar> BoundReport<S> {
    fn assemble(
        dim: u32,
        vol_a: S,
        vol_b: S,
        vol_sum: S,
        m: S,
        n: S,
        source: MeasureSource,
    ) -> Result<Self> {
        let bm = bm_bound(&vol_a, &vol_b, dim)?;
        let bonnesen = bonnesen_value(&vol_a, &vol_b, &m, &n, dim)?;
        let gap_bm = bm.subtracted_from(&vol_sum);
        let gap_bonnesen = bonnesen.subtracted_from(&vol_sum);
        let exact = S::EXACT && dim == 2;
        let equality_bonnesen = if exact {
            gap_bonnesen.sign() == Ordering::Equal
        } else {
            gap_bonnesen.to_f64().abs() <= FLOAT_EQUALITY_TOL * vol_sum.to_f64().abs().max(1.0)
        };
        Ok(Self {
            dim,
            vol_a,
            vol_b,
            vol_sum,
            m,
            n,
            source,
            bm,
            bonnesen,
            gap_bm,
            gap_bonnesen,
            equality_bonnesen,
            exact,
        })
    }

    /// `vol_sum >= bonnesen >= bm`, exactly when the report is exact and
    /// with relative slack `FLOAT_EQUALITY_TOL` otherwise.
    pub fn chain_holds(&self) -> bool {
        if self.exact {
            self.gap_bonnesen.sign() != Ordering::Less
                && compare_surds(&self.bonnesen, &self.bm) != Ordering::Less
        } else {
            let slack = FLOAT_EQUALITY_TOL * self.vol_sum.to_f64().abs().max(1.0);
            self.gap_bonnesen.to_f64() >= -slack
                && self.bonnesen.to_f64() >= self.bm.to_f64() - slack
        }
    }

    pub fn csv_header() -> [&'static str; 10] {
        [
            "volA",
            "volB",
            "volSum",
            "M",
            "N",
            "bm",
            "bonnesen",
            "gap_bm",
            "gap_bonnesen",
            "equality",
        ]
    }

    /// One CSV row; numbers are rendered in floating point with 12
    /// significant digits.
    pub fn csv_row(&self) -> Vec<String> {
        let f = |x: f64| sig12(x);
        vec![
            f(self.vol_a.to_f64()),
            f(self.vol_b.to_f64()),
            f(self.vol_sum.to_f64()),
            f(self.m.to_f64()),
            f(self.n.to_f64()),
            f(self.bm.to_f64()),
            f(self.bonnesen.to_f64()),
            f(self.gap_bm.to_f64()),
            f(self.gap_bonnesen.to_f64()),
            self.equality_bonnesen.to_string(),
        ]
    }

    /// JSON with exact values (`"p/q"`, or `"a + b*sqrt(c)"` for surds).
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "mode": if self.exact { "exact" } else { "float" },
            "source": self.source.name(),
            "volA": self.vol_a.render(),
            "volB": self.vol_b.render(),
            "volSum": self.vol_sum.render(),
            "M": self.m.render(),
            "N": self.n.render(),
            "bm": self.bm.render(),
            "bonnesen": self.bonnesen.render(),
            "gap_bm": self.gap_bm.render(),
            "gap_bonnesen": self.gap_bonnesen.render(),
            "equality": self.equality_bonnesen,
        })
    }
}

/// Round to 12 significant digits and print the shortest representation.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("valid float");
    format!("{rounded}")
}

/// Bound report for a planar pair; `dir` is the slice normal or the
/// projection kernel according to `source`.
pub fn full_report<S: Scalar>(
    a: &Polygon<S>,
    b: &Polygon<S>,
    dir: &Point2<S>,
    source: MeasureSource,
) -> Result<BoundReport<S>> {
    let (m, n) = match source {
        MeasureSource::Slice => (a.max_slice(dir)?.1, b.max_slice(dir)?.1),
        MeasureSource::Projection => (a.project(dir)?.length(), b.project(dir)?.length()),
    };
    let vol_sum = a.minkowski_sum(b).volume();
    BoundReport::assemble(2, a.volume(), b.volume(), vol_sum, m, n, source)
}

/// Bound report for a pair of solids (floating point).
pub fn full_report_3d(
    a: &Polytope3,
    b: &Polytope3,
    dir: &Point3,
    source: MeasureSource,
) -> Result<BoundReport<f64>> {
    let (m, n) = match source {
        MeasureSource::Slice => (a.max_slice(dir)?.1, b.max_slice(dir)?.1),
        MeasureSource::Projection => (a.project(dir)?.volume(), b.project(dir)?.volume()),
    };
    let vol_sum = a.minkowski_sum(b)?.volume();
    BoundReport::assemble(3, a.volume(), b.volume(), vol_sum, m, n, source)
}
