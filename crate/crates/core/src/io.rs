//! JSON file formats for bodies and graph bodies.
//!
//! Numbers are strings: `"p/q"` for rationals and the shortest round-trip
//! decimal for floats, so files never lose precision.

use serde::{Deserialize, Serialize};

use crate::convex_core::polygon::Polygon;
use crate::convex_core::polytope3::{Point3, Polytope3};
use crate::error::{Error, Result};
use crate::graph_body::{GraphBody, Kind, PLFunction};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BodyFile {
    pub dim: u32,
    pub field: String,
    pub vertices: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphBodyFile {
    pub domain: [String; 2],
    pub floor: Vec<[String; 2]>,
    pub ceiling: Vec<[String; 2]>,
    pub flat: bool,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

impl BodyFile {
    pub fn from_polygon<S: Scalar>(p: &Polygon<S>) -> Self {
        Self {
            dim: 2,
            field: S::FIELD.into(),
            vertices: p
                .vertices()
                .iter()
                .map(|v| v.iter().map(Scalar::render).collect())
                .collect(),
        }
    }

    pub fn from_polytope3(p: &Polytope3) -> Self {
        Self {
            dim: 3,
            field: f64::FIELD.into(),
            vertices: p
                .vertices()
                .iter()
                .map(|v| v.iter().map(Scalar::render).collect())
                .collect(),
        }
    }

    fn coords<S: Scalar, const D: usize>(&self) -> Result<Vec<[S; D]>> {
        if self.dim as usize != D {
            return Err(Error::DimensionMismatch {
                left: self.dim as usize,
                right: D,
            });
        }
        if self.field != S::FIELD {
            return Err(Error::Parse(format!(
                "field {:?} where {:?} was expected",
                self.field,
                S::FIELD
            )));
        }
        self.vertices
            .iter()
            .map(|v| {
                if v.len() != D {
                    return Err(Error::DimensionMismatch {
                        left: v.len(),
                        right: D,
                    });
                }
                let parsed = v.iter().map(|s| S::parse_str(s)).collect::<Result<Vec<_>>>()?;
                Ok(std::array::from_fn(|i| parsed[i].clone()))
            })
            .collect()
    }

    /// The hull of the listed vertices.
    pub fn to_polygon<S: Scalar>(&self) -> Result<Polygon<S>> {
        Polygon::canonical_hull(&self.coords::<S, 2>()?)
    }

    pub fn to_polytope3(&self) -> Result<Polytope3> {
        let pts: Vec<Point3> = self.coords::<f64, 3>()?;
        Polytope3::canonical_hull(&pts)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("body file serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(parse_err)
    }
}

fn render_points<S: Scalar>(f: &PLFunction<S>) -> Vec<[String; 2]> {
    f.points().iter().map(|(x, y)| [x.render(), y.render()]).collect()
}

fn parse_points<S: Scalar>(pts: &[[String; 2]], kind: Kind) -> Result<PLFunction<S>> {
    let pts = pts
        .iter()
        .map(|[x, y]| Ok((S::parse_str(x)?, S::parse_str(y)?)))
        .collect::<Result<Vec<_>>>()?;
    PLFunction::new(pts, kind)
}

impl GraphBodyFile {
    pub fn from_graph_body<S: Scalar>(g: &GraphBody<S>) -> Self {
        let d = g.domain();
        Self {
            domain: [d.lo.render(), d.hi.render()],
            floor: render_points(g.floor()),
            ceiling: render_points(g.ceiling()),
            flat: g.is_flat(),
        }
    }

    /// Rebuild the body; the domain and flat flag must agree with the graphs.
    pub fn to_graph_body<S: Scalar>(&self) -> Result<GraphBody<S>> {
        let body: GraphBody<S> = GraphBody::new(
            parse_points(&self.floor, Kind::Convex)?,
            parse_points(&self.ceiling, Kind::Concave)?,
        )?;
        let d = body.domain();
        let lo = S::parse_str(&self.domain[0])?;
        let hi = S::parse_str(&self.domain[1])?;
        if !(d.lo.tol_eq(&lo) && d.hi.tol_eq(&hi)) {
            return Err(Error::DomainMismatch(
                "stated domain differs from the graphs".into(),
            ));
        }
        if body.is_flat() != self.flat {
            return Err(Error::Parse("flat flag disagrees with the graphs".into()));
        }
        Ok(body)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("graph body file serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(parse_err)
    }
}
