//! Convex bodies: intervals, exact polygons and float polytopes.

pub mod homothety;
pub mod interval;
pub mod polygon;
pub mod polytope3;

pub use homothety::{homothety_find_interval, homothety_find_polygon, HomothetyWitness};
pub use interval::Interval;
pub use polygon::{vertical_normalizer, Matrix2, Point2, Polygon};
pub use polytope3::{homothety_find_3d, vertical_normalizer3, Matrix3, PlaneSection, Point3, Polytope3};
