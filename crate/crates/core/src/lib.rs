//! Sumset lower bounds for convex bodies and a decision procedure for
//! equality in Bonnesen's inequality.
//!
//! Planar bodies are exact rational polygons, so volumes, bounds and
//! equality verdicts are decided without rounding. Solids are handled in
//! floating point with explicit tolerances.

pub mod bounds;
pub mod certifier;
pub mod convex_core;
pub mod error;
pub mod graph_body;
pub mod io;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar, Surd};
