//! Bodies written as the region between a convex floor and a concave ceiling
//! over their projection, and the transforms acting on that representation.

pub mod body;
pub mod pl;
pub mod shear;

pub use body::GraphBody;
pub use pl::{Kind, PLFunction, Slope, Subdifferential};
pub use shear::{align_max_slice, feasible_shear_slopes, find_shear, shear_normalize, ShearMap};
