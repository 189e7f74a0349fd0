//! Deciding equality in Bonnesen's bound, with a reconstructable witness.

pub mod planar;
pub mod solid;

pub use planar::{
    check_graph_homothety, decide_equality_projection, decide_equality_slice_2d,
    slice_monotonicity_check, Counterevidence, EqualityVerdict, GraphPart, StretchDecomposition,
};
pub use solid::{decide_equality_projection_3d, SolidDecomposition, SolidVerdict};
