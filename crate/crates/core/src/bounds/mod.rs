//! Lower bounds for the volume of a Minkowski sum and their gaps.

pub mod lemma;
pub mod report;
pub mod values;

pub use lemma::{
    largest_valid_eps, lemma_delta_bound, lemma_eps_bound, lemma_eps_bound_solid, lemma_eps_value,
    LemmaBound, SeparableConcave,
};
pub use report::{full_report, full_report_3d, sig12, BoundReport, MeasureSource, FLOAT_EQUALITY_TOL};
pub use values::{bm_bound, bonnesen_value, compare_surds, refinement_compare};
