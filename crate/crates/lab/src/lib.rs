//! Seeded experiment harness: random bodies, bound-chain and certifier
//! campaigns, lemma checks and convergence studies, with CSV/JSON/SVG output.

pub mod campaign;
pub mod config;
pub mod gen;
pub mod output;

pub use campaign::{run_campaign, run_trials, CampaignResult, Summary};
pub use config::{ExperimentConfig, Field, LabError, Mode};
