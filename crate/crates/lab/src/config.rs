use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Geometry(#[from] bonnesen_core::Error),
}

impl LabError {
    /// Process exit code: every error that stops a campaign is a usage or IO
    /// problem (2); invariant violations are reported through the summary.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Chain,
    Certify,
    Lemma,
    Convergence,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Chain => "chain",
            Mode::Certify => "certify",
            Mode::Lemma => "lemma",
            Mode::Convergence => "convergence",
        }
    }
}

impl FromStr for Mode {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        match s {
            "chain" => Ok(Mode::Chain),
            "certify" => Ok(Mode::Certify),
            "lemma" => Ok(Mode::Lemma),
            "convergence" => Ok(Mode::Convergence),
            _ => Err(LabError::Usage(format!("unknown mode {s:?}"))),
        }
    }
}

/// Scalar field for planar experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Exact,
    Float,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Exact => "exact",
            Field::Float => "float",
        }
    }

    /// Reads `LAB_MODE`; unset means exact.
    pub fn from_env() -> Result<Self, LabError> {
        match std::env::var("LAB_MODE") {
            Err(_) => Ok(Field::Exact),
            Ok(v) => match v.as_str() {
                "exact" => Ok(Field::Exact),
                "float" => Ok(Field::Float),
                _ => Err(LabError::Usage(format!("LAB_MODE must be exact or float, got {v:?}"))),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub trials: usize,
    pub dim: u32,
    pub vertex_range: RangeInclusive<usize>,
    pub denom_bound: i64,
    pub mode: Mode,
    pub field: Field,
    pub output_dir: PathBuf,
}

pub const DEFAULT_DENOM_BOUND: i64 = 10_000;
pub const DEFAULT_VERTICES: RangeInclusive<usize> = 3..=10;

impl ExperimentConfig {
    pub fn new(mode: Mode, seed: u64, trials: usize, dim: u32, output_dir: PathBuf) -> Self {
        Self {
            seed,
            trials,
            dim,
            vertex_range: DEFAULT_VERTICES,
            denom_bound: DEFAULT_DENOM_BOUND,
            mode,
            field: Field::Exact,
            output_dir,
        }
    }

    pub fn validate(&self) -> Result<(), LabError> {
        let bad = |m: &str| Err(LabError::Usage(m.into()));
        if self.trials == 0 {
            return bad("--trials must be at least 1");
        }
        if !(self.dim == 2 || self.dim == 3) {
            return bad("--dim must be 2 or 3");
        }
        if *self.vertex_range.start() < 3 || self.vertex_range.is_empty() {
            return bad("--vertices needs 3 <= MIN <= MAX");
        }
        if self.denom_bound < 1 {
            return bad("--denom-bound must be positive");
        }
        Ok(())
    }

    /// Independent random stream for one trial; concurrency cannot change it.
    pub fn trial_rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }
}

/// Parses `MIN..MAX` (inclusive) or a single count.
pub fn parse_vertex_range(s: &str) -> Result<RangeInclusive<usize>, LabError> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| LabError::Usage(format!("bad vertex count in {s:?}")))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.trim_start_matches('='))?),
        None => {
            let k = num(s)?;
            Ok(k..=k)
        }
    }
}
