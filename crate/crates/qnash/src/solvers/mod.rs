//! Classical binary-optimization backends standing in for an annealing
//! device, plus the top-level equilibrium-finding pipeline.
//!
//! Backends: an exact enumerator, simulated annealing, tabu search, and
//! an iterative decomposition driver that clamps most variables and
//! optimizes small sub-blocks. Every heuristic backend is a pure
//! function of `(model, params)`: given equal seeds it returns identical
//! sample sets regardless of thread scheduling.

mod anneal;
mod decomposed;
mod exhaustive;
mod ground;
mod pipeline;
mod setanneal;
mod state;
mod tabu;

pub use anneal::solve_sa;
pub use decomposed::{solve_decomposed, InnerBackend};
pub use exhaustive::{solve_exhaustive, DEFAULT_EXHAUSTIVE_CAP};
pub use pipeline::{find_all_pne, Backend, BackendInfo, PhaseTimings, SolveReport};
pub use tabu::solve_tabu;

use std::fmt;

use crate::game::GameError;
use crate::qubo::QuboError;

/// Cooling schedule for simulated annealing. `None` fields fall back to
/// model-dependent defaults: the initial temperature to the largest
/// absolute coefficient, the sweep count to `10 * num_vars`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaSchedule {
    pub t_initial: Option<f64>,
    pub t_final: f64,
    pub sweeps: Option<usize>,
}

impl Default for SaSchedule {
    fn default() -> Self {
        SaSchedule { t_initial: None, t_final: 0.1, sweeps: None }
    }
}

/// Knobs shared by all backends.
///
/// `stall_limit` is the per-start termination budget of the searches
/// that stop on lack of progress; when unset, tabu search uses
/// `50 * num_vars` non-improving flips and the decomposition driver 8
/// non-improving outer iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverParams {
    /// Independent restarts per solve.
    pub num_repeats: usize,
    /// Variables per decomposition block.
    pub subproblem_size: usize,
    pub seed: u64,
    /// Penalty coefficient of the compiled model.
    pub penalty: i64,
    pub sa: SaSchedule,
    /// Tabu tenure; defaults to `max(10, num_vars / 10)`.
    pub tabu_tenure: Option<usize>,
    pub stall_limit: Option<usize>,
    /// Variable cap for exact bit enumeration.
    pub exhaustive_cap: usize,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams {
            num_repeats: 50,
            subproblem_size: 20,
            seed: 0,
            penalty: 1,
            sa: SaSchedule::default(),
            tabu_tenure: None,
            stall_limit: None,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }
}

impl SolverParams {
    pub fn validate(&self) -> Result<(), SolverError> {
        if self.num_repeats < 1 {
            return Err(SolverError::InvalidParams("num_repeats must be at least 1".into()));
        }
        if self.subproblem_size < 2 {
            return Err(SolverError::InvalidParams("subproblem_size must be at least 2".into()));
        }
        if self.penalty < 1 {
            return Err(SolverError::InvalidParams("penalty must be a positive integer".into()));
        }
        if !(self.sa.t_final > 0.0) {
            return Err(SolverError::InvalidParams("final temperature must be positive".into()));
        }
        if let Some(t0) = self.sa.t_initial {
            if !(t0 > self.sa.t_final) {
                return Err(SolverError::InvalidParams(
                    "initial temperature must exceed the final temperature".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug)]
pub enum SolverError {
    /// Exact enumeration refused: too many variables.
    TooManyVariables { num_vars: usize, cap: usize },
    /// Decomposition block larger than the inner backend can take.
    SubproblemTooLarge { size: usize, cap: usize },
    InvalidParams(String),
    Qubo(QuboError),
    Game(GameError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::TooManyVariables { num_vars, cap } => {
                write!(f, "exhaustive enumeration capped at {cap} variables, model has {num_vars}")
            }
            SolverError::SubproblemTooLarge { size, cap } => {
                write!(f, "subproblem size {size} exceeds the inner backend cap {cap}")
            }
            SolverError::InvalidParams(msg) => write!(f, "invalid solver parameters: {msg}"),
            SolverError::Qubo(e) => write!(f, "{e}"),
            SolverError::Game(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SolverError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            SolverError::Qubo(e) => Some(e),
            SolverError::Game(e) => Some(e),
            _ => None,
        }
    }
}

impl From<QuboError> for SolverError {
    fn from(e: QuboError) -> Self {
        SolverError::Qubo(e)
    }
}

impl From<GameError> for SolverError {
    fn from(e: GameError) -> Self {
        SolverError::Game(e)
    }
}

/// One assignment with its exact energy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub vector: Vec<u8>,
    pub energy: i64,
}

/// Deduplicated samples in ascending `(energy, vector)` order.
#[derive(Debug, Clone)]
pub struct SampleSet {
    samples: Vec<Sample>,
    pub solve_ms: f64,
}

impl SampleSet {
    pub(crate) fn from_pairs(pairs: Vec<(Vec<u8>, i64)>, solve_ms: f64) -> Self {
        let mut pairs = pairs;
        pairs.sort_unstable_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        pairs.dedup_by(|a, b| a.0 == b.0);
        let samples = pairs.into_iter().map(|(vector, energy)| Sample { vector, energy }).collect();
        SampleSet { samples, solve_ms }
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn best_energy(&self) -> Option<i64> {
        self.samples.first().map(|s| s.energy)
    }

    /// Samples at exactly zero energy.
    pub fn ground_states(&self) -> impl Iterator<Item = &Sample> {
        self.samples.iter().take_while(|s| s.energy <= 0).filter(|s| s.energy == 0)
    }
}

pub(crate) fn elapsed_ms(start: std::time::Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}
