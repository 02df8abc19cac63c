//! Pure Nash equilibria of graphical games in two phases: classical
//! best-response extraction followed by compilation into a set-cover
//! style quadratic binary model whose zero-energy assignments are
//! exactly the equilibria, solved by classical annealing-style backends
//! and validated against exact baselines.
//!
//! # Modules
//!
//! - `game` - game data model, topology generator, JSON files
//! - `bestresponse` - phase one: pointed sets and the collection `B`
//! - `qubo` - phase two: model compilation, energies, decoding, export
//! - `solvers` - exact, annealing, tabu and decomposition backends plus
//!   the end-to-end pipeline
//! - `baselines` - equilibrium oracle, brute force and random search

pub mod baselines;
pub mod bestresponse;
pub mod game;
pub mod qubo;
pub mod solvers;

#[cfg(test)]
pub(crate) mod fixtures;

pub use baselines::{
    brute_force_sets, is_pne, oracle_pne, random_search, BaselineError, BaselineReport,
};
pub use bestresponse::{best_responses, collect_b, BestResponseCollection, PointedSet};
pub use game::{
    generate_game, load_game, save_game, GameError, GlobalProfile, GraphicalGame, LocalProfile,
    Topology,
};
pub use qubo::{
    build_qubo, decode, export_qubo, format_qubo, import_qubo, parse_qubo, IsingModel, QuboError,
    QuboFormat, QuboModel, RawQubo, VariableIndex,
};
pub use solvers::{
    find_all_pne, solve_decomposed, solve_exhaustive, solve_sa, solve_tabu, Backend, BackendInfo,
    InnerBackend, PhaseTimings, SaSchedule, Sample, SampleSet, SolveReport, SolverError,
    SolverParams,
};
