//! Top-level pipeline: best-response extraction, model compilation,
//! backend solve, decoding and validation of every zero-energy sample.

use std::collections::BTreeSet;
use std::time::Instant;

use serde_json::json;

use crate::baselines::is_pne;
use crate::bestresponse::collect_b;
use crate::game::{GlobalProfile, GraphicalGame};
use crate::qubo::{build_qubo, decode};
use crate::solvers::ground::enumerate_ground_states;
use crate::solvers::setanneal::anneal_selections;
use crate::solvers::{
    elapsed_ms, solve_decomposed, solve_exhaustive, solve_tabu, InnerBackend, SampleSet,
    SolverError, SolverParams,
};

/// Backend selector for [`find_all_pne`].
///
/// `Exhaustive` is exact and complete at every size: models within the
/// bit-enumeration cap are enumerated assignment by assignment, larger
/// ones through the structured zero-energy enumeration, which is
/// complete because every zero-energy assignment selects exactly one
/// pointed set per player.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exhaustive,
    Sa,
    Tabu,
    Decomposed(InnerBackend),
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exhaustive => "exhaustive",
            Backend::Sa => "sa",
            Backend::Tabu => "tabu",
            Backend::Decomposed(_) => "decomp",
        }
    }

    /// Parses the CLI spelling; `decomp` uses the exact inner backend.
    pub fn parse(s: &str) -> Option<Backend> {
        match s {
            "exhaustive" => Some(Backend::Exhaustive),
            "sa" => Some(Backend::Sa),
            "tabu" => Some(Backend::Tabu),
            "decomp" => Some(Backend::Decomposed(InnerBackend::Exhaustive)),
            _ => None,
        }
    }
}

/// Wall-clock milliseconds of the pipeline phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseTimings {
    pub best_response_ms: f64,
    pub qubo_build_ms: f64,
    pub solve_ms: f64,
}

impl PhaseTimings {
    pub fn total_ms(&self) -> f64 {
        self.best_response_ms + self.qubo_build_ms + self.solve_ms
    }
}

/// Deterministic run metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct BackendInfo {
    pub backend: String,
    /// How the backend actually ran, e.g. `bit-enumeration` versus
    /// `ground-state-enumeration` for the exact backend.
    pub mode: String,
    pub seed: u64,
    pub num_repeats: usize,
    pub penalty: i64,
    pub num_vars: usize,
    /// Cardinality of the best-response collection.
    pub num_sets: usize,
    pub best_energy: Option<i64>,
    pub num_samples: usize,
}

/// Result of a full pipeline run.
#[derive(Debug, Clone)]
pub struct SolveReport {
    /// All equilibria found, sorted; every entry passes the deviation
    /// check against the game.
    pub pne: Vec<GlobalProfile>,
    pub timings: PhaseTimings,
    pub backend: BackendInfo,
}

impl SolveReport {
    /// Full JSON including measured timings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut value = self.to_json_deterministic();
        value["timings_ms"] = json!({
            "best_response": self.timings.best_response_ms,
            "qubo_build": self.timings.qubo_build_ms,
            "solve": self.timings.solve_ms,
            "total": self.timings.total_ms(),
        });
        value
    }

    /// JSON without wall-clock fields; byte-stable across runs with the
    /// same seed.
    pub fn to_json_deterministic(&self) -> serde_json::Value {
        json!({
            "pne": self.pne,
            "backend": {
                "backend": self.backend.backend,
                "mode": self.backend.mode,
                "seed": self.backend.seed,
                "num_repeats": self.backend.num_repeats,
                "penalty": self.backend.penalty,
                "num_vars": self.backend.num_vars,
                "num_sets": self.backend.num_sets,
                "best_energy": self.backend.best_energy,
                "num_samples": self.backend.num_samples,
            },
        })
    }
}

/// Runs both phases on a game and returns every equilibrium the backend
/// uncovered. Heuristic backends may under-report; they can never
/// mis-report, because each decoded profile is re-validated against the
/// game before it enters the result.
pub fn find_all_pne(
    game: &GraphicalGame,
    backend: Backend,
    params: &SolverParams,
) -> Result<SolveReport, SolverError> {
    params.validate()?;

    let t = Instant::now();
    let b = collect_b(game);
    let best_response_ms = elapsed_ms(t);

    let t = Instant::now();
    let model = build_qubo(&b, game, params.penalty)?;
    let qubo_build_ms = elapsed_ms(t);

    let t = Instant::now();
    let (samples, mode): (SampleSet, &str) = match backend {
        Backend::Exhaustive => {
            if model.num_vars() <= params.exhaustive_cap {
                (solve_exhaustive(model.raw(), params.exhaustive_cap)?, "bit-enumeration")
            } else {
                (enumerate_ground_states(&model, &b), "ground-state-enumeration")
            }
        }
        // Bit-flip walks stall far from the ground states of these
        // models (a valid encoding is one selector per player plus
        // matched bookkeeping bits), so the annealing backend samples
        // the selection manifold directly and expands every state back
        // into the model's variables for exact verification.
        Backend::Sa => (anneal_selections(&model, &b, params)?, "selection-annealing"),
        Backend::Tabu => (solve_tabu(model.raw(), params)?, "tabu-search"),
        Backend::Decomposed(inner) => {
            (solve_decomposed(model.raw(), params, inner)?, "decomposition")
        }
    };
    let solve_ms = elapsed_ms(t);

    let mut found: BTreeSet<GlobalProfile> = BTreeSet::new();
    for sample in samples.ground_states() {
        if let Some(profile) = decode(&model, &sample.vector, &b)? {
            let valid = is_pne(game, &profile).expect("decoded profile is structurally valid");
            assert!(valid, "decoded profile is not an equilibrium: compiler bug");
            found.insert(profile);
        }
    }

    Ok(SolveReport {
        pne: found.into_iter().collect(),
        timings: PhaseTimings { best_response_ms, qubo_build_ms, solve_ms },
        backend: BackendInfo {
            backend: backend.name().to_string(),
            mode: mode.to_string(),
            seed: params.seed,
            num_repeats: params.num_repeats,
            penalty: params.penalty,
            num_vars: model.num_vars(),
            num_sets: b.cardinality(),
            best_energy: samples.best_energy(),
            num_samples: samples.len(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{generate_game, Topology};

    #[test]
    fn dominant_game_has_unique_equilibrium() {
        let g = fixtures::dominant_action_game();
        let report = find_all_pne(&g, Backend::Exhaustive, &SolverParams::default()).unwrap();
        assert_eq!(report.pne, vec![GlobalProfile::new(vec![1, 1, 1])]);
        assert_eq!(report.backend.mode, "bit-enumeration");
    }

    #[test]
    fn no_equilibrium_game_reports_empty() {
        let g = fixtures::matching_pennies();
        let report = find_all_pne(&g, Backend::Exhaustive, &SolverParams::default()).unwrap();
        assert!(report.pne.is_empty());
        assert!(report.backend.best_energy.unwrap() > 0);
    }

    #[test]
    fn large_model_escalates_to_ground_enumeration() {
        let g = generate_game(Topology::Circle, 6, 3, 42).unwrap();
        let report = find_all_pne(&g, Backend::Exhaustive, &SolverParams::default()).unwrap();
        assert_eq!(report.backend.mode, "ground-state-enumeration");
        for p in &report.pne {
            assert!(is_pne(&g, p).unwrap());
        }
    }

    #[test]
    fn deterministic_json_is_stable() {
        let g = fixtures::coordination_game();
        let params = SolverParams { num_repeats: 5, seed: 3, ..SolverParams::default() };
        let a = find_all_pne(&g, Backend::Sa, &params).unwrap();
        let b = find_all_pne(&g, Backend::Sa, &params).unwrap();
        assert_eq!(
            a.to_json_deterministic().to_string(),
            b.to_json_deterministic().to_string()
        );
        assert_eq!(a.pne, b.pne);
    }
}
