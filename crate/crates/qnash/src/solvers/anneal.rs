//! Simulated annealing: independent restarts of a geometric-cooling
//! single-spin-flip Metropolis walk.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::qubo::RawQubo;
use crate::solvers::state::{BestCollector, Matrix, SearchState};
use crate::solvers::{elapsed_ms, SampleSet, SolverError, SolverParams};

/// Runs `num_repeats` independent annealing restarts and returns the
/// union of each restart's end state and best-seen states. Restarts use
/// separate, scheduling-independent random streams of the same seed, so
/// the result is a pure function of `(model, params)`.
pub fn solve_sa(raw: &RawQubo, params: &SolverParams) -> Result<SampleSet, SolverError> {
    params.validate()?;
    let start = Instant::now();
    let v = raw.num_vars();
    if v == 0 {
        return Ok(SampleSet::from_pairs(vec![(Vec::new(), raw.offset())], elapsed_ms(start)));
    }
    let m = Matrix::from_raw(raw);
    let t_final = params.sa.t_final;
    let t_initial = params
        .sa
        .t_initial
        .unwrap_or_else(|| (raw.max_abs_coefficient() as f64).max(2.0 * t_final).max(1.0));
    let sweeps = params.sa.sweeps.unwrap_or(10 * v).max(1);

    let pairs: Vec<(Vec<u8>, i64)> = (0..params.num_repeats)
        .into_par_iter()
        .map(|repeat| run_restart(&m, params.seed, repeat as u64, t_initial, t_final, sweeps))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(SampleSet::from_pairs(pairs, elapsed_ms(start)))
}

fn run_restart(
    m: &Matrix,
    seed: u64,
    stream: u64,
    t_initial: f64,
    t_final: f64,
    sweeps: usize,
) -> Vec<(Vec<u8>, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut st = SearchState::zeros(m);
    st.randomize(&mut rng);
    let mut collector = BestCollector::new(st.energy, &st.x);

    let ratio =
        if sweeps > 1 { (t_final / t_initial).powf(1.0 / (sweeps as f64 - 1.0)) } else { 1.0 };
    let mut temperature = t_initial;
    for _ in 0..sweeps {
        let inv_t = 1.0 / temperature;
        for i in 0..m.num_vars {
            let delta = st.flip_delta(i);
            let accept =
                delta <= 0 || rng.random::<f64>() < (-(delta as f64) * inv_t).exp();
            if accept {
                st.flip(i);
                collector.observe(st.energy, &st.x);
            }
        }
        temperature *= ratio;
    }
    let end = (st.x.clone(), st.energy);
    let mut pairs = collector.into_pairs();
    pairs.push(end);
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bestresponse::collect_b;
    use crate::fixtures;
    use crate::qubo::build_qubo;

    fn params(num_repeats: usize, seed: u64) -> SolverParams {
        SolverParams { num_repeats, seed, ..SolverParams::default() }
    }

    #[test]
    fn deterministic_given_seed() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let p = params(4, 7);
        let a = solve_sa(model.raw(), &p).unwrap();
        let b2 = solve_sa(model.raw(), &p).unwrap();
        assert_eq!(a.samples(), b2.samples());
    }

    #[test]
    fn finds_the_unique_ground_state() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let result = solve_sa(model.raw(), &params(20, 1)).unwrap();
        assert_eq!(result.best_energy(), Some(0));
    }

    #[test]
    fn reports_positive_best_when_no_ground_state() {
        let g = fixtures::matching_pennies();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let result = solve_sa(model.raw(), &params(20, 3)).unwrap();
        assert!(result.best_energy().unwrap() > 0);
    }

    #[test]
    fn energies_reverify_exactly() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 2).unwrap();
        let result = solve_sa(model.raw(), &params(5, 11)).unwrap();
        for s in result.samples() {
            assert_eq!(model.energy(&s.vector).unwrap(), s.energy);
        }
    }

    #[test]
    fn rejects_bad_params() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let bad = SolverParams { num_repeats: 0, ..SolverParams::default() };
        assert!(matches!(solve_sa(model.raw(), &bad), Err(SolverError::InvalidParams(_))));
    }
}
