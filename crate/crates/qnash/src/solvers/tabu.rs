//! Multistart tabu search: steepest single-flip moves with a recency
//! tabu on flipped variables, per-start termination after a stall
//! budget of non-improving moves.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::qubo::RawQubo;
use crate::solvers::state::{BestCollector, Matrix, SearchState};
use crate::solvers::{elapsed_ms, SampleSet, SolverError, SolverParams};

pub fn solve_tabu(raw: &RawQubo, params: &SolverParams) -> Result<SampleSet, SolverError> {
    params.validate()?;
    let start = Instant::now();
    let v = raw.num_vars();
    if v == 0 {
        return Ok(SampleSet::from_pairs(vec![(Vec::new(), raw.offset())], elapsed_ms(start)));
    }
    let m = Matrix::from_raw(raw);
    let tenure = params.tabu_tenure.unwrap_or_else(|| (v / 10).max(10)) as u64;
    let stall_limit = params.stall_limit.unwrap_or(50 * v).max(1) as u64;

    let pairs: Vec<(Vec<u8>, i64)> = (0..params.num_repeats)
        .into_par_iter()
        .map(|repeat| {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            rng.set_stream(repeat as u64);
            let mut st = SearchState::zeros(&m);
            st.randomize(&mut rng);
            tabu_walk(&m, st, tenure, stall_limit)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(SampleSet::from_pairs(pairs, elapsed_ms(start)))
}

/// One tabu start from the given state: repeatedly applies the best
/// admissible flip (ties toward the lowest index), marks it tabu for
/// `tenure` moves, and stops after `stall_limit` moves without
/// improving on the start's best energy. Aspiration: a tabu move is
/// admissible when it would beat the best energy seen in this start.
fn tabu_walk(m: &Matrix, mut st: SearchState, tenure: u64, stall_limit: u64) -> Vec<(Vec<u8>, i64)> {
    let v = m.num_vars;
    let mut collector = BestCollector::new(st.energy, &st.x);
    let mut tabu_until = vec![0u64; v];
    let mut iteration = 0u64;
    let mut non_improving = 0u64;
    while non_improving < stall_limit {
        let mut chosen: Option<(i64, usize)> = None;
        for i in 0..v {
            let delta = st.flip_delta(i);
            let admissible = tabu_until[i] <= iteration || st.energy + delta < collector.best;
            if admissible && chosen.is_none_or(|(best_delta, _)| delta < best_delta) {
                chosen = Some((delta, i));
            }
        }
        let i = match chosen {
            Some((_, i)) => i,
            // Everything tabu and nothing aspires: take the overall
            // steepest move anyway.
            None => (0..v).min_by_key(|&i| (st.flip_delta(i), i)).expect("at least one variable"),
        };
        st.flip(i);
        tabu_until[i] = iteration + tenure;
        iteration += 1;
        if st.energy < collector.best {
            non_improving = 0;
        } else {
            non_improving += 1;
        }
        collector.observe(st.energy, &st.x);
    }
    let end = (st.x.clone(), st.energy);
    let mut pairs = collector.into_pairs();
    pairs.push(end);
    pairs
}
