//! Iterative decomposition driver: each pass ranks every variable by
//! flip impact, partitions the ranking into blocks of `subproblem_size`,
//! clamps everything outside the block and solves the induced sub-model
//! with an inner backend, accepting block solutions whenever the total
//! energy does not increase.

use std::cmp::Reverse;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::qubo::RawQubo;
use crate::solvers::exhaustive::gray_minimum;
use crate::solvers::state::{BestCollector, Matrix, SearchState};
use crate::solvers::{elapsed_ms, solve_sa, solve_tabu, SampleSet, SolverError, SolverParams};

/// Backend used on the clamped sub-models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerBackend {
    Exhaustive,
    Sa,
    Tabu,
}

impl InnerBackend {
    pub fn name(self) -> &'static str {
        match self {
            InnerBackend::Exhaustive => "exhaustive",
            InnerBackend::Sa => "sa",
            InnerBackend::Tabu => "tabu",
        }
    }
}

/// Passes without strict improvement before a restart stops, when
/// `params.stall_limit` is unset.
const DEFAULT_OUTER_STALL: usize = 4;

pub fn solve_decomposed(
    raw: &RawQubo,
    params: &SolverParams,
    inner: InnerBackend,
) -> Result<SampleSet, SolverError> {
    params.validate()?;
    let start = Instant::now();
    let v = raw.num_vars();
    if v == 0 {
        return Ok(SampleSet::from_pairs(vec![(Vec::new(), raw.offset())], elapsed_ms(start)));
    }
    let block = params.subproblem_size.min(v);
    if inner == InnerBackend::Exhaustive && block > params.exhaustive_cap {
        return Err(SolverError::SubproblemTooLarge { size: block, cap: params.exhaustive_cap });
    }
    let m = Matrix::from_raw(raw);
    let stall_limit = params.stall_limit.unwrap_or(DEFAULT_OUTER_STALL).max(1);

    let results: Vec<Result<Vec<(Vec<u8>, i64)>, SolverError>> = (0..params.num_repeats)
        .into_par_iter()
        .map(|repeat| run_restart(&m, raw, params, inner, block, stall_limit, repeat as u64))
        .collect();
    let mut pairs = Vec::new();
    for r in results {
        pairs.extend(r?);
    }
    Ok(SampleSet::from_pairs(pairs, elapsed_ms(start)))
}

fn run_restart(
    m: &Matrix,
    raw: &RawQubo,
    params: &SolverParams,
    inner: InnerBackend,
    block: usize,
    stall_limit: usize,
    stream: u64,
) -> Result<Vec<(Vec<u8>, i64)>, SolverError> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(u64::MAX - stream);
    let v = m.num_vars;
    let mut st = SearchState::zeros(m);
    st.randomize(&mut rng);
    let mut collector = BestCollector::new(st.energy, &st.x);

    let mut in_block = vec![false; v];
    let mut tabu_until = vec![0u64; v];
    let mut tabu_clock = 0u64;
    let mut stall = 0usize;
    while stall < stall_limit {
        // Tabu glue between block rounds: short steepest-admissible
        // segment that can cross small barriers single-flip blocks and
        // clamped sub-solves cannot.
        let entered_at = collector.best;
        tabu_segment(&mut st, &mut collector, &mut tabu_until, &mut tabu_clock, 4 * v as u64);
        // Partition all variables into blocks: each block is seeded by
        // the strongest-impact unprocessed variable and grown along the
        // strongest couplings into it, so tightly coupled groups get
        // optimized together.
        for selected in coupled_blocks(m, &st, block) {
            for &i in &selected {
                in_block[i] = true;
            }
            let sub = induced_subqubo(raw, &st.x, &selected, &in_block);
            debug_assert_eq!(
                sub.energy(&selected.iter().map(|&i| st.x[i]).collect::<Vec<u8>>()).unwrap(),
                st.energy,
                "induced sub-model disagrees with the full model at the current assignment"
            );
            let (vector, energy) = match inner {
                InnerBackend::Exhaustive => gray_minimum(&sub),
                InnerBackend::Sa => {
                    let best = solve_sa(&sub, &inner_params(params, rng.random()))?;
                    let s = &best.samples()[0];
                    (s.vector.clone(), s.energy)
                }
                InnerBackend::Tabu => {
                    let best = solve_tabu(&sub, &inner_params(params, rng.random()))?;
                    let s = &best.samples()[0];
                    (s.vector.clone(), s.energy)
                }
            };
            for &i in &selected {
                in_block[i] = false;
            }
            if energy <= st.energy {
                let before = st.energy;
                for (local, &i) in selected.iter().enumerate() {
                    if st.x[i] != vector[local] {
                        st.flip(i);
                    }
                }
                assert!(st.energy <= before, "accepted block solution raised the energy");
                assert_eq!(st.energy, energy);
                collector.observe(st.energy, &st.x);
            }
        }
        // A pass counts as progress only when it lowered the best
        // energy seen in this restart.
        if collector.best < entered_at {
            stall = 0;
        } else {
            stall += 1;
        }
    }
    let end = (st.x.clone(), st.energy);
    let mut pairs = collector.into_pairs();
    pairs.push(end);
    Ok(pairs)
}

/// Bounded tabu walk: steepest admissible single flips with a recency
/// tabu, uphill when nothing improves; `budget` flips per call.
fn tabu_segment(
    st: &mut SearchState,
    collector: &mut BestCollector,
    tabu_until: &mut [u64],
    clock: &mut u64,
    budget: u64,
) {
    let v = st.x.len();
    let tenure = (v as u64 / 10).max(10);
    for _ in 0..budget {
        let mut chosen: Option<(i64, usize)> = None;
        for i in 0..v {
            let delta = st.flip_delta(i);
            let admissible = tabu_until[i] <= *clock || st.energy + delta < collector.best;
            if admissible && chosen.is_none_or(|(best_delta, _)| delta < best_delta) {
                chosen = Some((delta, i));
            }
        }
        let i = match chosen {
            Some((_, i)) => i,
            None => (0..v).min_by_key(|&i| (st.flip_delta(i), i)).expect("nonempty"),
        };
        st.flip(i);
        tabu_until[i] = *clock + tenure;
        *clock += 1;
        collector.observe(st.energy, &st.x);
    }
}

/// Partitions all variables into blocks of at most `block` variables:
/// seed each block with the highest-impact unprocessed variable (ties by
/// index), then repeatedly pull in the unprocessed variable with the
/// largest total coupling into the block, falling back to impact order
/// when nothing couples.
fn coupled_blocks(m: &Matrix, st: &SearchState, block: usize) -> Vec<Vec<usize>> {
    let v = m.num_vars;
    let mut order: Vec<usize> = (0..v).collect();
    order.sort_unstable_by_key(|&i| (Reverse(st.flip_delta(i).abs()), i));
    let mut processed = vec![false; v];
    let mut attraction = vec![0i64; v];
    let mut blocks = Vec::with_capacity(v.div_ceil(block));
    let mut cursor = 0usize;
    let mut touched: Vec<usize> = Vec::new();
    for _ in 0..v.div_ceil(block) {
        let mut selected = Vec::with_capacity(block);
        while selected.len() < block && cursor < v {
            // Prefer the strongest attraction into the current block.
            let candidate = touched
                .iter()
                .copied()
                .filter(|&i| !processed[i])
                .max_by_key(|&i| (attraction[i], Reverse(i)));
            let next = match candidate {
                Some(i) if attraction[i] > 0 => i,
                _ => {
                    while cursor < v && processed[order[cursor]] {
                        cursor += 1;
                    }
                    if cursor >= v {
                        break;
                    }
                    order[cursor]
                }
            };
            processed[next] = true;
            selected.push(next);
            for (j, val) in m.neighbors(next) {
                if !processed[j] {
                    if attraction[j] == 0 {
                        touched.push(j);
                    }
                    attraction[j] += val.abs();
                }
            }
        }
        if selected.is_empty() {
            break;
        }
        for &i in &touched {
            attraction[i] = 0;
        }
        touched.clear();
        selected.sort_unstable();
        blocks.push(selected);
    }
    blocks
}

fn inner_params(params: &SolverParams, seed: u64) -> SolverParams {
    SolverParams { num_repeats: 1, seed, stall_limit: None, ..params.clone() }
}

/// Sub-model over `selected` (ascending) with all other variables
/// clamped to their values in `x`; energies over the block agree with
/// the full model pointwise.
fn induced_subqubo(raw: &RawQubo, x: &[u8], selected: &[usize], in_block: &[bool]) -> RawQubo {
    let mut local_of = vec![usize::MAX; x.len()];
    for (local, &i) in selected.iter().enumerate() {
        local_of[i] = local;
    }
    let mut base = raw.offset();
    let mut triples: Vec<(usize, usize, i64)> = Vec::new();
    for &(i, j, val) in raw.entries() {
        let (i, j) = (i as usize, j as usize);
        match (in_block[i], in_block[j]) {
            (true, true) => triples.push((local_of[i], local_of[j], val)),
            (true, false) => {
                if x[j] != 0 {
                    triples.push((local_of[i], local_of[i], val));
                }
            }
            (false, true) => {
                if x[i] != 0 {
                    triples.push((local_of[j], local_of[j], val));
                }
            }
            (false, false) => {
                if x[i] != 0 && x[j] != 0 {
                    base += val;
                }
            }
        }
    }
    RawQubo::new(selected.len(), triples, base).expect("local indices in range")
}
