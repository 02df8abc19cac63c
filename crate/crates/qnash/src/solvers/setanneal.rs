//! Annealed sampling over the selection manifold of a compiled model.
//!
//! Bit-space single-flip walks on these models stall far from the
//! ground states: a valid encoding needs one selector per player plus
//! matching multiplicity bits, and rewiring even one player crosses a
//! chain of uphill flips. This sampler keeps the walk on the manifold
//! the penalty terms carve out -- always exactly one pointed set per
//! player -- and lets Metropolis moves re-draw one player's set at a
//! time. The energy of a selection is the model energy minimized over
//! the bookkeeping bits, so zero still certifies a valid equilibrium
//! encoding, and every emitted state is expanded to a full assignment
//! and re-checked against the exact model energy.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bestresponse::BestResponseCollection;
use crate::qubo::QuboModel;
use crate::solvers::{elapsed_ms, SampleSet, SolverError, SolverParams};

pub(crate) fn anneal_selections(
    model: &QuboModel,
    b: &BestResponseCollection,
    params: &SolverParams,
) -> Result<SampleSet, SolverError> {
    params.validate()?;
    let start = Instant::now();
    let n = b.num_players();
    let penalty = model.penalty();
    let t_final = params.sa.t_final.min(0.2 * penalty as f64);
    let t_initial = params.sa.t_initial.unwrap_or(2.0 * penalty as f64).max(2.0 * t_final);
    let sweeps = params.sa.sweeps.unwrap_or(500 * n).max(1);

    let results: Vec<Vec<(Vec<u8>, i64)>> = (0..params.num_repeats)
        .into_par_iter()
        .map(|repeat| {
            run_chain(model, b, params.seed, repeat as u64, t_initial, t_final, sweeps)
        })
        .collect();
    Ok(SampleSet::from_pairs(results.into_iter().flatten().collect(), elapsed_ms(start)))
}

/// One annealing chain over selections.
fn run_chain(
    model: &QuboModel,
    b: &BestResponseCollection,
    seed: u64,
    stream: u64,
    t_initial: f64,
    t_final: f64,
    sweeps: usize,
) -> Vec<(Vec<u8>, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let n = b.num_players();
    let mut state = SelectionState::random(model, b, &mut rng);
    let mut out: Vec<(Vec<u8>, i64)> = Vec::new();
    let mut ground_count = 0usize;
    if state.energy == 0 {
        out.push(state.expand());
        ground_count += 1;
    }
    let mut best = state.energy;

    let ratio =
        if sweeps > 1 { (t_final / t_initial).powf(1.0 / (sweeps as f64 - 1.0)) } else { 1.0 };
    let mut temperature = t_initial;
    for _ in 0..sweeps {
        let inv_t = 1.0 / temperature;
        for player in 0..n {
            let options = b.player_set_count(player);
            if options <= 1 {
                continue;
            }
            let candidate = b.player_range(player).start + rng.random_range(0..options);
            if candidate == state.choice[player] {
                continue;
            }
            let delta = state.redraw_delta(player, candidate);
            let accept =
                delta <= 0 || rng.random::<f64>() < (-(delta as f64) * inv_t).exp();
            if accept {
                state.apply(player, candidate, delta);
                if state.energy < best {
                    best = state.energy;
                }
                if state.energy == 0 && ground_count < MAX_GROUND_STATES {
                    let pair = state.expand();
                    if !out.contains(&pair) {
                        out.push(pair);
                        ground_count += 1;
                    }
                }
            }
        }
        temperature *= ratio;
    }
    out.push(state.expand());
    out
}

const MAX_GROUND_STATES: usize = 64;

/// One pointed set per player plus incremental coverage bookkeeping.
struct SelectionState<'a> {
    model: &'a QuboModel,
    b: &'a BestResponseCollection,
    /// Selected set index (into `b.sets()`) per player.
    choice: Vec<usize>,
    /// `coverage[p][j]` = selected sets assigning action j to player p.
    coverage: Vec<Vec<i64>>,
    /// Per-player bookkeeping cost, `sum == energy / penalty`.
    local_cost: Vec<i64>,
    /// Model energy minimized over the multiplicity bits.
    energy: i64,
}

impl<'a> SelectionState<'a> {
    fn random(
        model: &'a QuboModel,
        b: &'a BestResponseCollection,
        rng: &mut ChaCha8Rng,
    ) -> Self {
        let n = b.num_players();
        let choice: Vec<usize> = (0..n)
            .map(|p| b.player_range(p).start + rng.random_range(0..b.player_set_count(p)))
            .collect();
        let mut coverage: Vec<Vec<i64>> =
            (0..n).map(|p| vec![0i64; model.index().num_actions(p)]).collect();
        for &k in &choice {
            for (q, a) in b.set(k).assignments() {
                coverage[q][a] += 1;
            }
        }
        let local_cost: Vec<i64> =
            (0..n).map(|p| player_cost(model, &coverage[p], p)).collect();
        let energy = model.penalty() * local_cost.iter().sum::<i64>();
        SelectionState { model, b, choice, coverage, local_cost, energy }
    }

    /// Energy change of switching `player`'s set to `candidate`.
    fn redraw_delta(&mut self, player: usize, candidate: usize) -> i64 {
        let old = self.choice[player];
        let mut delta = 0i64;
        // Apply coverage changes, tallying affected players.
        let mut affected: Vec<usize> = Vec::with_capacity(8);
        for (q, a) in self.b.set(old).assignments() {
            self.coverage[q][a] -= 1;
            if !affected.contains(&q) {
                affected.push(q);
            }
        }
        for (q, a) in self.b.set(candidate).assignments() {
            self.coverage[q][a] += 1;
            if !affected.contains(&q) {
                affected.push(q);
            }
        }
        for &q in &affected {
            delta += player_cost(self.model, &self.coverage[q], q) - self.local_cost[q];
        }
        // Roll back; `apply` commits.
        for (q, a) in self.b.set(candidate).assignments() {
            self.coverage[q][a] -= 1;
        }
        for (q, a) in self.b.set(old).assignments() {
            self.coverage[q][a] += 1;
        }
        delta * self.model.penalty()
    }

    fn apply(&mut self, player: usize, candidate: usize, delta: i64) {
        let old = self.choice[player];
        for (q, a) in self.b.set(old).assignments() {
            self.coverage[q][a] -= 1;
        }
        for (q, a) in self.b.set(candidate).assignments() {
            self.coverage[q][a] += 1;
        }
        self.choice[player] = candidate;
        let mut touched: Vec<usize> = Vec::with_capacity(8);
        for (q, _) in self.b.set(old).assignments() {
            if !touched.contains(&q) {
                touched.push(q);
            }
        }
        for (q, _) in self.b.set(candidate).assignments() {
            if !touched.contains(&q) {
                touched.push(q);
            }
        }
        for &q in &touched {
            self.local_cost[q] = player_cost(self.model, &self.coverage[q], q);
        }
        self.energy += delta;
        debug_assert_eq!(
            self.energy,
            self.model.penalty() * self.local_cost.iter().sum::<i64>()
        );
    }

    /// Full binary assignment: selectors plus optimal multiplicity bits.
    /// At zero energy this is an exact ground state of the model.
    fn expand(&self) -> (Vec<u8>, i64) {
        let index = self.model.index();
        let mut x = vec![0u8; self.model.num_vars()];
        for &k in &self.choice {
            x[k] = 1;
        }
        for (p, row) in self.coverage.iter().enumerate() {
            if let Some((j, m)) = best_bit(index, row, p) {
                x[index.multiplicity_var(p, j, m).unwrap()] = 1;
            }
        }
        let energy = self.model.energy(&x).expect("expanded vector has model size");
        debug_assert_eq!(energy, self.energy, "incremental selection energy drifted");
        if self.energy == 0 {
            assert_eq!(energy, 0, "selection claims zero energy but the model disagrees");
        }
        (x, energy)
    }
}

/// Bookkeeping cost of one player given selector coverages: the minimum
/// over the player's multiplicity-bit options of the player's terms of
/// the energy (coverage-uniqueness plus per-action consistency), in
/// penalty units.
fn player_cost(model: &QuboModel, coverage: &[i64], player: usize) -> i64 {
    let index = model.index();
    let squares: i64 = coverage.iter().map(|&c| c * c).sum();
    // No bit set: (1 - 0)^2 plus every coverage squared.
    let mut best = 1 + squares;
    for (j, &c) in coverage.iter().enumerate() {
        let bound = index.bound(player, j) as i64;
        if bound == 0 {
            continue;
        }
        let m = c.clamp(1, bound);
        let cost = (m - c) * (m - c) + squares - c * c;
        best = best.min(cost);
    }
    best
}

fn best_bit(
    index: &crate::qubo::VariableIndex,
    coverage: &[i64],
    player: usize,
) -> Option<(usize, usize)> {
    let squares: i64 = coverage.iter().map(|&c| c * c).sum();
    let mut best: Option<(i64, usize, usize)> = None;
    for (j, &c) in coverage.iter().enumerate() {
        let bound = index.bound(player, j) as i64;
        if bound == 0 {
            continue;
        }
        let m = c.clamp(1, bound);
        let cost = (m - c) * (m - c) + squares - c * c;
        if best.is_none_or(|(b, _, _)| cost < b) {
            best = Some((cost, j, m as usize));
        }
    }
    match best {
        Some((cost, j, m)) if cost <= 1 + squares => Some((j, m)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bestresponse::collect_b;
    use crate::fixtures;
    use crate::qubo::build_qubo;

    #[test]
    fn deterministic_given_seed() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let params = SolverParams { num_repeats: 3, seed: 9, ..SolverParams::default() };
        let a = anneal_selections(&model, &b, &params).unwrap();
        let b2 = anneal_selections(&model, &b, &params).unwrap();
        assert_eq!(a.samples(), b2.samples());
    }

    #[test]
    fn finds_the_dominant_ground_state() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let params = SolverParams { num_repeats: 5, seed: 0, ..SolverParams::default() };
        let result = anneal_selections(&model, &b, &params).unwrap();
        assert_eq!(result.best_energy(), Some(0));
    }

    #[test]
    fn stays_positive_without_equilibria() {
        let g = fixtures::matching_pennies();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let params = SolverParams { num_repeats: 5, seed: 1, ..SolverParams::default() };
        let result = anneal_selections(&model, &b, &params).unwrap();
        assert!(result.best_energy().unwrap() > 0);
        for s in result.samples() {
            assert_eq!(model.energy(&s.vector).unwrap(), s.energy);
        }
    }
}
