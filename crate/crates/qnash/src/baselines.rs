//! Ground truth and comparison algorithms: the direct equilibrium check
//! and oracle, brute force over best-response set combinations, and
//! random search over the same combinations under a time budget.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bestresponse::{collect_b, BestResponseCollection};
use crate::game::{GameError, GlobalProfile, GraphicalGame};

/// Default cap on the global profile space of [`oracle_pne`] (3^10).
pub const DEFAULT_PROFILE_CAP: u128 = 59_049;

/// Default cap on the combination space of the brute-force searches.
pub const DEFAULT_COMBINATION_CAP: u128 = 1_000_000_000_000;

#[derive(Debug)]
pub enum BaselineError {
    ProfileSpaceTooLarge { size: u128, cap: u128 },
    CombinationSpaceTooLarge { size: u128, cap: u128 },
    Game(GameError),
}

impl fmt::Display for BaselineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaselineError::ProfileSpaceTooLarge { size, cap } => {
                write!(f, "profile space of size {size} exceeds the cap {cap}")
            }
            BaselineError::CombinationSpaceTooLarge { size, cap } => {
                write!(f, "combination space of size {size} exceeds the cap {cap}")
            }
            BaselineError::Game(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BaselineError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            BaselineError::Game(e) => Some(e),
            _ => None,
        }
    }
}

impl From<GameError> for BaselineError {
    fn from(e: GameError) -> Self {
        BaselineError::Game(e)
    }
}

/// Result of a baseline run.
#[derive(Debug, Clone)]
pub struct BaselineReport {
    /// Equilibria found, sorted; each passes [`is_pne`].
    pub pne: Vec<GlobalProfile>,
    pub elapsed_ms: f64,
    /// Full combinations (or profiles, or samples) actually evaluated.
    pub combinations_examined: u64,
    /// Size of the full search space, saturating.
    pub combinations_total: u128,
    /// Partial combinations abandoned by consistency pruning.
    pub pruned_prefixes: u64,
}

/// True when no player can improve their payoff by deviating
/// unilaterally from `profile`.
pub fn is_pne(game: &GraphicalGame, profile: &GlobalProfile) -> Result<bool, GameError> {
    game.validate_profile(profile)?;
    Ok(profile_is_pne(game, profile.actions()))
}

pub(crate) fn profile_is_pne(game: &GraphicalGame, assignment: &[usize]) -> bool {
    for p in 0..game.num_players() {
        let ctx = game.context_index(p, assignment);
        let current = game.payoff_at(p, assignment[p], ctx);
        for a in 0..game.num_actions(p) {
            if game.payoff_at(p, a, ctx) > current {
                return false;
            }
        }
    }
    true
}

/// Exact equilibrium set by enumerating every global profile.
pub fn oracle_pne(game: &GraphicalGame) -> Result<BaselineReport, BaselineError> {
    oracle_pne_capped(game, DEFAULT_PROFILE_CAP)
}

pub fn oracle_pne_capped(game: &GraphicalGame, cap: u128) -> Result<BaselineReport, BaselineError> {
    let size: u128 = game.actions().iter().map(|&a| a as u128).try_fold(1u128, |acc, a| {
        acc.checked_mul(a)
    }).unwrap_or(u128::MAX);
    if size > cap {
        return Err(BaselineError::ProfileSpaceTooLarge { size, cap });
    }
    let start = Instant::now();
    let n = game.num_players();
    let mut assignment = vec![0usize; n];
    let mut found = Vec::new();
    let mut examined = 0u64;
    loop {
        examined += 1;
        if profile_is_pne(game, &assignment) {
            found.push(GlobalProfile::new(assignment.clone()));
        }
        if !advance(&mut assignment, game.actions()) {
            break;
        }
    }
    found.sort();
    Ok(BaselineReport {
        pne: found,
        elapsed_ms: elapsed_ms(start),
        combinations_examined: examined,
        combinations_total: size,
        pruned_prefixes: 0,
    })
}

/// Odometer over a mixed-radix assignment; false when wrapped around.
fn advance(assignment: &mut [usize], dims: &[usize]) -> bool {
    for i in (0..assignment.len()).rev() {
        assignment[i] += 1;
        if assignment[i] < dims[i] {
            return true;
        }
        assignment[i] = 0;
    }
    false
}

fn combination_space(b: &BestResponseCollection) -> u128 {
    (0..b.num_players())
        .map(|p| b.player_set_count(p) as u128)
        .try_fold(1u128, |acc, c| acc.checked_mul(c))
        .unwrap_or(u128::MAX)
}

/// Brute force with prefix pruning: picks one pointed set per player,
/// abandoning a partial combination as soon as two sets conflict, and
/// validates each surviving union as an equilibrium. Pruning preserves
/// completeness; the unpruned space size is still reported.
pub fn brute_force_sets(game: &GraphicalGame) -> Result<BaselineReport, BaselineError> {
    brute_force_sets_capped(game, DEFAULT_COMBINATION_CAP)
}

pub fn brute_force_sets_capped(
    game: &GraphicalGame,
    cap: u128,
) -> Result<BaselineReport, BaselineError> {
    let b = collect_b(game);
    let total = combination_space(&b);
    if total > cap {
        return Err(BaselineError::CombinationSpaceTooLarge { size: total, cap });
    }
    let start = Instant::now();
    let n = game.num_players();
    let mut search = BfSearch {
        game,
        b: &b,
        assignment: vec![None; n],
        found: BTreeSet::new(),
        examined: 0,
        pruned: 0,
    };
    search.descend(0);
    Ok(BaselineReport {
        pne: search.found.into_iter().collect(),
        elapsed_ms: elapsed_ms(start),
        combinations_examined: search.examined,
        combinations_total: total,
        pruned_prefixes: search.pruned,
    })
}

struct BfSearch<'a> {
    game: &'a GraphicalGame,
    b: &'a BestResponseCollection,
    assignment: Vec<Option<usize>>,
    found: BTreeSet<GlobalProfile>,
    examined: u64,
    pruned: u64,
}

impl BfSearch<'_> {
    fn descend(&mut self, player: usize) {
        if player == self.b.num_players() {
            self.examined += 1;
            let actions: Vec<usize> =
                self.assignment.iter().map(|a| a.expect("full depth covers all players")).collect();
            if profile_is_pne(self.game, &actions) {
                self.found.insert(GlobalProfile::new(actions));
            }
            return;
        }
        for k in self.b.player_range(player) {
            let mut touched = Vec::new();
            let mut compatible = true;
            for (q, a) in self.b.set(k).assignments() {
                match self.assignment[q] {
                    None => {
                        self.assignment[q] = Some(a);
                        touched.push(q);
                    }
                    Some(prev) if prev == a => {}
                    Some(_) => {
                        compatible = false;
                        break;
                    }
                }
            }
            if compatible {
                self.descend(player + 1);
            } else {
                self.pruned += 1;
            }
            for q in touched {
                self.assignment[q] = None;
            }
        }
    }
}

/// Brute force without pruning: iterates the full Cartesian product of
/// per-player pointed sets. Exists for cost measurements and as a
/// cross-check that pruning drops no equilibrium.
pub fn brute_force_sets_unpruned(game: &GraphicalGame) -> Result<BaselineReport, BaselineError> {
    brute_force_sets_unpruned_capped(game, DEFAULT_COMBINATION_CAP)
}

pub fn brute_force_sets_unpruned_capped(
    game: &GraphicalGame,
    cap: u128,
) -> Result<BaselineReport, BaselineError> {
    let b = collect_b(game);
    let total = combination_space(&b);
    if total > cap {
        return Err(BaselineError::CombinationSpaceTooLarge { size: total, cap });
    }
    let start = Instant::now();
    let n = game.num_players();
    let counts: Vec<usize> = (0..n).map(|p| b.player_set_count(p)).collect();
    let mut choice = vec![0usize; n];
    let mut found = BTreeSet::new();
    let mut examined = 0u64;
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    loop {
        examined += 1;
        if let Some(actions) = union_of(&b, &choice, &mut assignment) {
            if profile_is_pne(game, &actions) {
                found.insert(GlobalProfile::new(actions));
            }
        }
        if !advance(&mut choice, &counts) {
            break;
        }
    }
    Ok(BaselineReport {
        pne: found.into_iter().collect(),
        elapsed_ms: elapsed_ms(start),
        combinations_examined: examined,
        combinations_total: total,
        pruned_prefixes: 0,
    })
}

/// Union of one pointed set per player, or `None` on conflict.
fn union_of(
    b: &BestResponseCollection,
    choice: &[usize],
    scratch: &mut [Option<usize>],
) -> Option<Vec<usize>> {
    scratch.fill(None);
    for (p, &c) in choice.iter().enumerate() {
        let k = b.player_range(p).start + c;
        for (q, a) in b.set(k).assignments() {
            match scratch[q] {
                None => scratch[q] = Some(a),
                Some(prev) if prev == a => {}
                Some(_) => return None,
            }
        }
    }
    Some(scratch.iter().map(|a| a.expect("every player has a base set")).collect())
}

/// Samples one pointed set per player uniformly at random, keeps the
/// consistent unions that validate as equilibria, and stops once
/// `timeout` has elapsed. The sample sequence is a pure function of the
/// seed; the timeout only cuts it off.
pub fn random_search(game: &GraphicalGame, timeout: Duration, seed: u64) -> BaselineReport {
    let b = collect_b(game);
    let total = combination_space(&b);
    let start = Instant::now();
    let n = game.num_players();
    let counts: Vec<usize> = (0..n).map(|p| b.player_set_count(p)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = BTreeSet::new();
    let mut examined = 0u64;
    let mut choice = vec![0usize; n];
    let mut scratch: Vec<Option<usize>> = vec![None; n];
    while start.elapsed() < timeout {
        for (p, slot) in choice.iter_mut().enumerate() {
            *slot = rng.random_range(0..counts[p]);
        }
        examined += 1;
        if let Some(actions) = union_of(&b, &choice, &mut scratch) {
            if profile_is_pne(game, &actions) {
                found.insert(GlobalProfile::new(actions));
            }
        }
    }
    BaselineReport {
        pne: found.into_iter().collect(),
        elapsed_ms: elapsed_ms(start),
        combinations_examined: examined,
        combinations_total: total,
        pruned_prefixes: 0,
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}
