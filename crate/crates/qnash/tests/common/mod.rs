//! Independent oracles and fixtures for the integration tests. The
//! energy oracle evaluates the three squared constraint groups literally
//! and the equilibrium oracle checks deviations straight off the public
//! payoff lookup, so neither shares code with the paths they verify.

use std::collections::BTreeSet;

use qnash::{
    BestResponseCollection, GlobalProfile, GraphicalGame, PointedSet, QuboModel,
};

/// Literal evaluation of the penalty energy: per-player coverage
/// uniqueness, per-pair multiplicity consistency, selection count.
pub fn penalty_energy_by_terms(
    game: &GraphicalGame,
    b: &BestResponseCollection,
    model: &QuboModel,
    x: &[u8],
) -> i64 {
    let n = game.num_players();
    let index = model.index();

    let mut term1 = 0i64;
    for p in 0..n {
        let mut bits = 0i64;
        for j in 0..game.num_actions(p) {
            for m in 1..=index.bound(p, j) {
                bits += i64::from(x[index.multiplicity_var(p, j, m).unwrap()]);
            }
        }
        term1 += (1 - bits) * (1 - bits);
    }

    let mut term2 = 0i64;
    for p in 0..n {
        for j in 0..game.num_actions(p) {
            let mut claimed = 0i64;
            for m in 1..=index.bound(p, j) {
                claimed += m as i64 * i64::from(x[index.multiplicity_var(p, j, m).unwrap()]);
            }
            let mut covering = 0i64;
            for (k, set) in b.sets().iter().enumerate() {
                if set.assignments().any(|(q, a)| q == p && a == j) {
                    covering += i64::from(x[k]);
                }
            }
            let diff = claimed - covering;
            term2 += diff * diff;
        }
    }

    let mut selected = 0i64;
    for k in 0..b.cardinality() {
        selected += i64::from(x[k]);
    }
    let diff = n as i64 - selected;
    let term3 = diff * diff;

    model.penalty() * (term1 + term2 + term3)
}

/// Every pure equilibrium of the game, by checking each global profile
/// against each unilateral deviation through the public payoff lookup.
pub fn pne_by_definition(game: &GraphicalGame) -> BTreeSet<GlobalProfile> {
    let n = game.num_players();
    let mut assignment = vec![0usize; n];
    let mut found = BTreeSet::new();
    loop {
        let profile = GlobalProfile::new(assignment.clone());
        let mut stable = true;
        'players: for p in 0..n {
            let current = game.payoff(p, &profile).unwrap();
            for a in 0..game.num_actions(p) {
                let mut deviated = assignment.clone();
                deviated[p] = a;
                if game.payoff(p, &GlobalProfile::new(deviated)).unwrap() > current {
                    stable = false;
                    break 'players;
                }
            }
        }
        if stable {
            found.insert(profile);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return found;
            }
            i -= 1;
            assignment[i] += 1;
            if assignment[i] < game.num_actions(i) {
                break;
            }
            assignment[i] = 0;
        }
    }
}

/// Locates the pointed set with the given base point and context.
pub fn find_set(
    b: &BestResponseCollection,
    base_player: usize,
    base_action: usize,
    context: &[(usize, usize)],
) -> usize {
    b.player_range(base_player)
        .find(|&k| {
            let set: &PointedSet = b.set(k);
            set.base_action == base_action && set.context == context
        })
        .expect("requested pointed set exists")
}

/// 3-player, 2-action game with one strictly dominant action per player
/// (action 1): players 0 and 1 share an edge, player 2 is isolated.
pub fn dominant_action_game() -> GraphicalGame {
    let edge_table = vec![3, 3, 9, 9];
    GraphicalGame::new(
        vec![2, 2, 2],
        vec![vec![0, 1], vec![1, 0], vec![2]],
        vec![edge_table.clone(), edge_table, vec![3, 9]],
    )
    .unwrap()
}

/// 2-player game without any pure equilibrium.
pub fn matching_pennies() -> GraphicalGame {
    GraphicalGame::new(
        vec![2, 2],
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![1, 0, 0, 1], vec![0, 1, 1, 0]],
    )
    .unwrap()
}

/// Path game on four players with constant payoffs: every action is a
/// best response, which makes arbitrary consistent unions available.
pub fn constant_path_game() -> GraphicalGame {
    GraphicalGame::new(
        vec![2, 2, 2, 2],
        vec![vec![0, 1], vec![1, 0, 2], vec![2, 1, 3], vec![3, 2]],
        vec![vec![0; 4], vec![0; 8], vec![0; 8], vec![0; 4]],
    )
    .unwrap()
}
