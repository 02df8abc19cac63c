//! Hand-built games shared by unit tests.

use crate::game::GraphicalGame;

/// 3-player fixture: player 0 has 2 actions and depends on players 1
/// (3 actions) and 2 (2 actions); the other payoff tables are zero.
/// Player 0's table, own action outermost:
///
/// ```text
///        B0C0 B0C1 B1C0 B1C1 B2C0 B2C1
///   A=0    4    1    2    2    1    4
///   A=1    1    3    2    1    2    2
/// ```
pub(crate) fn two_by_six_fixture() -> GraphicalGame {
    GraphicalGame::new(
        vec![2, 3, 2],
        vec![vec![0, 1, 2], vec![1, 0], vec![2, 0]],
        vec![
            vec![4, 1, 2, 2, 1, 4, 1, 3, 2, 1, 2, 2],
            vec![0; 6],
            vec![0; 4],
        ],
    )
    .unwrap()
}

/// 2-player coordination game: payoff 1 to both players when actions
/// match, 0 otherwise. Pure equilibria: (0,0) and (1,1).
pub(crate) fn coordination_game() -> GraphicalGame {
    GraphicalGame::new(
        vec![2, 2],
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![1, 0, 0, 1], vec![1, 0, 0, 1]],
    )
    .unwrap()
}

/// 2-player matching-pennies-style game: player 0 wants matching
/// actions, player 1 wants differing actions. No pure equilibrium.
pub(crate) fn matching_pennies() -> GraphicalGame {
    GraphicalGame::new(
        vec![2, 2],
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![1, 0, 0, 1], vec![0, 1, 1, 0]],
    )
    .unwrap()
}

/// 3-player, 2-action game with one strictly dominant action per player
/// (action 1): players 0 and 1 share an edge, player 2 is isolated.
/// Unique pure equilibrium (1, 1, 1).
pub(crate) fn dominant_action_game() -> GraphicalGame {
    // Edge players: own action decides (0 -> 3, 1 -> 9), context ignored.
    let edge_table = vec![3, 3, 9, 9];
    GraphicalGame::new(
        vec![2, 2, 2],
        vec![vec![0, 1], vec![1, 0], vec![2]],
        vec![edge_table.clone(), edge_table, vec![3, 9]],
    )
    .unwrap()
}
