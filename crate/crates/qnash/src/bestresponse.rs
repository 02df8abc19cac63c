//! Phase one: per-player best-response extraction.
//!
//! For every player and every joint action of their other neighbors (a
//! *context*), the actions maximizing the player's local payoff are
//! recorded as pointed sets. Ties produce one pointed set per maximizing
//! action. The concatenation over all players, in ascending player order
//! with contexts in lexicographic order, forms the collection `B` whose
//! cardinality drives the size of the compiled binary model.

use std::io::{self, Write};

use crate::game::{GameError, GraphicalGame};

/// One best-response strategy combination: the base player's maximizing
/// action together with the fixed actions of the other neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointedSet {
    pub base_player: usize,
    pub base_action: usize,
    /// `(neighbor, action)` pairs in ascending neighbor order; empty for
    /// isolated players.
    pub context: Vec<(usize, usize)>,
}

impl PointedSet {
    /// All `(player, action)` pairs assigned by this set, base point first.
    pub fn assignments(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        std::iter::once((self.base_player, self.base_action)).chain(self.context.iter().copied())
    }

    /// Action this set assigns to `player`, if the player is covered.
    pub fn action_of(&self, player: usize) -> Option<usize> {
        self.assignments().find(|&(q, _)| q == player).map(|(_, a)| a)
    }
}

/// All players' pointed sets, grouped by base player.
#[derive(Debug, Clone)]
pub struct BestResponseCollection {
    sets: Vec<PointedSet>,
    /// `offsets[p]..offsets[p+1]` indexes player `p`'s sets.
    offsets: Vec<usize>,
}

impl BestResponseCollection {
    pub fn num_players(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Total number of pointed sets over all players.
    pub fn cardinality(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[PointedSet] {
        &self.sets
    }

    pub fn set(&self, k: usize) -> &PointedSet {
        &self.sets[k]
    }

    /// Pointed sets whose base player is `p`.
    pub fn player_sets(&self, p: usize) -> &[PointedSet] {
        &self.sets[self.offsets[p]..self.offsets[p + 1]]
    }

    /// Indices into [`sets`](Self::sets) of player `p`'s pointed sets.
    pub fn player_range(&self, p: usize) -> std::ops::Range<usize> {
        self.offsets[p]..self.offsets[p + 1]
    }

    pub fn player_set_count(&self, p: usize) -> usize {
        self.offsets[p + 1] - self.offsets[p]
    }

    /// Dumps the collection as JSON lines, one object per pointed set:
    /// `{"base": p, "action": j, "context": {"q": a, ...}}`.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for set in &self.sets {
            let ctx: Vec<String> =
                set.context.iter().map(|(q, a)| format!("\"{q}\":{a}")).collect();
            writeln!(
                w,
                "{{\"base\":{},\"action\":{},\"context\":{{{}}}}}",
                set.base_player,
                set.base_action,
                ctx.join(",")
            )?;
        }
        Ok(())
    }
}

/// Best responses of one player: for every context over the player's
/// other neighbors (lexicographic order), one pointed set per payoff-
/// maximizing action (ascending action order).
pub fn best_responses(game: &GraphicalGame, player: usize) -> Result<Vec<PointedSet>, GameError> {
    if player >= game.num_players() {
        return Err(GameError::PlayerOutOfRange { player, n: game.num_players() });
    }
    let others = game.neighbors_without_self(player);
    let dims: Vec<usize> = others.iter().map(|&q| game.num_actions(q)).collect();
    let num_contexts: usize = dims.iter().product();
    let own_actions = game.num_actions(player);

    let mut sets = Vec::with_capacity(num_contexts);
    let mut context_actions = vec![0usize; others.len()];
    for context_index in 0..num_contexts {
        let mut best = i64::MIN;
        let mut winners: Vec<usize> = Vec::new();
        for action in 0..own_actions {
            let v = game.payoff_at(player, action, context_index);
            if v > best {
                best = v;
                winners.clear();
                winners.push(action);
            } else if v == best {
                winners.push(action);
            }
        }
        decode_row_major(context_index, &dims, &mut context_actions);
        for &action in &winners {
            sets.push(PointedSet {
                base_player: player,
                base_action: action,
                context: others.iter().copied().zip(context_actions.iter().copied()).collect(),
            });
        }
    }
    Ok(sets)
}

/// Assembles the full collection: players in ascending order, each
/// player's sets in context-lexicographic order. Deterministic, so the
/// downstream variable indexing is reproducible across runs.
pub fn collect_b(game: &GraphicalGame) -> BestResponseCollection {
    let n = game.num_players();
    let mut sets = Vec::new();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for p in 0..n {
        sets.extend(best_responses(game, p).expect("player index in range"));
        offsets.push(sets.len());
    }
    BestResponseCollection { sets, offsets }
}

fn decode_row_major(mut index: usize, dims: &[usize], out: &mut [usize]) {
    for (slot, &dim) in out.iter_mut().zip(dims).rev() {
        *slot = index % dim;
        index /= dim;
    }
}
