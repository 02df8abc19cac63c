//! Graphical game data model, topology generator, payoff sampling and
//! JSON serialization.
//!
//! A graphical game stores, for every player `p`, a neighborhood `N(p)`
//! (the players whose actions influence `p`'s payoff, always including
//! `p` itself) and a local payoff table over the joint actions of that
//! neighborhood. The representation is exponential only in the maximal
//! node degree, not in the number of players.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Minimum number of players in a well-formed game.
pub const MIN_PLAYERS: usize = 2;

/// Generated payoffs are sampled uniformly from `0..=PAYOFF_MAX`.
pub const PAYOFF_MAX: i64 = 15;

/// Dependency-graph shape produced by [`generate_game`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    /// Complete binary tree filled level by level.
    Tree,
    /// Simple cycle; needs at least 3 players.
    Circle,
    /// Two parallel lanes of `n/2` players connected by rungs (a 2 x n/2
    /// grid); needs an even number of players.
    Road,
}

impl Topology {
    pub fn name(self) -> &'static str {
        match self {
            Topology::Tree => "tree",
            Topology::Circle => "circle",
            Topology::Road => "road",
        }
    }

    pub fn parse(s: &str) -> Option<Topology> {
        match s {
            "tree" => Some(Topology::Tree),
            "circle" => Some(Topology::Circle),
            "road" => Some(Topology::Road),
            _ => None,
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors produced by game construction, lookup and file I/O.
#[derive(Debug)]
pub enum GameError {
    Io(io::Error),
    Json(serde_json::Error),
    /// Fewer than [`MIN_PLAYERS`] players.
    PlayerCount { n: usize },
    /// A player with fewer than two actions.
    ActionCount { player: usize, count: usize },
    /// A top-level list whose length disagrees with the player count.
    FieldLength { field: &'static str, expected: usize, got: usize },
    /// Neighborhood of `player` does not start with `player` followed by
    /// strictly ascending other members.
    NeighborhoodOrder { player: usize },
    /// Neighborhood member out of range.
    NeighborhoodMember { player: usize, member: usize },
    /// `neighbor` is listed by `player` but not vice versa.
    NeighborhoodAsymmetry { player: usize, neighbor: usize },
    /// Payoff table size does not match the neighborhood's joint-action count.
    PayoffTableSize { player: usize, expected: usize, got: usize },
    /// Cycle topology with fewer than 3 players.
    CircleTooSmall { n: usize },
    /// Road topology with an odd player count.
    RoadOddPlayers { n: usize },
    PlayerOutOfRange { player: usize, n: usize },
    ActionOutOfRange { player: usize, action: usize, count: usize },
    ProfileLength { expected: usize, got: usize },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::Io(e) => write!(f, "i/o error: {e}"),
            GameError::Json(e) => write!(f, "malformed game file: {e}"),
            GameError::PlayerCount { n } => {
                write!(f, "a game needs at least {MIN_PLAYERS} players, got {n}")
            }
            GameError::ActionCount { player, count } => {
                write!(f, "player {player} needs at least 2 actions, got {count}")
            }
            GameError::FieldLength { field, expected, got } => {
                write!(f, "field `{field}` must have {expected} entries, got {got}")
            }
            GameError::NeighborhoodOrder { player } => write!(
                f,
                "neighborhood of player {player} must list {player} first, \
                 followed by the other members in ascending order"
            ),
            GameError::NeighborhoodMember { player, member } => {
                write!(f, "neighborhood of player {player} names unknown player {member}")
            }
            GameError::NeighborhoodAsymmetry { player, neighbor } => write!(
                f,
                "asymmetric neighborhoods: {neighbor} is a neighbor of {player} \
                 but {player} is not a neighbor of {neighbor}"
            ),
            GameError::PayoffTableSize { player, expected, got } => write!(
                f,
                "payoff table of player {player} must have {expected} entries, got {got}"
            ),
            GameError::CircleTooSmall { n } => {
                write!(f, "circle topology needs at least 3 players, got {n}")
            }
            GameError::RoadOddPlayers { n } => {
                write!(f, "road topology requires an even number of players, got {n}")
            }
            GameError::PlayerOutOfRange { player, n } => {
                write!(f, "player index {player} out of range for {n} players")
            }
            GameError::ActionOutOfRange { player, action, count } => {
                write!(f, "action {action} out of range for player {player} ({count} actions)")
            }
            GameError::ProfileLength { expected, got } => {
                write!(f, "profile must assign {expected} players, got {got}")
            }
        }
    }
}

impl std::error::Error for GameError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            GameError::Io(e) => Some(e),
            GameError::Json(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for GameError {
    fn from(e: io::Error) -> Self {
        GameError::Io(e)
    }
}

impl From<serde_json::Error> for GameError {
    fn from(e: serde_json::Error) -> Self {
        GameError::Json(e)
    }
}

/// One action per player; `actions()[p]` is the action played by `p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlobalProfile(Vec<usize>);

impl GlobalProfile {
    pub fn new(actions: Vec<usize>) -> Self {
        GlobalProfile(actions)
    }

    pub fn actions(&self) -> &[usize] {
        &self.0
    }

    pub fn action(&self, player: usize) -> usize {
        self.0[player]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<usize>> for GlobalProfile {
    fn from(v: Vec<usize>) -> Self {
        GlobalProfile(v)
    }
}

/// Joint action over one player's neighborhood, in neighborhood order
/// (the owner's own action first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalProfile {
    pub owner: usize,
    pub assignment: Vec<usize>,
}

/// An undirected graphical game: per-player action counts, neighborhoods
/// and local payoff tables.
///
/// Neighborhoods are kept in canonical order: the player itself first,
/// the remaining members in ascending index order. Payoff tables are
/// flattened row-major over the neighborhood-ordered joint actions, so
/// the owner's own action is the outermost index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicalGame {
    actions: Vec<usize>,
    neighborhoods: Vec<Vec<usize>>,
    payoffs: Vec<Vec<i64>>,
}

/// On-disk JSON mirror of [`GraphicalGame`].
#[derive(Serialize, Deserialize)]
struct GameFile {
    n: usize,
    actions: Vec<usize>,
    neighborhoods: Vec<Vec<usize>>,
    payoffs: Vec<Vec<i64>>,
}

impl GraphicalGame {
    /// Builds a game after validating every structural invariant:
    /// player/action counts, canonical neighborhood ordering, symmetry
    /// of the dependency graph and payoff-table sizes.
    pub fn new(
        actions: Vec<usize>,
        neighborhoods: Vec<Vec<usize>>,
        payoffs: Vec<Vec<i64>>,
    ) -> Result<Self, GameError> {
        let n = actions.len();
        if n < MIN_PLAYERS {
            return Err(GameError::PlayerCount { n });
        }
        if neighborhoods.len() != n {
            return Err(GameError::FieldLength {
                field: "neighborhoods",
                expected: n,
                got: neighborhoods.len(),
            });
        }
        if payoffs.len() != n {
            return Err(GameError::FieldLength { field: "payoffs", expected: n, got: payoffs.len() });
        }
        for (p, &count) in actions.iter().enumerate() {
            if count < 2 {
                return Err(GameError::ActionCount { player: p, count });
            }
        }
        for (p, nbhd) in neighborhoods.iter().enumerate() {
            if nbhd.first() != Some(&p) {
                return Err(GameError::NeighborhoodOrder { player: p });
            }
            for pair in nbhd[1..].windows(2) {
                if pair[0] >= pair[1] {
                    return Err(GameError::NeighborhoodOrder { player: p });
                }
            }
            for &q in &nbhd[1..] {
                if q >= n {
                    return Err(GameError::NeighborhoodMember { player: p, member: q });
                }
                if q == p {
                    return Err(GameError::NeighborhoodOrder { player: p });
                }
            }
        }
        for (p, nbhd) in neighborhoods.iter().enumerate() {
            for &q in &nbhd[1..] {
                if !neighborhoods[q].contains(&p) {
                    return Err(GameError::NeighborhoodAsymmetry { player: p, neighbor: q });
                }
            }
        }
        for (p, table) in payoffs.iter().enumerate() {
            let expected: usize = neighborhoods[p].iter().map(|&q| actions[q]).product();
            if table.len() != expected {
                return Err(GameError::PayoffTableSize {
                    player: p,
                    expected,
                    got: table.len(),
                });
            }
        }
        Ok(GraphicalGame { actions, neighborhoods, payoffs })
    }

    pub fn num_players(&self) -> usize {
        self.actions.len()
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    pub fn num_actions(&self, player: usize) -> usize {
        self.actions[player]
    }

    /// Neighborhood of `player` in canonical order (`player` first).
    pub fn neighborhood(&self, player: usize) -> &[usize] {
        &self.neighborhoods[player]
    }

    /// Neighborhood of `player` without the player itself, ascending.
    pub fn neighbors_without_self(&self, player: usize) -> &[usize] {
        &self.neighborhoods[player][1..]
    }

    /// Flattened local payoff table of `player`.
    pub fn payoff_table(&self, player: usize) -> &[i64] {
        &self.payoffs[player]
    }

    /// Maximal neighborhood size over all players.
    pub fn max_neighborhood_size(&self) -> usize {
        self.neighborhoods.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of joint actions over `player`'s neighbors excluding the
    /// player itself; equals the stride of the player's own action in
    /// the flattened payoff table.
    pub fn context_count(&self, player: usize) -> usize {
        self.neighbors_without_self(player).iter().map(|&q| self.actions[q]).product()
    }

    /// Row-major index of the context formed by restricting a full
    /// action assignment to `player`'s neighbors (excluding the player).
    pub(crate) fn context_index(&self, player: usize, assignment: &[usize]) -> usize {
        let mut idx = 0;
        for &q in self.neighbors_without_self(player) {
            idx = idx * self.actions[q] + assignment[q];
        }
        idx
    }

    /// Table lookup by own action and context index.
    pub(crate) fn payoff_at(&self, player: usize, own_action: usize, context_index: usize) -> i64 {
        let stride = self.context_count(player);
        self.payoffs[player][own_action * stride + context_index]
    }

    pub fn validate_profile(&self, profile: &GlobalProfile) -> Result<(), GameError> {
        if profile.len() != self.num_players() {
            return Err(GameError::ProfileLength {
                expected: self.num_players(),
                got: profile.len(),
            });
        }
        for (p, &a) in profile.actions().iter().enumerate() {
            if a >= self.actions[p] {
                return Err(GameError::ActionOutOfRange { player: p, action: a, count: self.actions[p] });
            }
        }
        Ok(())
    }

    /// Payoff to `player` under a global profile: a pure lookup into the
    /// player's local table restricted to their neighborhood.
    pub fn payoff(&self, player: usize, profile: &GlobalProfile) -> Result<i64, GameError> {
        if player >= self.num_players() {
            return Err(GameError::PlayerOutOfRange { player, n: self.num_players() });
        }
        self.validate_profile(profile)?;
        let ctx = self.context_index(player, profile.actions());
        Ok(self.payoff_at(player, profile.action(player), ctx))
    }

    /// Payoff to the owner of a local profile.
    pub fn payoff_local(&self, local: &LocalProfile) -> Result<i64, GameError> {
        let p = local.owner;
        if p >= self.num_players() {
            return Err(GameError::PlayerOutOfRange { player: p, n: self.num_players() });
        }
        let nbhd = &self.neighborhoods[p];
        if local.assignment.len() != nbhd.len() {
            return Err(GameError::ProfileLength { expected: nbhd.len(), got: local.assignment.len() });
        }
        let mut idx = 0;
        for (&q, &a) in nbhd.iter().zip(&local.assignment) {
            if a >= self.actions[q] {
                return Err(GameError::ActionOutOfRange { player: q, action: a, count: self.actions[q] });
            }
            idx = idx * self.actions[q] + a;
        }
        Ok(self.payoffs[p][idx])
    }

    fn to_file(&self) -> GameFile {
        GameFile {
            n: self.num_players(),
            actions: self.actions.clone(),
            neighborhoods: self.neighborhoods.clone(),
            payoffs: self.payoffs.clone(),
        }
    }

    fn from_file(file: GameFile) -> Result<Self, GameError> {
        if file.actions.len() != file.n {
            return Err(GameError::FieldLength {
                field: "actions",
                expected: file.n,
                got: file.actions.len(),
            });
        }
        GraphicalGame::new(file.actions, file.neighborhoods, file.payoffs)
    }
}

/// Generates a game with the given dependency topology; every payoff is
/// drawn uniformly from `0..=PAYOFF_MAX`. The same `(topology, n,
/// actions_per_player, seed)` tuple always yields the identical game.
pub fn generate_game(
    topology: Topology,
    n: usize,
    actions_per_player: usize,
    seed: u64,
) -> Result<GraphicalGame, GameError> {
    if n < MIN_PLAYERS {
        return Err(GameError::PlayerCount { n });
    }
    if actions_per_player < 2 {
        return Err(GameError::ActionCount { player: 0, count: actions_per_player });
    }
    let edges = topology_edges(topology, n)?;

    let mut neighbor_sets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, b) in edges {
        neighbor_sets[a].push(b);
        neighbor_sets[b].push(a);
    }
    let neighborhoods: Vec<Vec<usize>> = neighbor_sets
        .into_iter()
        .enumerate()
        .map(|(p, mut others)| {
            others.sort_unstable();
            others.dedup();
            let mut nbhd = Vec::with_capacity(others.len() + 1);
            nbhd.push(p);
            nbhd.extend(others);
            nbhd
        })
        .collect();

    let actions = vec![actions_per_player; n];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let payoffs: Vec<Vec<i64>> = neighborhoods
        .iter()
        .map(|nbhd| {
            let size: usize = nbhd.iter().map(|&q| actions[q]).product();
            (0..size).map(|_| rng.random_range(0..=PAYOFF_MAX)).collect()
        })
        .collect();

    GraphicalGame::new(actions, neighborhoods, payoffs)
}

fn topology_edges(topology: Topology, n: usize) -> Result<Vec<(usize, usize)>, GameError> {
    match topology {
        Topology::Tree => {
            // Complete binary tree, nodes numbered level by level.
            Ok((1..n).map(|i| (i, (i - 1) / 2)).collect())
        }
        Topology::Circle => {
            if n < 3 {
                return Err(GameError::CircleTooSmall { n });
            }
            Ok((0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Topology::Road => {
            if n % 2 != 0 {
                return Err(GameError::RoadOddPlayers { n });
            }
            let half = n / 2;
            let mut edges = Vec::with_capacity(3 * half);
            for i in 0..half - 1 {
                edges.push((i, i + 1));
                edges.push((half + i, half + i + 1));
            }
            for i in 0..half {
                edges.push((i, half + i));
            }
            Ok(edges)
        }
    }
}

/// Writes a game as pretty-printed JSON; byte-stable for equal games.
pub fn save_game(path: &Path, game: &GraphicalGame) -> Result<(), GameError> {
    let mut text = serde_json::to_string_pretty(&game.to_file())?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Reads and fully validates a game file; structural violations are
/// reported with a diagnostic naming the offending player.
pub fn load_game(path: &Path) -> Result<GraphicalGame, GameError> {
    let text = fs::read_to_string(path)?;
    let file: GameFile = serde_json::from_str(&text)?;
    GraphicalGame::from_file(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::two_by_six_fixture;

    #[test]
    fn circle_shape() {
        let g = generate_game(Topology::Circle, 6, 3, 42).unwrap();
        assert_eq!(g.num_players(), 6);
        for p in 0..6 {
            assert_eq!(g.neighborhood(p).len(), 3, "player {p}");
            assert_eq!(g.payoff_table(p).len(), 27, "player {p}");
        }
        assert_eq!(g.neighborhood(0), &[0, 1, 5]);
        assert_eq!(g.neighborhood(3), &[3, 2, 4]);
    }

    #[test]
    fn circle_rejects_two_players() {
        match generate_game(Topology::Circle, 2, 2, 0) {
            Err(GameError::CircleTooSmall { n: 2 }) => {}
            other => panic!("expected CircleTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn road_shape() {
        let g = generate_game(Topology::Road, 6, 3, 7).unwrap();
        let sizes: Vec<usize> = (0..6).map(|p| g.neighborhood(p).len()).collect();
        assert_eq!(sizes, vec![3, 4, 3, 3, 4, 3]);
        assert_eq!(g.neighborhood(1), &[1, 0, 2, 4]);
    }

    #[test]
    fn road_rejects_odd_players() {
        match generate_game(Topology::Road, 7, 3, 0) {
            Err(GameError::RoadOddPlayers { n: 7 }) => {}
            other => panic!("expected RoadOddPlayers, got {other:?}"),
        }
    }

    #[test]
    fn tree_shape() {
        let g = generate_game(Topology::Tree, 10, 3, 1).unwrap();
        assert_eq!(g.neighborhood(0), &[0, 1, 2]);
        assert_eq!(g.neighborhood(1), &[1, 0, 3, 4]);
        assert_eq!(g.neighborhood(4), &[4, 1, 9]);
        assert_eq!(g.neighborhood(9), &[9, 4]);
    }

    #[test]
    fn rejects_single_action() {
        match generate_game(Topology::Tree, 4, 1, 0) {
            Err(GameError::ActionCount { count: 1, .. }) => {}
            other => panic!("expected ActionCount, got {other:?}"),
        }
    }

    #[test]
    fn generator_is_deterministic() {
        let a = generate_game(Topology::Circle, 6, 3, 42).unwrap();
        let b = generate_game(Topology::Circle, 6, 3, 42).unwrap();
        assert_eq!(a, b);
        let c = generate_game(Topology::Circle, 6, 3, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn payoffs_in_range_and_roughly_uniform() {
        // Deterministic histogram over a few hundred thousand samples.
        let mut counts = [0u64; 16];
        let mut total = 0u64;
        for seed in 0..40 {
            let g = generate_game(Topology::Circle, 370, 3, seed).unwrap();
            for p in 0..g.num_players() {
                for &v in g.payoff_table(p) {
                    assert!((0..=PAYOFF_MAX).contains(&v));
                    counts[v as usize] += 1;
                    total += 1;
                }
            }
        }
        assert!(total >= 100_000);
        let expected = total as f64 / 16.0;
        for (v, &c) in counts.iter().enumerate() {
            let rel = (c as f64 - expected).abs() / expected;
            assert!(rel < 0.05, "value {v}: count {c}, expected {expected:.0}, rel {rel:.4}");
        }
    }

    #[test]
    fn representation_size_linear_in_players_at_fixed_topology() {
        let entries = |n: usize| -> usize {
            let g = generate_game(Topology::Circle, n, 3, 0).unwrap();
            (0..n).map(|p| g.payoff_table(p).len()).sum()
        };
        assert_eq!(entries(6), 6 * 27);
        assert_eq!(entries(12), 12 * 27);
    }

    #[test]
    fn payoff_lookup_matches_table() {
        let g = two_by_six_fixture();
        let v = g.payoff(0, &GlobalProfile::new(vec![0, 2, 1])).unwrap();
        assert_eq!(v, 4);
        let v = g.payoff(0, &GlobalProfile::new(vec![1, 0, 0])).unwrap();
        assert_eq!(v, 1);
    }

    #[test]
    fn payoff_constant_table() {
        let g = GraphicalGame::new(
            vec![2, 2],
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![9; 4], vec![9; 4]],
        )
        .unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(g.payoff(0, &GlobalProfile::new(vec![a, b])).unwrap(), 9);
            }
        }
    }

    #[test]
    fn payoff_rejects_bad_inputs() {
        let g = two_by_six_fixture();
        assert!(matches!(
            g.payoff(5, &GlobalProfile::new(vec![0, 0, 0])),
            Err(GameError::PlayerOutOfRange { .. })
        ));
        assert!(matches!(
            g.payoff(0, &GlobalProfile::new(vec![0, 3, 0])),
            Err(GameError::ActionOutOfRange { player: 1, action: 3, .. })
        ));
        assert!(matches!(
            g.payoff(0, &GlobalProfile::new(vec![0, 0])),
            Err(GameError::ProfileLength { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn local_profile_lookup() {
        let g = two_by_six_fixture();
        let v = g
            .payoff_local(&LocalProfile { owner: 0, assignment: vec![0, 2, 1] })
            .unwrap();
        assert_eq!(v, 4);
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.json");
        let g = generate_game(Topology::Circle, 6, 3, 42).unwrap();
        save_game(&path, &g).unwrap();
        let loaded = load_game(&path).unwrap();
        assert_eq!(g, loaded);
    }

    #[test]
    fn load_rejects_asymmetric_neighborhoods() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        // 1 lists 0 as neighbor, but 0 does not list 1.
        let text = r#"{
            "n": 2,
            "actions": [2, 2],
            "neighborhoods": [[0], [1, 0]],
            "payoffs": [[1, 2], [1, 2, 3, 4]]
        }"#;
        std::fs::write(&path, text).unwrap();
        match load_game(&path) {
            Err(GameError::NeighborhoodAsymmetry { player: 1, neighbor: 0 }) => {}
            other => panic!("expected NeighborhoodAsymmetry, got {other:?}"),
        }
    }

    #[test]
    fn load_rejects_wrong_table_size() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        let text = r#"{
            "n": 2,
            "actions": [2, 2],
            "neighborhoods": [[0, 1], [1, 0]],
            "payoffs": [[1, 2, 3], [1, 2, 3, 4]]
        }"#;
        std::fs::write(&path, text).unwrap();
        match load_game(&path) {
            Err(GameError::PayoffTableSize { player: 0, expected: 4, got: 3 }) => {}
            other => panic!("expected PayoffTableSize, got {other:?}"),
        }
    }

    #[test]
    fn load_rejects_malformed_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, "{ not json").unwrap();
        assert!(matches!(load_game(&path), Err(GameError::Json(_))));
    }

    #[test]
    fn load_rejects_float_payoffs() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        let text = r#"{
            "n": 2,
            "actions": [2, 2],
            "neighborhoods": [[0, 1], [1, 0]],
            "payoffs": [[1.5, 2, 3, 4], [1, 2, 3, 4]]
        }"#;
        std::fs::write(&path, text).unwrap();
        assert!(matches!(load_game(&path), Err(GameError::Json(_))));
    }

    #[test]
    fn accepts_disconnected_graphs() {
        // Two isolated players: neighborhoods contain only the player.
        let g = GraphicalGame::new(
            vec![2, 3],
            vec![vec![0], vec![1]],
            vec![vec![5, 7], vec![1, 1, 1]],
        )
        .unwrap();
        assert_eq!(g.context_count(0), 1);
        assert_eq!(g.payoff(0, &GlobalProfile::new(vec![1, 2])).unwrap(), 7);
    }
}
