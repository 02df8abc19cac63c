//! Compilation of a best-response collection into a quadratic
//! unconstrained binary model, exact integer energy evaluation, sample
//! decoding, the spin-variable (Ising) conversion and text export.
//!
//! Variables come in two kinds: one *selector* bit per pointed set, and
//! one *multiplicity* bit per `(player, action, m)` triple stating that
//! exactly `m` selected sets assign that action to that player. The
//! energy is a penalty sum of three squared constraint groups:
//!
//! 1. every player is covered by exactly one `(action, multiplicity)`;
//! 2. each claimed multiplicity equals the number of selected sets that
//!    actually cover the pair;
//! 3. exactly `n` sets are selected.
//!
//! The energy of an assignment is zero precisely when the selected sets
//! form one consistent best-response profile per player, i.e. a pure
//! Nash equilibrium. All arithmetic is exact integer arithmetic; the
//! constant term of the expansion is carried explicitly so the zero test
//! is exact rather than "minimum found".

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use crate::bestresponse::BestResponseCollection;
use crate::game::{GlobalProfile, GraphicalGame};

/// Errors from model construction, evaluation and file exchange.
#[derive(Debug)]
pub enum QuboError {
    InvalidPenalty { penalty: i64 },
    PlayerMismatch { collection: usize, game: usize },
    LengthMismatch { expected: usize, got: usize },
    VarOutOfRange { var: usize, num_vars: usize },
    Io(io::Error),
    Parse { line: usize, message: String },
}

impl fmt::Display for QuboError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuboError::InvalidPenalty { penalty } => {
                write!(f, "penalty must be a positive integer, got {penalty}")
            }
            QuboError::PlayerMismatch { collection, game } => write!(
                f,
                "collection covers {collection} players but the game has {game}"
            ),
            QuboError::LengthMismatch { expected, got } => {
                write!(f, "assignment must have {expected} bits, got {got}")
            }
            QuboError::VarOutOfRange { var, num_vars } => {
                write!(f, "variable {var} out of range for {num_vars} variables")
            }
            QuboError::Io(e) => write!(f, "i/o error: {e}"),
            QuboError::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
        }
    }
}

impl std::error::Error for QuboError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            QuboError::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for QuboError {
    fn from(e: io::Error) -> Self {
        QuboError::Io(e)
    }
}

/// Plain upper-triangular integer QUBO: coefficients plus a constant
/// offset. Backends operate on this representation; [`QuboModel`] wraps
/// it with the variable semantics of the compiled game model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawQubo {
    num_vars: usize,
    /// Nonzero `(i, j, value)` with `i <= j`, sorted by `(i, j)`.
    /// Diagonal entries are the linear coefficients.
    entries: Vec<(u32, u32, i64)>,
    offset: i64,
}

impl RawQubo {
    /// Normalizes arbitrary `(i, j, value)` triples: indices are swapped
    /// into upper-triangular order, duplicates summed, zeros dropped.
    pub fn new(
        num_vars: usize,
        entries: impl IntoIterator<Item = (usize, usize, i64)>,
        offset: i64,
    ) -> Result<Self, QuboError> {
        let mut acc: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for (i, j, v) in entries {
            if i >= num_vars {
                return Err(QuboError::VarOutOfRange { var: i, num_vars });
            }
            if j >= num_vars {
                return Err(QuboError::VarOutOfRange { var: j, num_vars });
            }
            let key = if i <= j { (i as u32, j as u32) } else { (j as u32, i as u32) };
            *acc.entry(key).or_insert(0) += v;
        }
        Ok(RawQubo {
            num_vars,
            entries: acc.into_iter().filter(|&(_, v)| v != 0).map(|((i, j), v)| (i, j, v)).collect(),
            offset,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn entries(&self) -> &[(u32, u32, i64)] {
        &self.entries
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Exact integer energy: `offset + sum Q_ii x_i + sum_{i<j} Q_ij x_i x_j`.
    pub fn energy(&self, x: &[u8]) -> Result<i64, QuboError> {
        if x.len() != self.num_vars {
            return Err(QuboError::LengthMismatch { expected: self.num_vars, got: x.len() });
        }
        let mut e = self.offset;
        for &(i, j, v) in &self.entries {
            if x[i as usize] != 0 && x[j as usize] != 0 {
                e += v;
            }
        }
        Ok(e)
    }

    pub fn max_abs_coefficient(&self) -> i64 {
        self.entries.iter().map(|&(_, _, v)| v.abs()).max().unwrap_or(0)
    }

    /// Affine change of variables `x = (s + 1) / 2` onto spins in
    /// `{-1, +1}`. All resulting values are quarter-integers, exactly
    /// representable, so energies agree pointwise with no tolerance.
    pub fn to_ising(&self) -> IsingModel {
        let mut fields = vec![0.0f64; self.num_vars];
        let mut couplings = Vec::new();
        let mut offset = self.offset as f64;
        for &(i, j, v) in &self.entries {
            if i == j {
                fields[i as usize] += v as f64 / 2.0;
                offset += v as f64 / 2.0;
            } else {
                let quarter = v as f64 / 4.0;
                fields[i as usize] += quarter;
                fields[j as usize] += quarter;
                couplings.push((i, j, quarter));
                offset += quarter;
            }
        }
        IsingModel { fields, couplings, offset }
    }
}

/// Spin-variable form of a QUBO: per-spin fields, pairwise couplings and
/// a constant offset, over spins in `{-1, +1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingModel {
    fields: Vec<f64>,
    couplings: Vec<(u32, u32, f64)>,
    offset: f64,
}

impl IsingModel {
    pub fn num_spins(&self) -> usize {
        self.fields.len()
    }

    pub fn fields(&self) -> &[f64] {
        &self.fields
    }

    pub fn couplings(&self) -> &[(u32, u32, f64)] {
        &self.couplings
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn energy(&self, spins: &[i8]) -> Result<f64, QuboError> {
        if spins.len() != self.fields.len() {
            return Err(QuboError::LengthMismatch { expected: self.fields.len(), got: spins.len() });
        }
        let mut e = self.offset;
        for (h, &s) in self.fields.iter().zip(spins) {
            e += h * s as f64;
        }
        for &(i, j, v) in &self.couplings {
            e += v * (spins[i as usize] as f64) * (spins[j as usize] as f64);
        }
        Ok(e)
    }
}

/// Kind of a model variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    /// Selector bit of pointed set `k`.
    Selector(usize),
    /// Multiplicity bit: `count` selected sets assign `action` to `player`.
    Multiplicity { player: usize, action: usize, count: usize },
}

/// Bijective map between model variables and their meaning.
///
/// Selectors occupy indices `0..num_sets`; multiplicity bits follow,
/// ordered by `(player, action, m)`. A multiplicity bit exists for `m`
/// in `1..=bound(player, action)` where the bound is the number of
/// pointed sets covering the pair, capped by the neighborhood size:
/// zero-energy assignments select one set per player, so a player is
/// covered at most (in fact exactly) `|N(p)|` times, and larger
/// multiplicities are unsatisfiable and carry no variable.
#[derive(Debug, Clone)]
pub struct VariableIndex {
    num_sets: usize,
    bounds: Vec<Vec<usize>>,
    mult_start: Vec<Vec<usize>>,
    mult_triples: Vec<(u32, u32, u32)>,
}

impl VariableIndex {
    fn build(b: &BestResponseCollection, game: &GraphicalGame) -> Self {
        let n = game.num_players();
        let mut bounds: Vec<Vec<usize>> =
            (0..n).map(|p| vec![0; game.num_actions(p)]).collect();
        for set in b.sets() {
            for (q, a) in set.assignments() {
                bounds[q][a] += 1;
            }
        }
        for (p, row) in bounds.iter_mut().enumerate() {
            for bound in row.iter_mut() {
                *bound = (*bound).min(game.neighborhood(p).len());
            }
        }
        let mut mult_start: Vec<Vec<usize>> =
            (0..n).map(|p| vec![0; game.num_actions(p)]).collect();
        let mut mult_triples = Vec::new();
        let mut next = 0usize;
        for p in 0..n {
            for j in 0..game.num_actions(p) {
                mult_start[p][j] = next;
                for m in 1..=bounds[p][j] {
                    mult_triples.push((p as u32, j as u32, m as u32));
                    next += 1;
                }
            }
        }
        VariableIndex { num_sets: b.cardinality(), bounds, mult_start, mult_triples }
    }

    pub fn num_players(&self) -> usize {
        self.bounds.len()
    }

    /// Action count of `player` as seen by the model.
    pub fn num_actions(&self, player: usize) -> usize {
        self.bounds[player].len()
    }

    /// Number of selector variables (the collection cardinality).
    pub fn num_sets(&self) -> usize {
        self.num_sets
    }

    pub fn num_multiplicity_vars(&self) -> usize {
        self.mult_triples.len()
    }

    pub fn total_vars(&self) -> usize {
        self.num_sets + self.mult_triples.len()
    }

    /// Multiplicity range of `(player, action)`: the number of pointed
    /// sets covering the pair, capped by the player's neighborhood size.
    pub fn bound(&self, player: usize, action: usize) -> usize {
        self.bounds[player][action]
    }

    pub fn selector_var(&self, k: usize) -> usize {
        debug_assert!(k < self.num_sets);
        k
    }

    /// Variable index of the multiplicity bit `(player, action, m)`, if
    /// it exists (`1 <= m <= bound`).
    pub fn multiplicity_var(&self, player: usize, action: usize, m: usize) -> Option<usize> {
        if m >= 1 && m <= self.bounds[player][action] {
            Some(self.num_sets + self.mult_start[player][action] + m - 1)
        } else {
            None
        }
    }

    pub fn var_kind(&self, var: usize) -> VarKind {
        if var < self.num_sets {
            VarKind::Selector(var)
        } else {
            let (p, j, m) = self.mult_triples[var - self.num_sets];
            VarKind::Multiplicity { player: p as usize, action: j as usize, count: m as usize }
        }
    }
}

/// Compiled model: raw coefficients plus penalty and variable semantics.
#[derive(Debug, Clone)]
pub struct QuboModel {
    raw: RawQubo,
    penalty: i64,
    index: VariableIndex,
}

impl QuboModel {
    pub fn raw(&self) -> &RawQubo {
        &self.raw
    }

    pub fn penalty(&self) -> i64 {
        self.penalty
    }

    pub fn index(&self) -> &VariableIndex {
        &self.index
    }

    pub fn num_vars(&self) -> usize {
        self.raw.num_vars
    }

    pub fn offset(&self) -> i64 {
        self.raw.offset
    }

    pub fn coefficients(&self) -> &[(u32, u32, i64)] {
        &self.raw.entries
    }

    pub fn energy(&self, x: &[u8]) -> Result<i64, QuboError> {
        self.raw.energy(x)
    }

    pub fn to_ising(&self) -> IsingModel {
        self.raw.to_ising()
    }
}

/// Compiles the collection into the penalty model. The energy of every
/// assignment is a non-negative multiple of `penalty`, and it is zero
/// exactly on encodings of valid all-best-response profiles.
pub fn build_qubo(
    b: &BestResponseCollection,
    game: &GraphicalGame,
    penalty: i64,
) -> Result<QuboModel, QuboError> {
    if penalty < 1 {
        return Err(QuboError::InvalidPenalty { penalty });
    }
    if b.num_players() != game.num_players() {
        return Err(QuboError::PlayerMismatch {
            collection: b.num_players(),
            game: game.num_players(),
        });
    }
    let n = game.num_players();
    let a = penalty;
    let index = VariableIndex::build(b, game);

    // covers[p][j] = selector ids of the sets assigning action j to
    // player p, counting base-point and context occurrences alike.
    let mut covers: Vec<Vec<Vec<u32>>> =
        (0..n).map(|p| vec![Vec::new(); game.num_actions(p)]).collect();
    for (k, set) in b.sets().iter().enumerate() {
        for (q, act) in set.assignments() {
            covers[q][act].push(k as u32);
        }
    }

    let mut acc: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    let mut offset: i64 = 0;

    // Group 1: per player, (1 - sum of all multiplicity bits)^2.
    for p in 0..n {
        let vars: Vec<u32> = (0..game.num_actions(p))
            .flat_map(|j| {
                (1..=index.bound(p, j))
                    .map(move |m| (j, m))
                    .collect::<Vec<_>>()
            })
            .map(|(j, m)| index.multiplicity_var(p, j, m).unwrap() as u32)
            .collect();
        offset += a;
        for &v in &vars {
            add(&mut acc, v, v, -a);
        }
        for (idx, &v1) in vars.iter().enumerate() {
            for &v2 in &vars[idx + 1..] {
                add(&mut acc, v1, v2, 2 * a);
            }
        }
    }

    // Group 2: per (player, action), (sum m*bit_m - sum of covering
    // selectors)^2. Pairs without coverage contribute identically zero.
    for p in 0..n {
        for j in 0..game.num_actions(p) {
            let bound = index.bound(p, j);
            if bound == 0 {
                continue;
            }
            let mults: Vec<(i64, u32)> = (1..=bound)
                .map(|m| (m as i64, index.multiplicity_var(p, j, m).unwrap() as u32))
                .collect();
            let ks = &covers[p][j];
            debug_assert!(ks.len() >= bound);
            for &(m, v) in &mults {
                add(&mut acc, v, v, a * m * m);
            }
            for (idx, &(m1, v1)) in mults.iter().enumerate() {
                for &(m2, v2) in &mults[idx + 1..] {
                    add(&mut acc, v1, v2, 2 * a * m1 * m2);
                }
            }
            for &k in ks {
                add(&mut acc, k, k, a);
            }
            for (idx, &k1) in ks.iter().enumerate() {
                for &k2 in &ks[idx + 1..] {
                    add(&mut acc, k1, k2, 2 * a);
                }
            }
            for &(m, v) in &mults {
                for &k in ks {
                    add(&mut acc, v, k, -2 * a * m);
                }
            }
        }
    }

    // Group 3: (n - sum of selectors)^2.
    let n_i = n as i64;
    offset += a * n_i * n_i;
    let num_sets = index.num_sets();
    for k in 0..num_sets as u32 {
        add(&mut acc, k, k, a * (1 - 2 * n_i));
    }
    for k1 in 0..num_sets as u32 {
        for k2 in k1 + 1..num_sets as u32 {
            add(&mut acc, k1, k2, 2 * a);
        }
    }

    let entries: Vec<(u32, u32, i64)> =
        acc.into_iter().filter(|&(_, v)| v != 0).map(|((i, j), v)| (i, j, v)).collect();
    let raw = RawQubo { num_vars: index.total_vars(), entries, offset };
    Ok(QuboModel { raw, penalty, index })
}

fn add(acc: &mut BTreeMap<(u32, u32), i64>, i: u32, j: u32, v: i64) {
    let key = if i <= j { (i, j) } else { (j, i) };
    *acc.entry(key).or_insert(0) += v;
}

/// Recovers the global profile encoded by a zero-energy assignment, or
/// `None` when the energy is positive. A zero-energy assignment whose
/// selected sets do not form one consistent profile per player signals a
/// compiler bug and aborts.
pub fn decode(
    model: &QuboModel,
    x: &[u8],
    b: &BestResponseCollection,
) -> Result<Option<GlobalProfile>, QuboError> {
    let energy = model.energy(x)?;
    if energy != 0 {
        return Ok(None);
    }
    let n = b.num_players();
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut selected = 0usize;
    let mut base_seen = vec![false; n];
    for (k, set) in b.sets().iter().enumerate() {
        if x[k] == 0 {
            continue;
        }
        selected += 1;
        assert!(
            !base_seen[set.base_player],
            "zero-energy assignment selects two sets based at player {}: compiler bug",
            set.base_player
        );
        base_seen[set.base_player] = true;
        for (q, a) in set.assignments() {
            match assignment[q] {
                None => assignment[q] = Some(a),
                Some(prev) => assert!(
                    prev == a,
                    "zero-energy assignment gives player {q} conflicting actions \
                     {prev} and {a}: compiler bug"
                ),
            }
        }
    }
    assert!(selected == n, "zero-energy assignment selects {selected} sets, expected {n}: compiler bug");
    let actions: Vec<usize> = assignment
        .into_iter()
        .enumerate()
        .map(|(q, a)| a.unwrap_or_else(|| panic!("player {q} uncovered at zero energy: compiler bug")))
        .collect();
    Ok(Some(GlobalProfile::new(actions)))
}

/// Text formats for QUBO exchange.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuboFormat {
    /// `vars <V> offset <c>` header, then `i j value` lines with `i <= j`.
    Coo,
    /// Conventional `p qubo` header with diagonal entries first; the
    /// constant offset rides in a `c offset <c>` comment.
    Qbsolv,
}

impl QuboFormat {
    pub fn parse(s: &str) -> Option<QuboFormat> {
        match s {
            "coo" => Some(QuboFormat::Coo),
            "qbsolv" => Some(QuboFormat::Qbsolv),
            _ => None,
        }
    }
}

pub fn format_qubo(raw: &RawQubo, format: QuboFormat) -> String {
    let mut out = String::new();
    match format {
        QuboFormat::Coo => {
            out.push_str(&format!("vars {} offset {}\n", raw.num_vars, raw.offset));
            for &(i, j, v) in &raw.entries {
                out.push_str(&format!("{i} {j} {v}\n"));
            }
        }
        QuboFormat::Qbsolv => {
            let diag: Vec<&(u32, u32, i64)> = raw.entries.iter().filter(|e| e.0 == e.1).collect();
            let off: Vec<&(u32, u32, i64)> = raw.entries.iter().filter(|e| e.0 != e.1).collect();
            out.push_str(&format!("c offset {}\n", raw.offset));
            out.push_str(&format!("p qubo 0 {} {} {}\n", raw.num_vars, diag.len(), off.len()));
            for &&(i, _, v) in &diag {
                out.push_str(&format!("{i} {i} {v}\n"));
            }
            for &&(i, j, v) in &off {
                out.push_str(&format!("{i} {j} {v}\n"));
            }
        }
    }
    out
}

/// Writes the model's coefficients to `path` in the given format.
pub fn export_qubo(model: &QuboModel, format: QuboFormat, path: &Path) -> Result<(), QuboError> {
    fs::write(path, format_qubo(model.raw(), format))?;
    Ok(())
}

/// Reads a coefficient file previously written by [`export_qubo`];
/// energies of the result match the exported model exactly.
pub fn import_qubo(path: &Path, format: QuboFormat) -> Result<RawQubo, QuboError> {
    let text = fs::read_to_string(path)?;
    parse_qubo(&text, format)
}

pub fn parse_qubo(text: &str, format: QuboFormat) -> Result<RawQubo, QuboError> {
    let mut num_vars: Option<usize> = None;
    let mut offset: i64 = 0;
    let mut triples: Vec<(usize, usize, i64)> = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let bad = |message: &str| QuboError::Parse { line: line_no, message: message.to_string() };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match (format, tokens[0]) {
            (QuboFormat::Coo, "vars") => {
                if tokens.len() != 4 || tokens[2] != "offset" {
                    return Err(bad("expected `vars <V> offset <c>`"));
                }
                num_vars = Some(tokens[1].parse().map_err(|_| bad("bad variable count"))?);
                offset = tokens[3].parse().map_err(|_| bad("bad offset"))?;
            }
            (QuboFormat::Qbsolv, "c") => {
                if tokens.len() == 3 && tokens[1] == "offset" {
                    offset = tokens[2].parse().map_err(|_| bad("bad offset"))?;
                }
            }
            (QuboFormat::Qbsolv, "p") => {
                if tokens.len() != 6 || tokens[1] != "qubo" {
                    return Err(bad("expected `p qubo 0 <maxNodes> <nDiag> <nElem>`"));
                }
                num_vars = Some(tokens[3].parse().map_err(|_| bad("bad node count"))?);
            }
            _ => {
                if tokens.len() != 3 {
                    return Err(bad("expected `i j value`"));
                }
                let i: usize = tokens[0].parse().map_err(|_| bad("bad row index"))?;
                let j: usize = tokens[1].parse().map_err(|_| bad("bad column index"))?;
                let v: i64 = tokens[2].parse().map_err(|_| bad("bad value"))?;
                triples.push((i, j, v));
            }
        }
    }
    let num_vars = num_vars.ok_or(QuboError::Parse { line: 0, message: "missing header".into() })?;
    RawQubo::new(num_vars, triples, offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bestresponse::collect_b;
    use crate::fixtures;
    use crate::game::{generate_game, Topology};

    #[test]
    fn all_zeros_energy_is_penalty_times_constants() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        for a in [1i64, 3] {
            let model = build_qubo(&b, &g, a).unwrap();
            let zeros = vec![0u8; model.num_vars()];
            // n + n^2 with n = 3.
            assert_eq!(model.energy(&zeros).unwrap(), a * 12);
            assert_eq!(model.offset(), a * 12);
        }
    }

    #[test]
    fn single_selector_pays_at_least_third_term() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let n = g.num_players() as i64;
        let mut x = vec![0u8; model.num_vars()];
        x[0] = 1;
        let e = model.energy(&x).unwrap();
        assert!(e >= (n - 1) * (n - 1));
        assert!(e > 0);
    }

    #[test]
    fn penalty_must_be_positive() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        assert!(matches!(build_qubo(&b, &g, 0), Err(QuboError::InvalidPenalty { penalty: 0 })));
    }

    #[test]
    fn variable_count_for_circle_game() {
        let g = generate_game(Topology::Circle, 6, 3, 42).unwrap();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let c_b = b.cardinality();
        // Independent recount: coverage per pair capped by the
        // neighborhood size (3 on a cycle).
        let mut expected_mult = 0usize;
        for p in 0..6 {
            for j in 0..3 {
                let covering = b
                    .sets()
                    .iter()
                    .filter(|s| s.assignments().any(|(q, a)| q == p && a == j))
                    .count();
                let capped = covering.min(g.neighborhood(p).len());
                assert_eq!(model.index().bound(p, j), capped);
                expected_mult += capped;
            }
        }
        assert_eq!(model.num_vars(), c_b + expected_mult);
        assert_eq!(model.index().num_sets(), c_b);
        assert_eq!(model.index().num_multiplicity_vars(), expected_mult);
    }

    #[test]
    fn variable_index_is_bijective() {
        let g = generate_game(Topology::Tree, 4, 2, 5).unwrap();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let index = model.index();
        for var in 0..model.num_vars() {
            match index.var_kind(var) {
                VarKind::Selector(k) => assert_eq!(index.selector_var(k), var),
                VarKind::Multiplicity { player, action, count } => {
                    assert_eq!(index.multiplicity_var(player, action, count), Some(var));
                }
            }
        }
        assert_eq!(index.multiplicity_var(0, 0, 0), None);
        assert_eq!(index.multiplicity_var(0, 0, index.bound(0, 0) + 1), None);
    }

    #[test]
    fn energy_checks_length() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        assert!(matches!(
            model.energy(&[0, 1]),
            Err(QuboError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn decode_returns_none_for_positive_energy() {
        let g = fixtures::dominant_action_game();
        let b = collect_b(&g);
        let model = build_qubo(&b, &g, 1).unwrap();
        let zeros = vec![0u8; model.num_vars()];
        assert_eq!(decode(&model, &zeros, &b).unwrap(), None);
    }

    #[test]
    fn ising_single_variable() {
        let raw = RawQubo::new(1, [(0usize, 0usize, 2i64)], 0).unwrap();
        let ising = raw.to_ising();
        assert_eq!(ising.fields(), &[1.0]);
        assert_eq!(ising.offset(), 1.0);
        assert!(ising.couplings().is_empty());
        assert_eq!(raw.energy(&[0]).unwrap(), 0);
        assert_eq!(raw.energy(&[1]).unwrap(), 2);
        assert_eq!(ising.energy(&[-1]).unwrap(), 0.0);
        assert_eq!(ising.energy(&[1]).unwrap(), 2.0);
    }

    #[test]
    fn ising_zero_model() {
        let raw = RawQubo::new(3, std::iter::empty(), 0).unwrap();
        let ising = raw.to_ising();
        assert!(ising.fields().iter().all(|&h| h == 0.0));
        assert!(ising.couplings().is_empty());
        assert_eq!(ising.offset(), 0.0);
    }

    #[test]
    fn export_empty_model_is_header_only() {
        let raw = RawQubo::new(0, std::iter::empty(), 0).unwrap();
        assert_eq!(format_qubo(&raw, QuboFormat::Coo), "vars 0 offset 0\n");
        let text = format_qubo(&raw, QuboFormat::Qbsolv);
        assert_eq!(text, "c offset 0\np qubo 0 0 0 0\n");
        for format in [QuboFormat::Coo, QuboFormat::Qbsolv] {
            let back = parse_qubo(&format_qubo(&raw, format), format).unwrap();
            assert_eq!(back, raw);
        }
    }

    #[test]
    fn raw_qubo_normalizes_entries() {
        let raw = RawQubo::new(3, [(2usize, 0usize, 5i64), (0, 2, -5), (1, 0, 3)], 7).unwrap();
        assert_eq!(raw.entries(), &[(0u32, 1u32, 3i64)]);
        assert_eq!(raw.offset(), 7);
        assert!(matches!(
            RawQubo::new(2, [(0usize, 2usize, 1i64)], 0),
            Err(QuboError::VarOutOfRange { var: 2, num_vars: 2 })
        ));
    }
}
