//! Shared single-flip search machinery: a CSR view of the coefficient
//! matrix and an assignment with incrementally maintained flip deltas.

use rand::Rng;

use crate::qubo::RawQubo;

/// Immutable adjacency view of a QUBO, shared by concurrent restarts.
pub(crate) struct Matrix {
    pub num_vars: usize,
    pub offset: i64,
    pub diag: Vec<i64>,
    adj_ptr: Vec<u32>,
    adj_idx: Vec<u32>,
    adj_val: Vec<i64>,
}

impl Matrix {
    pub fn from_raw(raw: &RawQubo) -> Matrix {
        let v = raw.num_vars();
        let mut diag = vec![0i64; v];
        let mut degree = vec![0u32; v];
        for &(i, j, val) in raw.entries() {
            if i == j {
                diag[i as usize] += val;
            } else {
                degree[i as usize] += 1;
                degree[j as usize] += 1;
            }
        }
        let mut adj_ptr = vec![0u32; v + 1];
        for i in 0..v {
            adj_ptr[i + 1] = adj_ptr[i] + degree[i];
        }
        let mut cursor = adj_ptr[..v].to_vec();
        let total = adj_ptr[v] as usize;
        let mut adj_idx = vec![0u32; total];
        let mut adj_val = vec![0i64; total];
        for &(i, j, val) in raw.entries() {
            if i != j {
                let c = cursor[i as usize] as usize;
                adj_idx[c] = j;
                adj_val[c] = val;
                cursor[i as usize] += 1;
                let c = cursor[j as usize] as usize;
                adj_idx[c] = i;
                adj_val[c] = val;
                cursor[j as usize] += 1;
            }
        }
        Matrix { num_vars: v, offset: raw.offset(), diag, adj_ptr, adj_idx, adj_val }
    }

    #[inline]
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let lo = self.adj_ptr[i] as usize;
        let hi = self.adj_ptr[i + 1] as usize;
        self.adj_idx[lo..hi].iter().zip(&self.adj_val[lo..hi]).map(|(&j, &v)| (j as usize, v))
    }
}

/// A binary assignment with its energy and, per variable, the local
/// field `diag_i + sum_j Q_ij x_j`; flipping variable `i` changes the
/// energy by `field_i` when setting the bit and `-field_i` when clearing.
pub(crate) struct SearchState<'a> {
    m: &'a Matrix,
    pub x: Vec<u8>,
    fields: Vec<i64>,
    pub energy: i64,
}

impl<'a> SearchState<'a> {
    pub fn zeros(m: &'a Matrix) -> Self {
        SearchState { m, x: vec![0; m.num_vars], fields: m.diag.clone(), energy: m.offset }
    }

    pub fn randomize(&mut self, rng: &mut impl Rng) {
        for bit in self.x.iter_mut() {
            *bit = rng.random_range(0..2u8);
        }
        self.recompute();
    }

    fn recompute(&mut self) {
        let m = self.m;
        for i in 0..m.num_vars {
            let mut f = m.diag[i];
            for (j, v) in m.neighbors(i) {
                if self.x[j] != 0 {
                    f += v;
                }
            }
            self.fields[i] = f;
        }
        // Each set bit contributes its diagonal once and each set pair
        // is counted twice across the two fields.
        let mut twice_sum = 0i64;
        for i in 0..m.num_vars {
            if self.x[i] != 0 {
                twice_sum += self.fields[i] + m.diag[i];
            }
        }
        debug_assert_eq!(twice_sum % 2, 0);
        self.energy = m.offset + twice_sum / 2;
    }

    /// Energy change of flipping variable `i`.
    #[inline]
    pub fn flip_delta(&self, i: usize) -> i64 {
        if self.x[i] == 0 {
            self.fields[i]
        } else {
            -self.fields[i]
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.energy += self.flip_delta(i);
        if self.x[i] == 0 {
            self.x[i] = 1;
            for (j, v) in self.m.neighbors(i) {
                self.fields[j] += v;
            }
        } else {
            self.x[i] = 0;
            for (j, v) in self.m.neighbors(i) {
                self.fields[j] -= v;
            }
        }
    }
}

/// Tracks the lowest energy seen and up to [`MAX_TIED_STATES`] distinct
/// assignments attaining it. Ties are recorded only when the trajectory
/// re-enters the best level from a different energy, which keeps the
/// bookkeeping out of the hot loop; zero-energy states of the compiled
/// models are strict local minima, so no ground state is missed.
pub(crate) struct BestCollector {
    pub best: i64,
    last: i64,
    states: Vec<Vec<u8>>,
}

pub(crate) const MAX_TIED_STATES: usize = 64;

impl BestCollector {
    pub fn new(energy: i64, x: &[u8]) -> Self {
        BestCollector { best: energy, last: energy, states: vec![x.to_vec()] }
    }

    pub fn observe(&mut self, energy: i64, x: &[u8]) {
        if energy < self.best {
            self.best = energy;
            self.states.clear();
            self.states.push(x.to_vec());
        } else if energy == self.best
            && self.last != energy
            && self.states.len() < MAX_TIED_STATES
            && !self.states.iter().any(|s| s == x)
        {
            self.states.push(x.to_vec());
        }
        self.last = energy;
    }

    pub fn into_pairs(self) -> Vec<(Vec<u8>, i64)> {
        let best = self.best;
        self.states.into_iter().map(|x| (x, best)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubo::RawQubo;

    #[test]
    fn incremental_flips_match_direct_energy() {
        let raw = RawQubo::new(
            4,
            [
                (0usize, 0usize, -3i64),
                (1, 1, 2),
                (2, 2, -1),
                (0, 1, 4),
                (1, 3, -2),
                (2, 3, 5),
            ],
            11,
        )
        .unwrap();
        let m = Matrix::from_raw(&raw);
        let mut st = SearchState::zeros(&m);
        assert_eq!(st.energy, 11);
        let flips = [0usize, 1, 3, 0, 2, 1, 1, 3, 2];
        for &i in &flips {
            let predicted = st.energy + st.flip_delta(i);
            st.flip(i);
            assert_eq!(st.energy, predicted);
            assert_eq!(st.energy, raw.energy(&st.x).unwrap());
        }
    }
}
