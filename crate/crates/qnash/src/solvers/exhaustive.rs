//! Exact enumeration of every assignment via a Gray-code walk.

use std::time::Instant;

use crate::qubo::RawQubo;
use crate::solvers::state::{Matrix, SearchState};
use crate::solvers::{elapsed_ms, SampleSet, SolverError};

/// Default variable cap of [`solve_exhaustive`].
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;

/// One minimum-energy assignment (the first in Gray-code order), for
/// callers that do not need the full set of minima.
pub(crate) fn gray_minimum(raw: &RawQubo) -> (Vec<u8>, i64) {
    let v = raw.num_vars();
    if v == 0 {
        return (Vec::new(), raw.offset());
    }
    let m = Matrix::from_raw(raw);
    let mut st = SearchState::zeros(&m);
    let mut best = st.energy;
    let mut best_x = st.x.clone();
    for t in 1u64..1u64 << v {
        st.flip(t.trailing_zeros() as usize);
        if st.energy < best {
            best = st.energy;
            best_x.copy_from_slice(&st.x);
        }
    }
    (best_x, best)
}

/// Visits all `2^num_vars` assignments and returns every assignment of
/// minimum energy. Complete and exact; refuses models above `cap`.
pub fn solve_exhaustive(raw: &RawQubo, cap: usize) -> Result<SampleSet, SolverError> {
    let start = Instant::now();
    let v = raw.num_vars();
    if v > cap {
        return Err(SolverError::TooManyVariables { num_vars: v, cap });
    }
    if v == 0 {
        return Ok(SampleSet::from_pairs(vec![(Vec::new(), raw.offset())], elapsed_ms(start)));
    }
    let m = Matrix::from_raw(raw);
    let mut st = SearchState::zeros(&m);
    let mut best = st.energy;
    let mut minima = vec![st.x.clone()];
    // Gray-code order: step t flips the lowest set bit of t, visiting
    // each assignment exactly once with one O(degree) update per step.
    for t in 1u64..1u64 << v {
        st.flip(t.trailing_zeros() as usize);
        if st.energy < best {
            best = st.energy;
            minima.clear();
            minima.push(st.x.clone());
        } else if st.energy == best {
            minima.push(st.x.clone());
        }
    }
    Ok(SampleSet::from_pairs(minima.into_iter().map(|x| (x, best)).collect(), elapsed_ms(start)))
}
