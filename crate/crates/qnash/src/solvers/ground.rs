//! Complete zero-energy enumeration for compiled models of any size.
//!
//! A zero-energy assignment selects exactly one pointed set per player,
//! all mutually consistent, with the multiplicity bits forced by the
//! coverage counts. The enumeration walks players in order, tries each
//! of the player's sets against the partial action assignment and
//! backtracks on conflict, then reconstructs the full binary vector for
//! every solution and verifies its energy against the model. Unlike bit
//! enumeration this stays feasible far beyond the exhaustive cap, while
//! still exercising the compiled coefficients end to end.

use std::time::Instant;

use crate::bestresponse::BestResponseCollection;
use crate::qubo::QuboModel;
use crate::solvers::{elapsed_ms, SampleSet};

pub(crate) fn enumerate_ground_states(
    model: &QuboModel,
    b: &BestResponseCollection,
) -> SampleSet {
    let start = Instant::now();
    let n = b.num_players();
    let mut search = Search {
        model,
        b,
        assignment: vec![None; n],
        chosen: Vec::with_capacity(n),
        out: Vec::new(),
    };
    search.descend(0);
    SampleSet::from_pairs(search.out, elapsed_ms(start))
}

struct Search<'a> {
    model: &'a QuboModel,
    b: &'a BestResponseCollection,
    assignment: Vec<Option<usize>>,
    chosen: Vec<usize>,
    out: Vec<(Vec<u8>, i64)>,
}

impl Search<'_> {
    fn descend(&mut self, player: usize) {
        if player == self.b.num_players() {
            self.emit();
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
                self.chosen.push(k);
                self.descend(player + 1);
                self.chosen.pop();
            }
            for q in touched {
                self.assignment[q] = None;
            }
        }
    }

    fn emit(&mut self) {
        let n = self.b.num_players();
        let mut x = vec![0u8; self.model.num_vars()];
        let mut coverage = vec![0usize; n];
        for &k in &self.chosen {
            x[k] = 1;
            for (q, _) in self.b.set(k).assignments() {
                coverage[q] += 1;
            }
        }
        for q in 0..n {
            let action = self.assignment[q].expect("all players assigned at full depth");
            let var = self
                .model
                .index()
                .multiplicity_var(q, action, coverage[q])
                .expect("coverage within the variable bound");
            x[var] = 1;
        }
        let energy = self.model.energy(&x).expect("vector built to model size");
        assert_eq!(energy, 0, "reconstructed selection has energy {energy}: compiler bug");
        self.out.push((x, 0));
    }
}
