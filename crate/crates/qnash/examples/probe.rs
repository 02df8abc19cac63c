use qnash::*;
use rayon::prelude::*;

fn main() {
    let seeds: Vec<u64> = vec![0, 1, 2, 3, 4, 5, 6, 8, 11, 12, 13, 14, 15, 17, 18];
    for sweeps in [20_000usize, 40_000, 80_000] {
        let results: Vec<(u64, usize, usize, f64)> = seeds
            .par_iter()
            .map(|&seed| {
                let game = generate_game(Topology::Road, 20, 3, 3000 + seed).unwrap();
                let exact =
                    find_all_pne(&game, Backend::Exhaustive, &SolverParams::default()).unwrap();
                let params = SolverParams {
                    num_repeats: 50,
                    seed,
                    sa: SaSchedule { sweeps: Some(sweeps), ..SaSchedule::default() },
                    ..SolverParams::default()
                };
                let t = std::time::Instant::now();
                let sa = find_all_pne(&game, Backend::Sa, &params).unwrap();
                (seed, exact.pne.len(), sa.pne.len(), t.elapsed().as_secs_f64())
            })
            .collect();
        let wins = results.iter().filter(|r| r.2 > 0).count();
        let detail: Vec<String> =
            results.iter().map(|r| format!("{}:{}/{}", r.0, r.2, r.1)).collect();
        let tmax = results.iter().map(|r| r.3).fold(0.0f64, f64::max);
        println!("sweeps {sweeps}: ≥1 found on {wins}/15, max {tmax:.1}s [{}]", detail.join(" "));
    }
}
