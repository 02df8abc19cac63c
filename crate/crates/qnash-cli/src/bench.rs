//! Seeded benchmark suites. Every cell derives its game from the
//! configured base seed, so each CSV row is reproducible in isolation;
//! cells run concurrently but rows are written in configuration order.
//!
//! Tables and columns:
//!
//! - `quality.csv`: `topology,players,actions,trial,game_seed,method,pne_found,status`
//!   with one row per method in {qnash-<backend>, bf, rs} per instance.
//! - `variance.csv`: `topology,players,actions,run,solver_seed,pne_found`
//!   repeated solver seeds on one fixed instance per cell.
//! - `sweep.csv`: `num_repeats,run,solver_seed,pne_found` on one fixed
//!   instance (first topology, largest player count).
//! - `timing.csv`: `topology,players,actions,game_seed,method,`
//!   `best_response_ms,qubo_build_ms,solve_ms,total_ms,status`; the
//!   baseline rows carry the total only.
//!
//! The quality, variance and sweep tables contain only deterministic
//! columns; the timing table is measurement output.

use std::fs;
use std::io;
use std::path::PathBuf;
use std::time::Duration;

use rayon::prelude::*;

use qnash::{
    brute_force_sets, find_all_pne, generate_game, random_search, Backend, SolverParams,
    Topology,
};

pub struct ExperimentConfig {
    pub topologies: Vec<Topology>,
    pub players: Vec<usize>,
    pub actions: usize,
    pub trials: usize,
    pub backend: Backend,
    pub params: SolverParams,
    /// Random-search budget; `None` grants the measured pipeline time.
    pub rs_budget_ms: Option<u64>,
    pub out_dir: PathBuf,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.topologies.is_empty() {
            return Err("at least one topology is required".into());
        }
        if self.players.is_empty() {
            return Err("at least one player count is required".into());
        }
        if self.trials < 1 {
            return Err("trials must be at least 1".into());
        }
        Ok(())
    }

    fn method_name(&self) -> String {
        format!("qnash-{}", self.backend.name())
    }

    /// Deterministic per-instance seed.
    fn game_seed(&self, topology_idx: usize, players: usize, trial: usize) -> u64 {
        self.params
            .seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(topology_idx as u64)
            .wrapping_mul(1_000_003)
            .wrapping_add(players as u64)
            .wrapping_mul(1_000_003)
            .wrapping_add(trial as u64)
    }
}

pub fn run_quality(config: &ExperimentConfig) -> io::Result<PathBuf> {
    let jobs: Vec<(usize, Topology, usize, usize)> = config
        .topologies
        .iter()
        .enumerate()
        .flat_map(|(ti, &t)| {
            config
                .players
                .iter()
                .flat_map(move |&n| (0..config.trials).map(move |trial| (ti, t, n, trial)))
        })
        .collect();

    let rows: Vec<Vec<String>> = jobs
        .par_iter()
        .map(|&(ti, topology, players, trial)| {
            let seed = config.game_seed(ti, players, trial);
            let prefix = format!("{},{},{},{},{}", topology, players, config.actions, trial, seed);
            let mut rows = Vec::new();
            let game = match generate_game(topology, players, config.actions, seed) {
                Ok(game) => game,
                Err(e) => {
                    for method in [config.method_name(), "bf".into(), "rs".into()] {
                        rows.push(format!("{prefix},{method},,{}", sanitize(&e.to_string())));
                    }
                    return rows;
                }
            };
            let params = SolverParams { seed, ..config.params.clone() };
            let mut pipeline_ms = 0.0f64;
            match find_all_pne(&game, config.backend, &params) {
                Ok(report) => {
                    pipeline_ms = report.timings.total_ms();
                    rows.push(format!("{prefix},{},{},ok", config.method_name(), report.pne.len()));
                }
                Err(e) => rows.push(format!(
                    "{prefix},{},,{}",
                    config.method_name(),
                    sanitize(&e.to_string())
                )),
            }
            match brute_force_sets(&game) {
                Ok(report) => rows.push(format!("{prefix},bf,{},ok", report.pne.len())),
                Err(e) => rows.push(format!("{prefix},bf,,{}", sanitize(&e.to_string()))),
            }
            let budget = config
                .rs_budget_ms
                .map(|ms| Duration::from_millis(ms))
                .unwrap_or_else(|| Duration::from_secs_f64(pipeline_ms.max(1.0) / 1e3));
            let rs = random_search(&game, budget, seed);
            rows.push(format!("{prefix},rs,{},ok", rs.pne.len()));
            rows
        })
        .collect();

    let mut text =
        String::from("topology,players,actions,trial,game_seed,method,pne_found,status\n");
    for group in rows {
        for row in group {
            text.push_str(&row);
            text.push('\n');
        }
    }
    let path = config.out_dir.join("quality.csv");
    fs::write(&path, text)?;
    Ok(path)
}

pub fn run_variance(config: &ExperimentConfig) -> io::Result<PathBuf> {
    let jobs: Vec<(usize, Topology, usize, usize)> = config
        .topologies
        .iter()
        .enumerate()
        .flat_map(|(ti, &t)| {
            config
                .players
                .iter()
                .flat_map(move |&n| (0..config.trials).map(move |run| (ti, t, n, run)))
        })
        .collect();

    let rows: Vec<String> = jobs
        .par_iter()
        .map(|&(ti, topology, players, run)| {
            let game_seed = config.game_seed(ti, players, 0);
            let prefix =
                format!("{},{},{},{},{}", topology, players, config.actions, run, run);
            match generate_game(topology, players, config.actions, game_seed) {
                Ok(game) => {
                    let params = SolverParams { seed: run as u64, ..config.params.clone() };
                    match find_all_pne(&game, config.backend, &params) {
                        Ok(report) => format!("{prefix},{}", report.pne.len()),
                        Err(e) => format!("{prefix},{}", sanitize(&e.to_string())),
                    }
                }
                Err(e) => format!("{prefix},{}", sanitize(&e.to_string())),
            }
        })
        .collect();

    let mut text = String::from("topology,players,actions,run,solver_seed,pne_found\n");
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    let path = config.out_dir.join("variance.csv");
    fs::write(&path, text)?;
    Ok(path)
}

/// Settings swept by [`run_sweep`].
pub const SWEEP_NUM_REPEATS: [usize; 4] = [10, 20, 50, 100];

pub fn run_sweep(config: &ExperimentConfig) -> io::Result<PathBuf> {
    let topology = *config.topologies.first().expect("validated non-empty");
    let players = *config.players.iter().max().expect("validated non-empty");
    let game_seed = config.game_seed(0, players, 0);
    let game = generate_game(topology, players, config.actions, game_seed)
        .map_err(|e| io::Error::other(e.to_string()))?;

    let jobs: Vec<(usize, usize)> = SWEEP_NUM_REPEATS
        .iter()
        .flat_map(|&r| (0..config.trials).map(move |run| (r, run)))
        .collect();
    let rows: Vec<String> = jobs
        .par_iter()
        .map(|&(num_repeats, run)| {
            let params = SolverParams {
                num_repeats,
                seed: run as u64,
                ..config.params.clone()
            };
            match find_all_pne(&game, config.backend, &params) {
                Ok(report) => format!("{num_repeats},{run},{run},{}", report.pne.len()),
                Err(e) => format!("{num_repeats},{run},{run},{}", sanitize(&e.to_string())),
            }
        })
        .collect();

    let mut text = String::from("num_repeats,run,solver_seed,pne_found\n");
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    let path = config.out_dir.join("sweep.csv");
    fs::write(&path, text)?;
    Ok(path)
}

pub fn run_timing(config: &ExperimentConfig) -> io::Result<PathBuf> {
    let jobs: Vec<(usize, Topology, usize)> = config
        .topologies
        .iter()
        .enumerate()
        .flat_map(|(ti, &t)| config.players.iter().map(move |&n| (ti, t, n)))
        .collect();

    let rows: Vec<Vec<String>> = jobs
        .par_iter()
        .map(|&(ti, topology, players)| {
            let seed = config.game_seed(ti, players, 0);
            let prefix = format!("{},{},{},{}", topology, players, config.actions, seed);
            let mut rows = Vec::new();
            let game = match generate_game(topology, players, config.actions, seed) {
                Ok(game) => game,
                Err(e) => {
                    rows.push(format!(
                        "{prefix},{},,,,,{}",
                        config.method_name(),
                        sanitize(&e.to_string())
                    ));
                    return rows;
                }
            };
            let params = SolverParams { seed, ..config.params.clone() };
            match find_all_pne(&game, config.backend, &params) {
                Ok(report) => rows.push(format!(
                    "{prefix},{},{:.3},{:.3},{:.3},{:.3},ok",
                    config.method_name(),
                    report.timings.best_response_ms,
                    report.timings.qubo_build_ms,
                    report.timings.solve_ms,
                    report.timings.total_ms()
                )),
                Err(e) => rows.push(format!(
                    "{prefix},{},,,,,{}",
                    config.method_name(),
                    sanitize(&e.to_string())
                )),
            }
            match brute_force_sets(&game) {
                Ok(report) => {
                    rows.push(format!("{prefix},bf,,,,{:.3},ok", report.elapsed_ms));
                }
                Err(e) => rows.push(format!("{prefix},bf,,,,,{}", sanitize(&e.to_string()))),
            }
            rows
        })
        .collect();

    let mut text = String::from(
        "topology,players,actions,game_seed,method,\
         best_response_ms,qubo_build_ms,solve_ms,total_ms,status\n",
    );
    for group in rows {
        for row in group {
            text.push_str(&row);
            text.push('\n');
        }
    }
    let path = config.out_dir.join("timing.csv");
    fs::write(&path, text)?;
    Ok(path)
}

/// Keeps error text CSV-safe.
fn sanitize(message: &str) -> String {
    message.replace([',', '\n'], ";")
}
