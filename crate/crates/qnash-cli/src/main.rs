mod bench;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qnash::{
    export_qubo, find_all_pne, generate_game, load_game, save_game, Backend, GameError,
    InnerBackend, QuboFormat, SaSchedule, SolverParams, Topology,
};

#[derive(Parser)]
#[command(
    name = "qnash",
    version,
    about = "Pure Nash equilibria of graphical games via best-response extraction \
             and a set-cover style binary model solved by classical backends"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random game file with a given dependency topology
    Generate(GenerateArgs),
    /// Find all pure Nash equilibria of a game file
    Solve(SolveArgs),
    /// Compile a game file and export the binary model coefficients
    Export(ExportArgs),
    /// Run seeded benchmark suites and write CSV tables
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TopologyArg {
    Tree,
    Circle,
    Road,
}

impl From<TopologyArg> for Topology {
    fn from(t: TopologyArg) -> Topology {
        match t {
            TopologyArg::Tree => Topology::Tree,
            TopologyArg::Circle => Topology::Circle,
            TopologyArg::Road => Topology::Road,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exhaustive,
    Sa,
    Tabu,
    Decomp,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Exhaustive => Backend::Exhaustive,
            BackendArg::Sa => Backend::Sa,
            BackendArg::Tabu => Backend::Tabu,
            BackendArg::Decomp => Backend::Decomposed(InnerBackend::Exhaustive),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Coo,
    Qbsolv,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    topology: TopologyArg,
    #[arg(long)]
    players: usize,
    #[arg(long, default_value_t = 3)]
    actions: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long, value_enum, default_value = "sa")]
    backend: BackendArg,
    /// Independent restarts of the heuristic backends
    #[arg(long, default_value_t = 50)]
    num_repeats: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Penalty coefficient of the compiled model
    #[arg(long, default_value_t = 1)]
    penalty: i64,
    /// Variables per decomposition block
    #[arg(long, default_value_t = 20)]
    subproblem_size: usize,
    /// Annealing sweeps per restart (backend-dependent default)
    #[arg(long)]
    sa_sweeps: Option<usize>,
}

impl SolverArgs {
    fn params(&self) -> SolverParams {
        SolverParams {
            num_repeats: self.num_repeats,
            subproblem_size: self.subproblem_size,
            seed: self.seed,
            penalty: self.penalty,
            sa: SaSchedule { sweeps: self.sa_sweeps, ..SaSchedule::default() },
            ..SolverParams::default()
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Game file to solve
    #[arg(long)]
    game: PathBuf,
    #[command(flatten)]
    solver: SolverArgs,
    /// Write the report as JSON (deterministic: no wall-clock fields)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    game: PathBuf,
    #[arg(long, value_enum, default_value = "coo")]
    format: FormatArg,
    #[arg(long, default_value_t = 1)]
    penalty: i64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Which suite to run
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    /// Comma-separated topologies
    #[arg(long, value_delimiter = ',', default_values = ["tree", "circle", "road"])]
    topologies: Vec<TopologyArg>,
    /// Comma-separated player counts
    #[arg(long, value_delimiter = ',', default_values = ["6", "8", "10"])]
    players: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    actions: usize,
    /// Instances per cell (quality) or runs per setting (variance/sweep)
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Random-search budget per instance; defaults to the measured
    /// pipeline time of the same instance
    #[arg(long)]
    timeout_ms: Option<u64>,
    #[command(flatten)]
    solver: SolverArgs,
    /// Directory for the CSV tables
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Quality,
    Variance,
    Sweep,
    Timing,
    All,
}

enum CliError {
    /// Bad flag combination or inconsistent request: exit code 2.
    Usage(String),
    /// File or solver failure at run time: exit code 1.
    Runtime(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Export(args) => cmd_export(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), CliError> {
    let game = generate_game(args.topology.into(), args.players, args.actions, args.seed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    save_game(&args.out, &game).map_err(|e| CliError::Runtime(e.to_string()))?;
    println!(
        "wrote {} ({} players, {} actions, seed {})",
        args.out.display(),
        args.players,
        args.actions,
        args.seed
    );
    Ok(())
}

fn load(path: &PathBuf) -> Result<qnash::GraphicalGame, CliError> {
    load_game(path).map_err(|e| match e {
        GameError::Io(_) | GameError::Json(_) => {
            CliError::Runtime(format!("{}: {e}", path.display()))
        }
        other => CliError::Runtime(format!("{}: {other}", path.display())),
    })
}

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    let game = load(&args.game)?;
    let params = args.solver.params();
    let backend: Backend = args.solver.backend.into();
    let report =
        find_all_pne(&game, backend, &params).map_err(|e| CliError::Runtime(e.to_string()))?;
    println!("{} PNE found", report.pne.len());
    for profile in &report.pne {
        let actions: Vec<String> = profile.actions().iter().map(usize::to_string).collect();
        println!("  ({})", actions.join(", "));
    }
    println!(
        "timings_ms: best_response={:.3} qubo_build={:.3} solve={:.3} total={:.3}",
        report.timings.best_response_ms,
        report.timings.qubo_build_ms,
        report.timings.solve_ms,
        report.timings.total_ms()
    );
    println!(
        "backend: {} ({}), {} vars, {} sets, best energy {:?}",
        report.backend.backend,
        report.backend.mode,
        report.backend.num_vars,
        report.backend.num_sets,
        report.backend.best_energy
    );
    if let Some(out) = args.out {
        let mut text = report.to_json_deterministic().to_string();
        text.push('\n');
        std::fs::write(&out, text).map_err(|e| CliError::Runtime(e.to_string()))?;
        println!("report written to {}", out.display());
    }
    Ok(())
}

fn cmd_export(args: ExportArgs) -> Result<(), CliError> {
    let game = load(&args.game)?;
    let b = qnash::collect_b(&game);
    let model = qnash::build_qubo(&b, &game, args.penalty)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let format = match args.format {
        FormatArg::Coo => QuboFormat::Coo,
        FormatArg::Qbsolv => QuboFormat::Qbsolv,
    };
    export_qubo(&model, format, &args.out).map_err(|e| CliError::Runtime(e.to_string()))?;
    println!(
        "wrote {} ({} variables, {} sets, offset {})",
        args.out.display(),
        model.num_vars(),
        b.cardinality(),
        model.offset()
    );
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let config = bench::ExperimentConfig {
        topologies: args.topologies.iter().map(|&t| t.into()).collect(),
        players: args.players.clone(),
        actions: args.actions,
        trials: args.trials,
        backend: args.solver.backend.into(),
        params: args.solver.params(),
        rs_budget_ms: args.timeout_ms,
        out_dir: args.out_dir.clone(),
    };
    config.validate().map_err(CliError::Usage)?;
    std::fs::create_dir_all(&config.out_dir).map_err(|e| CliError::Runtime(e.to_string()))?;
    let run_all = matches!(args.suite, SuiteArg::All);
    if run_all || matches!(args.suite, SuiteArg::Quality) {
        let path = bench::run_quality(&config).map_err(|e| CliError::Runtime(e.to_string()))?;
        println!("quality grid written to {}", path.display());
    }
    if run_all || matches!(args.suite, SuiteArg::Variance) {
        let path = bench::run_variance(&config).map_err(|e| CliError::Runtime(e.to_string()))?;
        println!("variance table written to {}", path.display());
    }
    if run_all || matches!(args.suite, SuiteArg::Sweep) {
        let path = bench::run_sweep(&config).map_err(|e| CliError::Runtime(e.to_string()))?;
        println!("num_repeats sweep written to {}", path.display());
    }
    if run_all || matches!(args.suite, SuiteArg::Timing) {
        let path = bench::run_timing(&config).map_err(|e| CliError::Runtime(e.to_string()))?;
        println!("timing table written to {}", path.display());
    }
    Ok(())
}
