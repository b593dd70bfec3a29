//! `hopf-partial`: verify scenarios, dump tables, record and check golden
//! reports.
//!
//! Exit codes: 0 all checks pass, 1 a check failed or the golden report
//! differs, 2 usage or configuration error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hp_scenarios::{
    build, check_golden, default_golden_dir, record_golden, run_scenario, table, Mutation, ScenarioConfig, ScenarioError,
};

#[derive(Parser)]
#[command(name = "hopf-partial", version, about = "Exact verification of twisted partial Hopf actions")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "HOPF_PARTIAL_JOBS")]
    jobs: Option<usize>,
    /// 0 silent, 1 summary, 2 failing checks, 3 also every witness in the report.
    #[arg(long, short, global = true, default_value_t = 1)]
    verbosity: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct RunArgs {
    scenario: String,
    /// JSON config; fields it omits take the scenario defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    sample_count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check of a scenario and write the report.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        /// Report path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Corrupt one entry, as target:op:index.
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Dump a structure-constant table as JSON.
    Table {
        #[command(flatten)]
        run: RunArgs,
        /// crossed-product, hopf, action or omega.
        object: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Record the golden report, or diff the current report against it.
    Golden {
        #[command(flatten)]
        run: RunArgs,
        action: GoldenAction,
        /// Directory of golden reports.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GoldenAction {
    Record,
    Check,
}

fn usage(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn code(e: ScenarioError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        ScenarioError::Build(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn config(run: &RunArgs) -> Result<ScenarioConfig, ScenarioError> {
    let mut cfg = match &run.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| ScenarioError::Config(format!("{}: {e}", path.display())))?;
            let cfg = ScenarioConfig::from_json(&text, &run.scenario)?;
            if cfg.name != run.scenario {
                return Err(ScenarioError::Config(format!("config names {:?}, command names {:?}", cfg.name, run.scenario)));
            }
            cfg
        }
        None => ScenarioConfig::default_for(&run.scenario)?,
    };
    if let Some(n) = run.sample_count {
        cfg.sample_count = n;
    }
    if let Some(s) = run.seed {
        cfg.seed = s;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write(out: Option<&Path>, text: &str) -> Result<(), ScenarioError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| ScenarioError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(cli: &Cli, run: &RunArgs, out: Option<&Path>, mutate: Option<&str>) -> Result<ExitCode, ScenarioError> {
    let cfg = config(run)?;
    let m = mutate.map(str::parse::<Mutation>).transpose()?;
    let report = run_scenario(&cfg, m.as_ref())?.report;
    write(out, &report.to_json())?;
    let s = &report.summary;
    if cli.verbosity >= 1 {
        eprintln!("{}: {} checks, {} passed, {} failed, {} skipped", report.scenario, s.checks, s.passed, s.failed, s.skipped);
    }
    if cli.verbosity >= 2 {
        for (sec, c) in report.checks().filter(|(_, c)| !c.passed()) {
            eprintln!("  FAIL {sec}/{} {}", c.name, c.witness.as_ref().map(|w| w.join(", ")).unwrap_or_default());
        }
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn golden(cli: &Cli, run: &RunArgs, action: GoldenAction, dir: Option<&Path>) -> Result<ExitCode, ScenarioError> {
    let cfg = config(run)?;
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(default_golden_dir);
    // Check for the file before spending time on the run.
    if matches!(action, GoldenAction::Check) && !hp_scenarios::report::golden_path(&dir, &cfg.name).exists() {
        return Err(ScenarioError::MissingGolden(hp_scenarios::report::golden_path(&dir, &cfg.name).display().to_string()));
    }
    let report = run_scenario(&cfg, None)?.report;
    match action {
        GoldenAction::Record => {
            let path = record_golden(&dir, &report)?;
            if cli.verbosity >= 1 {
                eprintln!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        GoldenAction::Check => {
            let diff = check_golden(&dir, &report)?;
            for l in &diff {
                println!("{l}");
            }
            if cli.verbosity >= 1 {
                eprintln!("{}: {} differing fields", cfg.name, diff.len());
            }
            Ok(if diff.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 {
            return usage("--jobs must be positive");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            return usage(e);
        }
    }
    hp_algebra::set_full_witnesses(cli.verbosity >= 3);
    let result = match &cli.command {
        Command::Verify { run, out, mutate } => verify(&cli, run, out.as_deref(), mutate.as_deref()),
        Command::Table { run, object, out } => config(run).and_then(|cfg| {
            let json = table(&build(&cfg)?, object)?;
            let mut text = serde_json::to_string_pretty(&json).expect("table serializes");
            text.push('\n');
            write(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }),
        Command::Golden { run, action, dir } => golden(&cli, run, *action, dir.as_deref()),
    };
    result.unwrap_or_else(code)
}
