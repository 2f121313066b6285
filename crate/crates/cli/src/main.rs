use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cca_core::verify::{
    cmd_complete_cca, cmd_complete_default, cmd_f21_census, cmd_oracle_suite, cmd_product_demo, replay_verdict,
    Checklist,
};
use cca_core::Error;
use clap::{Parser, Subcommand};

/// Reproduces the color-automorphism computations for small Cayley graphs.
#[derive(Parser, Debug)]
#[command(name = "cca-verify", version)]
struct Cli {
    /// Worker threads for the census and the brute-force suite.
    #[arg(long, global = true, default_value_t = default_jobs())]
    jobs: usize,
    /// Write the machine-readable report here.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Log search progress to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every connection set of F21: exactly one non-CCA graph up to isomorphism.
    F21Census,
    /// Complete Cayley graphs: CCA iff the group is not a Hamiltonian 2-group.
    CompleteCca {
        /// File with one group descriptor per line.
        #[arg(long)]
        roster: Option<PathBuf>,
    },
    /// Cay(Z_m, {±1}) □ Γ_F21 and its recovered product structure.
    ProductDemo {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force, left-translation, 2-closure and lemma property suites.
    OracleSuite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verdict for a single connection set.
    Verdict {
        /// Group descriptor such as F21, Z5xF21, Q8xZ2^2 or D4.
        #[arg(long)]
        group: String,
        /// Comma-separated element labels, e.g. "a,a^2,ax,(ax)^-1".
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// A failed run: assertion failures exit with 1, bad input with 2.
enum Failure {
    Assertions,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => {
                eprintln!("error: {e}");
                Failure::Assertions
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn write_json(path: Option<&Path>, contents: &str) -> Result<(), Failure> {
    if let Some(path) = path {
        fs::write(path, contents).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn finish(checks: &Checklist) -> Result<(), Failure> {
    println!("{checks}");
    if checks.passed() {
        Ok(())
    } else {
        Err(Failure::Assertions)
    }
}

fn read_roster(path: &Path) -> Result<Vec<String>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let roster: Vec<String> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect();
    if roster.is_empty() {
        return Err(Failure::Usage(format!("{} lists no groups", path.display())));
    }
    Ok(roster)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json.as_deref();
    match cli.command {
        Command::F21Census => {
            let (report, checks) = cmd_f21_census(cli.jobs)?;
            write_json(json, &report.to_jsonl())?;
            print!("{}", report.summary_table());
            finish(&checks)
        }
        Command::CompleteCca { roster } => {
            let report = match roster {
                Some(path) => cmd_complete_cca(&read_roster(&path)?)?,
                None => cmd_complete_default()?,
            };
            write_json(json, &to_json(&report))?;
            print!("{}", report.summary_table());
            finish(&report.checks)
        }
        Command::ProductDemo { m, seed } => {
            let report = cmd_product_demo(m, seed)?;
            write_json(json, &to_json(&report))?;
            println!(
                "m = {m}: order {}, |A°| = {}, |Aut| = {}, CCA = {}, |G1| = {}",
                report.order, report.ao_order, report.aut_order, report.is_cca, report.g1_order
            );
            for (i, r) in report.random.iter().enumerate() {
                println!(
                    "random graph {i}: S = {{{}}}, CCA = {}, |A°| = {}",
                    r.set.join(","),
                    r.is_cca,
                    r.ao_order
                );
            }
            finish(&report.checks)
        }
        Command::OracleSuite { seed } => {
            let checks = cmd_oracle_suite(seed, cli.jobs)?;
            write_json(json, &to_json(&checks))?;
            finish(&checks)
        }
        Command::Verdict { group, set } => {
            let verdict = replay_verdict(&group, &set)?;
            let line = serde_json::to_string(&verdict).expect("verdicts serialize");
            write_json(json, &(line.clone() + "\n"))?;
            println!("{line}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.verbose { "trace" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertions) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
