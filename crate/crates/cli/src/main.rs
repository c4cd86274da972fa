//! `port-ems` command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input (validation, parse or I/O
//! failure), 2 usage error. Report data goes to stdout or `--output`;
//! human-readable notes go to stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use port_ems::report::{serialize_reports, ReportFormat};
use port_ems::scenario::SectorShares;
use port_ems::{
    batch, presets, serialize_report, validate_scenario, Assignment, CostMatrix, Scenario,
    ValidatedScenario,
};

#[derive(Debug, Parser)]
#[command(
    name = "port-ems",
    version,
    about = "Port energy, carbon, AGV-dispatch and cost simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a scenario file (or bundled preset) against every model invariant.
    Validate {
        /// Scenario JSON file or preset name.
        input: String,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Simulate a scenario, a preset, or every *.json scenario in a directory.
    Run {
        /// Scenario JSON file, directory of scenario files, or preset name.
        input: String,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Solve a standalone AGV assignment problem.
    Dispatch {
        /// CSV cost grid (one row per line), scenario JSON with a
        /// dispatch_matrix, or bundled matrix name.
        input: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List bundled scenarios and cost matrices.
    Presets,
}

#[derive(Debug, clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Default, clap::Args)]
struct Overrides {
    /// Objective weights w_emissions,w_energy,w_dispatch,w_renewables.
    #[arg(long, value_name = "WE,WN,WD,WR", value_parser = parse_four)]
    weights: Option<[f64; 4]>,
    /// Sector shares equipment_share,transport_share,buildings_share.
    #[arg(long, value_name = "A,B,C", value_parser = parse_three)]
    shares: Option<[f64; 3]>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Structured,
            Format::Csv => ReportFormat::Tabular,
        }
    }
}

fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let values = s
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| format!("`{v}` is not a number"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    values
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected {N} comma-separated numbers, got {}", v.len()))
}

fn parse_four(s: &str) -> Result<[f64; 4], String> {
    parse_list(s)
}

fn parse_three(s: &str) -> Result<[f64; 3], String> {
    parse_list(s)
}

/// Failure on valid usage: bad input, unreadable file, failed write.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn execute(command: Command) -> CliResult {
    match command {
        Command::Validate { input, overrides } => {
            let scenario = load_one(&input, &overrides)?;
            println!("{}: valid", scenario.name);
            Ok(())
        }
        Command::Run {
            input,
            output,
            overrides,
        } => {
            let path = Path::new(&input);
            if path.is_dir() {
                run_directory(path, &output, &overrides)
            } else {
                let scenario = load_one(&input, &overrides)?;
                let report = port_ems::run_scenario(&scenario)?;
                eprint!("{}", report.summary());
                emit(&output, &serialize_report(&report, output.format.into()))
            }
        }
        Command::Dispatch { input, output } => {
            let matrix = load_matrix(&input)?;
            let assignment = port_ems::dispatch::solve_assignment(&matrix);
            eprintln!("{assignment}");
            emit(&output, &serialize_assignment(&assignment, output.format))
        }
        Command::Presets => {
            let mut out = String::from("scenarios:\n");
            for name in presets::names() {
                let description = presets::scenario(name)
                    .and_then(|s| s.description)
                    .unwrap_or_default();
                out.push_str(&format!("  {name:<32} {}\n", first_sentence(&description)));
            }
            out.push_str("matrices:\n");
            for name in presets::matrix_names() {
                out.push_str(&format!("  {name}\n"));
            }
            print!("{out}");
            Ok(())
        }
    }
}

fn first_sentence(text: &str) -> &str {
    text.split_inclusive(". ").next().unwrap_or("").trim_end()
}

fn read_scenario(input: &str) -> CliResult<Scenario> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| format!("{input}: {e}"))?;
        Scenario::from_json(&text).map_err(|e| Failure(format!("{input}: {e}")))
    } else if let Some(s) = presets::scenario(input) {
        Ok(s)
    } else {
        Err(Failure(format!("{input}: no such file or bundled preset")))
    }
}

fn apply(mut scenario: Scenario, overrides: &Overrides) -> Scenario {
    if let Some(w) = overrides.weights {
        scenario.objective_weights = scenario.objective_weights.with_weights(w);
    }
    if let Some([a, b, c]) = overrides.shares {
        scenario.shares = SectorShares::new(a, b, c);
    }
    scenario
}

fn load_one(input: &str, overrides: &Overrides) -> CliResult<ValidatedScenario> {
    let scenario = apply(read_scenario(input)?, overrides);
    validate_scenario(scenario).map_err(|e| Failure(format!("{input}: scenario-model: {e}")))
}

fn run_directory(dir: &Path, output: &OutputArgs, overrides: &Overrides) -> CliResult {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Failure(format!(
            "{}: no *.json scenarios found",
            dir.display()
        )));
    }
    let scenarios = paths
        .iter()
        .map(|p| load_one(&p.to_string_lossy(), overrides))
        .collect::<CliResult<Vec<_>>>()?;
    let reports = batch::run_scenarios(&scenarios)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    for report in &reports {
        eprint!("{}", report.summary());
    }
    emit(output, &serialize_reports(&reports, output.format.into()))
}

fn load_matrix(input: &str) -> CliResult<CostMatrix> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| format!("{input}: {e}"))?;
        if path.extension().is_some_and(|ext| ext == "json") {
            let scenario = load_one(input, &Overrides::default())?;
            return scenario
                .cost_matrix()
                .cloned()
                .ok_or_else(|| Failure(format!("{input}: scenario has no dispatch_matrix")));
        }
        CostMatrix::from_csv_str(&text).map_err(|e| Failure(format!("{input}: dispatch: {e}")))
    } else if let Some(m) = presets::matrix(input) {
        Ok(m)
    } else {
        Err(Failure(format!("{input}: no such file or bundled matrix")))
    }
}

fn serialize_assignment(assignment: &Assignment, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(assignment).expect("assignment serializes");
            out.push(b'\n');
            out
        }
        Format::Csv => {
            let mut out = String::from("row,column\n");
            for (row, col) in assignment.mapping.iter().enumerate() {
                match col {
                    Some(c) => out.push_str(&format!("{row},{c}\n")),
                    None => out.push_str(&format!("{row},\n")),
                }
            }
            out.push_str(&format!(
                "total,{}\n",
                port_ems::report::format_value(assignment.total_cost)
            ));
            out.into_bytes()
        }
    }
}

fn emit(output: &OutputArgs, bytes: &[u8]) -> CliResult {
    match &output.output {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| Failure(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
