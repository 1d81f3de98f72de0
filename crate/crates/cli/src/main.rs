use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use tilt_cli::{parse_input, FieldSpec, Params, Scenario, ScenarioKind};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    TubeDemo,
    DedekindClassify,
    FreeEnvelope,
    PerpCheck,
    Custom,
}

/// Run a reproduction scenario and print its report.
#[derive(Debug, Parser)]
#[command(name = "tilt", version)]
struct Cli {
    #[arg(value_enum)]
    scenario: Kind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Prime characteristic, or `Q` for the rationals.
    #[arg(long)]
    field: Option<String>,
    /// Largest module dimension for submodule and filtration searches.
    #[arg(long, default_value_t = 12)]
    dim_cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Quiver family for tube-demo.
    #[arg(long, default_value = "a31")]
    family: String,
    /// Comma-separated prime universe for dedekind-classify.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    primes: Vec<u64>,
    /// Ore generator set, e.g. `--ore 6` or `--ore 4,9`; repeatable.
    #[arg(long)]
    ore: Vec<String>,
    /// Random pairs per quiver for perp-check.
    #[arg(long, default_value_t = 100)]
    pairs: usize,
    /// Input file in the line format.
    #[arg(long)]
    input: Option<PathBuf>,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let field = match cli.field.as_deref() {
        None => None,
        Some("Q") => Some(FieldSpec::Rationals),
        Some(p) => match p.parse() {
            Ok(p) => Some(FieldSpec::Prime(p)),
            Err(_) => return usage(format!("bad field {p:?}")),
        },
    };
    let mut ore_sets = Vec::new();
    for s in &cli.ore {
        match s.split(',').map(str::parse).collect::<Result<Vec<i64>, _>>() {
            Ok(set) => ore_sets.push(set),
            Err(_) => return usage(format!("bad generator set {s:?}")),
        }
    }
    let input = match &cli.input {
        None => None,
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return usage(format!("{}: {e}", path.display())),
            };
            match parse_input(&text) {
                Ok(p) => Some(p),
                Err(e) => return usage(format!("{}: {e}", path.display())),
            }
        }
    };
    let kind = match cli.scenario {
        Kind::TubeDemo => ScenarioKind::TubeDemo,
        Kind::DedekindClassify => ScenarioKind::DedekindClassify,
        Kind::FreeEnvelope => ScenarioKind::FreeEnvelope,
        Kind::PerpCheck => ScenarioKind::PerpCheck,
        Kind::Custom => ScenarioKind::Custom,
    };
    let params = Params {
        field,
        seed: cli.seed,
        dim_cap: cli.dim_cap,
        family: cli.family,
        primes: cli.primes,
        ore_sets,
        pairs: cli.pairs,
        input,
        ..Params::default()
    };
    let report = match Scenario::new(kind, params).run() {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let rendered = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                return usage(format!("{}: {e}", path.display()));
            }
        }
        None => print!("{rendered}"),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        for f in &report.summary.failures {
            eprintln!("failed: {f}");
        }
        ExitCode::from(1)
    }
}
