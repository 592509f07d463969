use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orthoql::ortho_lattice::CatalogLaw;
use orthoql::Field;
use orthoql_cli::commands::{self, Report, Source, Suite};
use orthoql_cli::{CliError, Instance};

#[derive(Debug, Parser)]
#[command(name = "orthoql", version, about = "Exact orthocomplemented subspaces, partial projections and lattice-law checks")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Field for randomly generated instances.
    #[arg(long, global = true, default_value = "Q")]
    field: Field,

    /// Append wall-clock time; reports are otherwise byte-identical across runs.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// Instance file (JSON).
    #[arg(long, conflicts_with = "random")]
    file: Option<PathBuf>,

    /// Random instances instead of a file.
    #[arg(long, num_args = 3, value_names = ["DIM", "COUNT", "SEED"])]
    random: Option<Vec<u64>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a prefix expression such as `meet A B` or `implies Zero L`.
    Op {
        #[arg(long)]
        file: PathBuf,
        #[arg(required = true, num_args = 1.., trailing_var_arg = true)]
        expr: Vec<String>,
    },
    /// Run law suites and report verdicts; exits 1 if a proved law fails.
    Check {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated suites.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        laws: Vec<Suite>,
        /// Seed for sampled points when checking a file.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Split a vector into its components along a named pair.
    Project {
        #[arg(long)]
        file: PathBuf,
        ortho: String,
        /// Comma-separated entries, e.g. `2,3,0`.
        vector: String,
    },
    /// Equality, inner product and norm in the quotient by a named pair.
    Quotient {
        #[arg(long)]
        file: PathBuf,
        ortho: String,
        x: String,
        y: String,
    },
    /// Check the projection correspondence and serialization on every pair.
    Roundtrip {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Show or search for a triple violating a classical lattice law.
    Counterexample {
        #[arg(value_parser = parse_law)]
        law: CatalogLaw,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
    /// Print an instance in canonical form.
    Normalize {
        #[command(flatten)]
        source: SourceArgs,
    },
}

fn parse_law(s: &str) -> Result<CatalogLaw, String> {
    match s {
        "heyting" => Ok(CatalogLaw::HeytingAdjunction),
        _ => s.parse().map_err(|_| "expected distributivity, modularity or heyting".to_string()),
    }
}

enum Loaded {
    File(String, Instance),
    Random { dim: usize, count: usize, seed: u64 },
}

impl Loaded {
    fn from_args(args: &SourceArgs) -> Result<Self, CliError> {
        match (&args.file, &args.random) {
            (Some(path), None) => Ok(Loaded::File(path.display().to_string(), Instance::load(path)?)),
            (None, Some(r)) => {
                let dim = usize::try_from(r[0]).map_err(|_| CliError::input("dimension too large"))?;
                if dim == 0 {
                    return Err(CliError::input("--random: dimension must be at least 1"));
                }
                let count = usize::try_from(r[1]).map_err(|_| CliError::input("count too large"))?;
                Ok(Loaded::Random { dim, count, seed: r[2] })
            }
            _ => Err(CliError::input("one of --file or --random is required")),
        }
    }

    fn source(&self) -> Source<'_> {
        match self {
            Loaded::File(path, instance) => Source::File { path: path.clone(), instance },
            &Loaded::Random { dim, count, seed } => Source::Random { dim, count, seed },
        }
    }
}

struct Rendered {
    json: serde_json::Value,
    text: String,
    exit: u8,
}

fn rendered<R: Report>(r: R) -> Result<Rendered, CliError> {
    let json = serde_json::to_value(&r).map_err(|e| CliError::input(e.to_string()))?;
    Ok(Rendered { json, text: r.text(), exit: r.exit_code() })
}

fn run(cli: &Cli) -> Result<Rendered, CliError> {
    match &cli.command {
        Command::Op { file, expr } => rendered(commands::op(&Instance::load(file)?, &expr.join(" "))?),
        Command::Check { source, laws, seed } => {
            let loaded = Loaded::from_args(source)?;
            rendered(commands::check(&loaded.source(), cli.field, laws, *seed)?)
        }
        Command::Project { file, ortho, vector } => rendered(commands::project(&Instance::load(file)?, ortho, vector)?),
        Command::Quotient { file, ortho, x, y } => rendered(commands::quotient(&Instance::load(file)?, ortho, x, y)?),
        Command::Roundtrip { source } => {
            let loaded = Loaded::from_args(source)?;
            rendered(commands::roundtrip(&loaded.source(), cli.field)?)
        }
        Command::Counterexample { law, dim, seed, budget } => {
            rendered(commands::counterexample(*law, cli.field, *dim, *seed, *budget)?)
        }
        Command::Normalize { source } => {
            let inst = match Loaded::from_args(source)? {
                Loaded::File(_, inst) => inst,
                Loaded::Random { dim, count, seed } => Instance::random(cli.field, dim, count, seed),
            };
            let json = serde_json::to_value(inst.to_file()).map_err(|e| CliError::input(e.to_string()))?;
            Ok(Rendered { text: inst.to_json(), json, exit: 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let elapsed = start.elapsed().as_millis();
    match cli.format {
        Format::Text => {
            println!("{}", out.text);
            if cli.timing {
                println!("time: {elapsed} ms");
            }
        }
        Format::Json => {
            let args: Vec<String> = std::env::args().skip(1).collect();
            let mut env = serde_json::json!({ "command": args, "report": out.json });
            if cli.timing {
                env["timing_ms"] = serde_json::json!(elapsed);
            }
            println!("{}", serde_json::to_string_pretty(&env).expect("reports serialize"));
        }
    }
    ExitCode::from(out.exit)
}
