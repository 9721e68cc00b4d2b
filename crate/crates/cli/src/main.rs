use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use arr_cli::commands::{self, CliError, Options, Report};
use arr_cli::textout;

/// Exact combinatorics of central rational hyperplane arrangements:
/// intersection lattice, supersolvable and hypersolvable classification,
/// holonomy Lie algebra dimensions, and vertical deformations.
#[derive(Parser)]
#[command(name = "arr", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the full intersection lattice and report its flats.
    Lattice(CommonArgs),
    /// Decide supersolvability and report a modular chain and exponents.
    Supersolvable(CommonArgs),
    /// Search for a composition series and report extension kinds.
    Hypersolvable(CommonArgs),
    /// Compute graded holonomy dimensions and the structural checks.
    Holonomy(CommonArgs),
    /// Classify, then check the lower-central-series formula and the
    /// decomposition of the graded dimensions; exit 0 only when all pass.
    Verify(CommonArgs),
    /// Write a verified vertical deformation to a supersolvable arrangement.
    Deform(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Arrangement file (see the README for the format).
    file: PathBuf,
    /// Truncation degree for graded computations.
    #[arg(long, default_value_t = 5, value_name = "N")]
    max_degree: usize,
    /// Seed for the deformation offsets (required by `deform`).
    #[arg(long, value_name = "S")]
    seed: Option<u64>,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the report (or the deformed arrangement for `deform`) here
    /// instead of stdout.
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Worker hint passed to library internals (currently single-threaded).
    #[arg(long, value_name = "T")]
    threads: Option<usize>,
}

fn max_flats_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var("ARR_MAX_FLATS") {
        Err(_) => Ok(Some(100_000)),
        Ok(v) => v
            .parse::<usize>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("ARR_MAX_FLATS must be an integer, got `{v}`"))),
    }
}

type Runner = fn(&std::path::Path, &Options) -> Result<Report, CliError>;

fn run(cli: Cli) -> Result<(Report, CommonArgs), CliError> {
    let (args, runner): (CommonArgs, Runner) = match cli.command {
        Command::Lattice(a) => (a, commands::cmd_lattice as Runner),
        Command::Supersolvable(a) => (a, commands::cmd_supersolvable),
        Command::Hypersolvable(a) => (a, commands::cmd_hypersolvable),
        Command::Holonomy(a) => (a, commands::cmd_holonomy),
        Command::Verify(a) => (a, commands::cmd_verify),
        Command::Deform(a) => (a, commands::cmd_deform),
    };
    let opts = Options {
        max_degree: args.max_degree,
        seed: args.seed,
        max_flats: max_flats_from_env()?,
        threads: args.threads,
        output: args.output.clone(),
    };
    let report = runner(&args.file, &opts)?;
    Ok((report, args))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's help/version output is not an error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((report, args)) => {
            let rendered =
                if args.json { report.to_json() } else { textout::render(&report) };
            let is_deform = matches!(report, Report::Deform(_));
            // deform's --output names the arrangement file; its report goes
            // to stdout either way
            if let (Some(path), false) = (&args.output, is_deform) {
                if let Err(e) = std::fs::write(path, rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{rendered}");
            }
            ExitCode::from(u8::try_from(report.exit_code()).unwrap_or(1))
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(1))
        }
    }
}
