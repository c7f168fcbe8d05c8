use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ramlocus_cli::{classify, exit, locus, mult, trace, Center, LocusFormat, LocusMode, Outcome};

/// Ramification loci of normalized cubic rational maps over Puiseux series.
///
/// Exit codes: 0 success, 1 I/O or parse error, 2 invalid instance,
/// 3 verdicts disagree, 4 precision exhausted, 5 trace contradicts the
/// prediction. Malformed arguments count as parse errors.
#[derive(Parser)]
#[command(name = "ramlocus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Symbolic,
    Oracle,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print the taxonomy case of an instance.
    Classify { path: PathBuf },
    /// Describe the ramification locus.
    Locus {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
    },
    /// Local degree at the disk point zeta(center, |t|^radius-exp).
    Mult {
        path: PathBuf,
        /// A series literal, or `inf` for the coordinate 1/z.
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        #[arg(long, allow_hyphen_values = true)]
        radius_exp: String,
    },
    /// Sample the hull and compare each multiplicity with the predicted locus.
    Trace {
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        grid: usize,
        #[arg(long, hide = true)]
        corrupt_prediction: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // --help and --version also arrive here, on stdout
            return if e.use_stderr() { ExitCode::from(exit::INPUT as u8) } else { ExitCode::SUCCESS };
        }
    };
    let outcome: Outcome = match cli.command {
        Command::Classify { path } => classify(&path),
        Command::Locus { path, format, mode } => {
            let format = match format {
                Format::Json => LocusFormat::Json,
                Format::Dot => LocusFormat::Dot,
            };
            let mode = match mode {
                Mode::Symbolic => LocusMode::Symbolic,
                Mode::Oracle => LocusMode::Oracle,
                Mode::Both => LocusMode::Both,
            };
            locus(&path, format, mode)
        }
        Command::Mult { path, center, radius_exp } => {
            let center = if center.trim() == "inf" { Center::Infinity } else { Center::Finite(center) };
            mult(&path, &center, &radius_exp)
        }
        Command::Trace { path, grid, corrupt_prediction } => trace(&path, grid, corrupt_prediction),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
