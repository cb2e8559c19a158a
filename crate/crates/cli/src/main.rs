use clap::{Parser, Subcommand};
use qhpp::commands::{self, to_json, CliError, ExitCode, PlotFormat};
use std::path::{Path, PathBuf};
use std::process;

/// Phase portraits of quasi-homogeneous planar polynomial systems.
#[derive(Parser)]
#[command(name = "qhpp", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full analysis on a system file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the numerical sector probes.
        #[arg(long)]
        no_oracle: bool,
        /// Oracle tolerance (overrides QHPP_TOL).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// List the quasi-homogeneous families of the given degree.
    Catalog {
        #[arg(long, default_value_t = 5)]
        degree: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count the distinct X_111 portraits per a14 regime.
    Census {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export streamlines of a system file.
    Plot {
        file: PathBuf,
        /// `xmin:xmax,ymin:ymax`.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 64)]
        streamlines: usize,
        #[arg(long, value_enum, default_value_t = PlotFormat::Csv)]
        format: PlotFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Compare the exact direction types with numerical sector probes.
    OracleCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        radius: f64,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::new(ExitCode::Input, format!("cannot read {}: {e}", path.display())))
}

fn tol(flag: Option<f64>) -> Result<f64, CliError> {
    commands::resolve_tol(flag, std::env::var("QHPP_TOL").ok().as_deref())
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::new(ExitCode::Input, format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn warn(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Analyze { file, out, no_oracle, tol: t } => {
            let tol = tol(t)?;
            let r = commands::analyze(&read(&file)?, tol, !no_oracle)?;
            warn(&r.warnings);
            emit(&to_json(&r), out.as_deref())
        }
        Cmd::Catalog { degree, out } => emit(&to_json(&commands::catalog(degree)?), out.as_deref()),
        Cmd::Census { out } => emit(&to_json(&commands::census()), out.as_deref()),
        Cmd::Plot {
            file,
            window,
            streamlines,
            format,
            out,
            tol: t,
        } => {
            let tol = tol(t)?;
            emit(&commands::plot(&read(&file)?, &window, streamlines, format, tol)?, out.as_deref())
        }
        Cmd::OracleCheck { file, radius, tol: t, out } => {
            let tol = tol(t)?;
            let r = commands::oracle_check(&read(&file)?, radius, tol)?;
            warn(&r.warnings);
            emit(&to_json(&r), out.as_deref())
        }
    }
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e}");
        process::exit(e.code as i32);
    }
}
