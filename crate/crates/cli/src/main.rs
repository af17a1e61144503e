//! `slopes`: boundary-slope tables and certificates from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use log::{debug, error};
use slopes_core::incompress::DEFAULT_TRIANGLE_BOUND;
use slopes_core::report::{
    cmd_knot, cmd_paper, cmd_verify_section2, cmd_verify_section3, emit_report, parse_n_range, Format, Report,
};
use slopes_core::Error;

const BOUND_VAR: &str = "SLOPES_TRIANGLE_BOUND";

#[derive(Parser, Debug)]
#[command(name = "slopes", version, about = "Boundary slopes of Montesinos knots and character-variety certificates")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Slope table of a Montesinos knot.
    Knot {
        /// Comma-separated reduced fractions, e.g. 1/3,1/5,1/7,1/2.
        #[arg(long)]
        tangles: String,
        /// Twist of the reference surface; required unless every tangle is 1/q.
        #[arg(long, allow_hyphen_values = true)]
        reference_twist: Option<i64>,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Edgepath checks for K_n and its mutant.
    VerifySection2 {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Character-variety certificate for K_n.
    VerifySection3 {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Both checks for every n in an inclusive range a..b.
    Paper {
        #[arg(long)]
        n_range: String,
    },
}

fn triangle_bound() -> Result<u64, Error> {
    match std::env::var(BOUND_VAR) {
        Ok(v) => {
            v.trim().parse().map_err(|_| Error::Input(format!("{BOUND_VAR} must be a non-negative integer, got `{v}`")))
        }
        Err(_) => Ok(DEFAULT_TRIANGLE_BOUND),
    }
}

fn run(cli: Cli) -> Result<Report, Error> {
    let format: Format = cli.format.parse()?;
    let bound = triangle_bound()?;
    debug!("triangle bound {bound}");
    let report = match cli.command {
        Command::Knot { tangles, reference_twist, json } => {
            let rep = cmd_knot(&tangles, reference_twist, bound)?;
            if let Some(path) = json {
                let text = emit_report(&rep, Format::Json)?;
                std::fs::write(&path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            }
            rep
        }
        Command::VerifySection2 { n } => cmd_verify_section2(n, bound)?,
        Command::VerifySection3 { n } => cmd_verify_section3(n)?,
        Command::Paper { n_range } => cmd_paper(parse_n_range(&n_range)?, bound)?,
    };
    print!("{}", emit_report(&report, format)?);
    Ok(report)
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(rep) => ExitCode::from(rep.exit_code() as u8),
        Err(e @ Error::VerificationFailed(_)) => {
            error!("{e}");
            eprintln!("slopes: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("slopes: {e}");
            ExitCode::from(2)
        }
    }
}
