//! `hypotrochoid`: Virasoro descendants, sphere correlators, hypotrochoid
//! curves and the acceptance checks from the command line.

mod commands;
mod config;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{Format, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "hypotrochoid",
    version,
    about = "Virasoro descendants of hypotrochoid deformations: algebra, correlators, curves and checks",
    after_help = "Defaults: n_samples=4096 curve samples, n_theta=256 Fourier nodes, eps grid 2^-3..2^-10, \
                  seed=20240917. They are echoed into every output header.\n\
                  Relative --out paths are placed under $HYPOTROCHOID_OUT_DIR when it is set.\n\
                  Exit codes: 0 success, 1 check failure, 2 usage error, 3 i/o error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub(crate) struct Common {
    /// Output format; each command accepts a subset.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the result to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed recorded in the output header. Every computation is deterministic.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
pub(crate) enum Command {
    /// Table of C_λ from both recursions over all compositions of weight <= m_max.
    Coeffs {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        m_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Normal-ordered T_{k,m}; optionally re-express a PBW target through ∂^d T_{k',m'}.
    Descendant {
        k: i32,
        m: i32,
        /// Target state, e.g. "L[-2,-2,-2]" or "T[3,2]"; defaults to T_{k,m} itself.
        #[arg(long, num_args = 0..=1, default_missing_value = "")]
        solve_basis: Option<String>,
        /// Largest L0-weight the solver accepts.
        #[arg(long, default_value_t = 18)]
        weight_cap: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Exact sphere correlator of insertions like "T[2,1]@x T[2,1]@y".
    Correlator {
        /// Whitespace-separated insertions; the empty string is the empty product.
        spec: String,
        /// Point value for numeric evaluation, as label=rational (repeatable).
        #[arg(long = "at", value_name = "LABEL=VALUE")]
        at: Vec<String>,
        /// Central charge for numeric evaluation.
        #[arg(long)]
        c: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the acceptance checks: all, algebra, operators, ward, geometry or expansion.
    Check {
        #[arg(default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Write a hypotrochoid as SVG or CSV and report whether it is simple.
    Curve {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        b: f64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Centre, as a complex number such as "0", "1-2i".
        #[arg(long, default_value = "0")]
        w: String,
        #[arg(long, default_value_t = config::DEFAULT_N_SAMPLES)]
        n_samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Map between κ, n, y and the central charge c.
    Kappa {
        /// κ as a rational ("8/3") for an exact c, or a decimal.
        #[arg(long, group = "param")]
        kappa: Option<String>,
        #[arg(long, group = "param")]
        n: Option<f64>,
        #[arg(long, group = "param")]
        y: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Residual of the truncated expansion of f(g^-1) for a hypotrochoid map.
    Expand {
        /// eval, logder or schwarzian.
        #[arg(long, default_value = "eval")]
        functional: String,
        #[arg(long, default_value = "2")]
        z0: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value = "0")]
        w: String,
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, default_value_t = 1.5)]
        b: f64,
        /// Truncation order M (0..=4).
        #[arg(long, default_value_t = 2)]
        order: u32,
        /// Comma-separated, strictly decreasing; defaults to 2^-3..2^-10.
        #[arg(long, value_delimiter = ',')]
        eps: Vec<f64>,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help and version print and exit 0; real usage errors exit 2
            e.exit();
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
