use std::fmt;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "pfun",
    version,
    about = "Generalized trigonometric and hyperbolic functions and log-mean convexity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval {
        /// sin_p, cos_p, tan_p, sinh_p, cosh_p, tanh_p, arcsin_p, arccos_p, arctan_p, arcsinh_p or arctanh_p.
        #[arg(long = "fn")]
        function: String,
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a constant: pi_p, b_p, c_p, s_p or r_p.
    Const {
        #[arg(long)]
        name: String,
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check convexity claims on a grid. Margin tolerance: PFUN_TOL (default 1e-9).
    Check {
        /// A claim id, or `all`.
        #[arg(long, default_value = "all")]
        claim: String,
        /// Repeat for several values.
        #[arg(long, required = true, allow_negative_numbers = true)]
        p: Vec<f64>,
        /// Grid points per axis.
        #[arg(long, default_value_t = 40)]
        n: usize,
        /// Grid domain `lo..hi`, intersected with each claim's own domain.
        #[arg(long)]
        domain: Option<Domain>,
        /// Check the opposite inequality instead (a strictness probe).
        #[arg(long)]
        reverse: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve for the thresholds s_p and r_p.
    Roots {
        #[arg(long, required = true, allow_negative_numbers = true)]
        p: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate a function on `n` equally spaced points, endpoints included.
    Table {
        #[arg(long = "fn")]
        function: String,
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long)]
        domain: Domain,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// `lo..hi` as given on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
}

impl FromStr for Domain {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected lo..hi, got '{s}'"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("'{t}' is not a number"))
        };
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(format!("domain needs finite lo < hi, got {lo}..{hi}"));
        }
        Ok(Domain { lo, hi })
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}
