use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gramkern::approx::TargetFunction;
use gramkern::exactscalar::{DEFAULT_PRECISION_BITS, MIN_PRECISION_BITS};
use gramkern::Family;

#[derive(Debug, Parser)]
#[command(
    name = "gramkern",
    version,
    about = "Exact reproducing-kernel polynomial approximation on the classical domains"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Binary precision of decimal renderings; exact fields are unaffected.
    #[arg(long, default_value_t = DEFAULT_PRECISION_BITS, global = true,
          value_parser = parse_precision)]
    pub precision_bits: usize,

    /// Significant digits of decimal renderings.
    #[arg(long, default_value_t = 17, global = true,
          value_parser = clap::value_parser!(u16).range(1..=200))]
    pub digits: u16,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn parse_precision(s: &str) -> Result<usize, String> {
    let bits: usize = s.parse().map_err(|e| format!("{e}"))?;
    if bits < MIN_PRECISION_BITS {
        return Err(format!("must be at least {MIN_PRECISION_BITS}"));
    }
    Ok(bits)
}

fn parse_size(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(format!("{e}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Laguerre,
    LegendreEven,
    LegendreOdd,
    HermiteEven,
    HermiteOdd,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Laguerre => Family::Laguerre,
            FamilyArg::LegendreEven => Family::LegendreEven,
            FamilyArg::LegendreOdd => Family::LegendreOdd,
            FamilyArg::HermiteEven => Family::HermiteEven,
            FamilyArg::HermiteOdd => Family::HermiteOdd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    SinPi,
    CosPi,
    ExpNeg,
}

impl From<TargetArg> for TargetFunction {
    fn from(t: TargetArg) -> TargetFunction {
        match t {
            TargetArg::SinPi => TargetFunction::SinPi,
            TargetArg::CosPi => TargetFunction::CosPi,
            TargetArg::ExpNeg => TargetFunction::ExpNeg,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the kernel matrix B (inverse monomial Gram matrix).
    Kernel {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_size)]
        size: usize,
    },
    /// Infinity-norm condition numbers of the monomial Gram matrices.
    Cond {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_size)]
        max_size: usize,
    },
    /// Taylor and kernel-estimate error variances by size.
    Variance {
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, value_parser = parse_size)]
        max_size: usize,
    },
    /// Coefficients of the kernel estimate and the Taylor polynomial.
    Project {
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, value_parser = parse_size)]
        size: usize,
    },
    /// CSV samples of f, its kernel estimate, and its Taylor polynomial.
    #[command(allow_negative_numbers = true)]
    Plotdata {
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, value_parser = parse_size)]
        size: usize,
        /// Defaults to 0 for exp-neg, -1 otherwise.
        #[arg(long)]
        xmin: Option<String>,
        /// Defaults to 10 for exp-neg, 1 otherwise.
        #[arg(long)]
        xmax: Option<String>,
        #[arg(long, default_value_t = 512)]
        samples: usize,
    },
    /// Run the exact structural checks for every family up to a size.
    Verify {
        #[arg(long, value_parser = parse_size)]
        max_size: usize,
        /// Perturb every kernel before checking (negative control).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}
