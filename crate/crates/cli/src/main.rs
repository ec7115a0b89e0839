mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use icosa_core::{Arrangement, IrrepLabel, Parity, ParityIrrep, QuantaState, SabIrrep};

/// Icosahedral group I / Ih: group tables, irreps, group-algebra bases,
/// symmetry-adapted bases and Hückel block diagonalization.
///
/// Output is JSON by default. Exit codes: 0 success, 1 a verification
/// check failed, 2 bad arguments.
#[derive(Debug, Parser)]
#[command(name = "icosa", version)]
pub struct Cli {
    /// Tolerance applied to every numeric verification check.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Output format; CSV is available for `group table` and `irreps characters`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group multiplication table.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Irrep matrices and the character table.
    Irreps(IrrepsArgs),
    /// Irreducible bases of the group algebra for one irrep.
    Bases(BasesArgs),
    /// Symmetry-adapted bases on molecular state spaces.
    #[command(subcommand)]
    Sab(SabCommand),
    /// Hückel block diagonalization of C60 and C240.
    #[command(subcommand)]
    Huckel(HuckelCommand),
    /// Run the full invariant suite and print a pass/fail matrix.
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Product table `x·y` by element label (row x, column y).
    Table {
        /// Include the 60 elements `P·R` (120×120 table).
        #[arg(long)]
        parity: bool,
    },
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
pub struct IrrepsArgs {
    #[command(subcommand)]
    pub command: Option<IrrepsCommand>,
    /// Irrep: A, T1, T2, G, H, or with parity such as Hg, T1u.
    #[arg(long, value_parser = parse_rep, required = true)]
    pub rep: Option<SabIrrep>,
    /// Element label such as S1, T0^2, R6 or PS12 (P·S12 and P*S12 also accepted).
    #[arg(long, required = true)]
    pub element: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum IrrepsCommand {
    /// 5×5 character table with class sizes.
    Characters,
}

#[derive(Debug, Args)]
pub struct BasesArgs {
    /// Irrep: A, T1, T2, G or H.
    #[arg(long)]
    pub rep: IrrepLabel,
    /// Project onto gerade (g) or ungerade (u) combinations over Ih.
    #[arg(long)]
    pub parity: Option<Parity>,
}

#[derive(Debug, Subcommand)]
pub enum SabCommand {
    /// SAB of B12H12 vibration states seeded by 12 bond quanta.
    B12h12 {
        /// Quanta n0..n5,m0..m5, comma separated.
        #[arg(long)]
        quanta: QuantaState,
        /// Include the full SAB vectors.
        #[arg(long)]
        vectors: bool,
        /// Use Ih (with the A/B swap as parity) instead of I.
        #[arg(long)]
        parity: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum HuckelCommand {
    /// C60 blocks, their closed forms and the dense spectrum.
    C60 {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Restrict the block list to one Ih irrep such as A_g or T1u.
        #[arg(long)]
        block: Option<ParityIrrep>,
    },
    /// C240 blocks in either arrangement against the tabulated blocks.
    C240 {
        #[arg(long)]
        arrangement: Arrangement,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        block: Option<ParityIrrep>,
    },
}

fn parse_rep(s: &str) -> Result<SabIrrep, String> {
    if let Ok(l) = s.parse::<IrrepLabel>() {
        return Ok(SabIrrep::Plain(l));
    }
    s.parse::<ParityIrrep>()
        .map(SabIrrep::Parity)
        .map_err(|e| e.to_string())
}

pub enum CliError {
    /// Bad input: exit 2.
    Usage(String),
    /// Computation error: exit 1.
    Failed(String),
}

impl From<icosa_core::IcosaError> for CliError {
    fn from(e: icosa_core::IcosaError) -> Self {
        use icosa_core::IcosaError::*;
        match e {
            UnknownIrrep(_) | UnknownElement(_) | InvalidArgument(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    match commands::run(&cli, &echo) {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
