//! Command-line front end: JSON, table or CSV reports with check verdicts.
//!
//! Exit codes: 0 when every check passes, 2 for usage errors, 3 when a
//! computation contradicts an expected identity.

mod algebra;
mod group_cmd;
mod hecke_cmd;
mod klr_cmd;
mod report;
mod selftest;

use algebra::RingArgs;
use clap::{Args, Parser, Subcommand};
use cyclohecke::group::GroupParams;
use report::{Format, Report};
use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

#[derive(Parser)]
#[command(name = "cyclohecke", version, about = "Exact computations in G(r,1,n) and its cyclotomic Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of randomized trials.
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
    /// Worker threads; 1 runs sequentially, 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args, Clone, Copy)]
struct Size {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    n: usize,
}

impl Size {
    fn params(self) -> Result<GroupParams, CliError> {
        GroupParams::new(self.r, self.n).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Group-theoretic commands for W_n = G(r,1,n).
    #[command(subcommand)]
    Group(GroupCmd),
    /// Commands in the cyclotomic Hecke algebra.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Block decomposition at ξ with quantum characteristic e.
    #[command(subcommand)]
    Klr(KlrCmd),
    /// Runs the acceptance checks.
    Selftest {
        #[arg(value_enum, default_value_t = selftest::Level::Quick)]
        level: selftest::Level,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// BM and double coset normal forms of a word such as "s2 s1 t".
    NormalForm {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        word: String,
    },
    /// Reduction certificate to the minimal class representative.
    Reduce {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        word: String,
    },
    /// Conjugacy classes with representatives and minimal lengths.
    Classes {
        #[command(flatten)]
        size: Size,
    },
    /// Length of a word's element.
    Length {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Product T_x T_y of two generator words.
    Mult {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Defining relations and random associativity.
    Relations {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Class polynomials f_{w,C} for every w.
    ClassPolys {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        ring: RingArgs,
        /// Solve with the character table instead of projecting.
        #[arg(long)]
        characters: bool,
    },
    /// Dual class polynomials g_{w,C} and the central basis z_C.
    DualClassPolys {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Dimension of the center.
    Center {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        ring: RingArgs,
        /// Compare with the span of symmetric polynomials in the Jucys-Murphy elements.
        #[arg(long)]
        check_symmetric_jm: bool,
    },
    /// Seminormal data: γ_t, Schur elements and checks.
    Seminormal {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Rank of the commutator subspace and of the cocenter.
    CocenterRank {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        ring: RingArgs,
    },
}

#[derive(Subcommand)]
enum KlrCmd {
    /// Blocks e(α), their residue sequences and the KLR checks.
    Blocks {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        e: u32,
        /// κ₁..κ_r, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        kappa: Vec<i64>,
    },
}

fn configure_jobs(jobs: usize) {
    if jobs == 1 {
        cyclohecke::par::set_sequential(true);
    }
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
}

fn hecke(cmd: HeckeCmd, seed: u64, trials: usize) -> Result<Report, CliError> {
    let (name, size, ring) = match &cmd {
        HeckeCmd::Mult { size, ring, .. } => ("hecke mult", size, ring),
        HeckeCmd::Relations { size, ring } => ("hecke relations", size, ring),
        HeckeCmd::ClassPolys { size, ring, .. } => ("hecke class-polys", size, ring),
        HeckeCmd::DualClassPolys { size, ring } => ("hecke dual-class-polys", size, ring),
        HeckeCmd::Center { size, ring, .. } => ("hecke center", size, ring),
        HeckeCmd::Seminormal { size, ring } => ("hecke seminormal", size, ring),
        HeckeCmd::CocenterRank { size, ring } => ("hecke cocenter-rank", size, ring),
    };
    let p = size.params()?;
    let alg = ring.build(p)?;
    let mut r = Report::new(name);
    r.param("r", p.r).param("n", p.n).param("ring", ring.describe());
    with_algebra!(&alg, h => {
        let (xi, q) = algebra::parameter_strings(h);
        r.param("xi", xi).param("Q", q);
        match &cmd {
            HeckeCmd::Mult { x, y, .. } => hecke_cmd::mult(h, x, y, &mut r),
            HeckeCmd::Relations { .. } => hecke_cmd::relations(h, seed, trials, &mut r),
            HeckeCmd::ClassPolys { characters, .. } => hecke_cmd::class_polys(h, *characters, &mut r),
            HeckeCmd::DualClassPolys { .. } => hecke_cmd::dual_class_polys(h, &mut r),
            HeckeCmd::Center { check_symmetric_jm, .. } => hecke_cmd::center_cmd(h, *check_symmetric_jm, &mut r),
            HeckeCmd::Seminormal { .. } => hecke_cmd::seminormal(h, &mut r),
            HeckeCmd::CocenterRank { .. } => hecke_cmd::cocenter_rank(h, &mut r),
        }
    })?;
    Ok(r)
}

fn dispatch(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Group(g) => match g {
            GroupCmd::NormalForm { size, word } => group_cmd::normal_form(size.params()?, &word),
            GroupCmd::Reduce { size, word } => group_cmd::reduce(size.params()?, &word),
            GroupCmd::Classes { size } => group_cmd::classes(size.params()?),
            GroupCmd::Length { size, word } => group_cmd::length_cmd(size.params()?, &word),
        },
        Command::Hecke(h) => hecke(h, cli.seed, cli.trials),
        Command::Klr(KlrCmd::Blocks { size, e, kappa }) => {
            let p = size.params()?;
            let mut r = Report::new("klr blocks");
            r.param("r", p.r).param("n", p.n).param("e", e).param("kappa", &kappa);
            klr_cmd::blocks(p, e, &kappa, &mut r)?;
            Ok(r)
        }
        Command::Selftest { level } => Ok(selftest::selftest(level, cli.seed, cli.trials)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    configure_jobs(cli.jobs);
    match dispatch(cli) {
        Ok(r) => {
            print!("{}", r.render(format));
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                for c in r.checks.iter().filter(|c| !c.passed) {
                    eprintln!("failed check: {} {}", c.name, c.detail);
                }
                ExitCode::from(3)
            }
        }
        Err(e @ CliError::Usage(_)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e @ CliError::Inconsistent(_)) => {
            eprintln!("{e}");
            ExitCode::from(3)
        }
    }
}
