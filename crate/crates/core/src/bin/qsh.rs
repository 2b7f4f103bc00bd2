//! `qsh`: command-line front end for the quasi-shuffle toolkit.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use quasi_shuffle::cli::commands::{self, EvalArgs};
use quasi_shuffle::cli::parse::{parse_product, parse_r, parse_u32_list};
use quasi_shuffle::cli::{Format, SuiteConfig};
use quasi_shuffle::qsalg::{Alphabet, Product};
use quasi_shuffle::scalars::Rat;
use quasi_shuffle::zeval::TailMode;

#[derive(Parser)]
#[command(name = "qsh", version, about = "Quasi-shuffle algebras, interpolated products and multiple zeta values")]
struct Cli {
    /// mzv, euler:N or free:g1,g2
    #[arg(long, global = true, default_value = "mzv")]
    alphabet: String,
    /// qsh, sh, star or interp
    #[arg(long, global = true)]
    product: Option<String>,
    /// Interpolation parameter: p/q or sym
    #[arg(long, global = true, allow_hyphen_values = true)]
    r: Option<String>,
    /// Truncation N; defaults to QSH_DEFAULT_TERMS or 10^6
    #[arg(long, global = true)]
    terms: Option<usize>,
    /// text or json
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Tail treatment for numeric sums: asymptotic or none
    #[arg(long, global = true, default_value = "asymptotic")]
    tail: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Product of two linear combinations
    Mul {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Apply Ψ_f for a named or explicit series
    Psi {
        #[arg(long)]
        series: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Deconcatenation coproduct
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Antipode of the chosen product (interp by default)
    Antipode {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Dual index under τ
    Dual { index: String },
    /// Cyclic sum C(w)
    CyclicSum { index: String },
    /// Indices of the (interpolated or totally odd) sum theorem
    SumIndices {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        odd: bool,
    },
    /// Two-one word pair for an exponent list
    TwoOne {
        #[arg(long)]
        j: String,
    },
    /// Numeric value of a multiple zeta, t or colored value
    Eval {
        #[arg(long, default_value = "zeta")]
        kind: String,
        #[arg(long, default_value_t = 2)]
        level: u32,
        #[arg(allow_hyphen_values = true)]
        index: String,
    },
    /// κ-polynomials of Airy zeta values
    EvalAiry {
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        repeated: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Multiple zeta values over a zeros file
    EvalG {
        #[arg(long)]
        zeros_file: PathBuf,
        index: String,
    },
    /// Symmetric sums of interpolated values
    Symsum {
        #[arg(long, allow_hyphen_values = true)]
        keys: String,
        #[arg(long)]
        symbolic: bool,
    },
    /// Run a named verification suite
    Verify {
        suite: String,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
    },
}

fn rat_flag(r: Option<&str>) -> anyhow::Result<Option<Rat>> {
    r.map(parse_r).transpose().map(Option::flatten).context("invalid --r")
}

fn product_flag(name: Option<&str>, default: &str, r: Option<&Rat>) -> anyhow::Result<Product> {
    Ok(parse_product(name.unwrap_or(default), r)?)
}

fn run(cli: Cli) -> anyhow::Result<(String, i32)> {
    let format: Format = cli.format.parse()?;
    let alphabet: Alphabet = cli.alphabet.parse().context("invalid --alphabet")?;
    let tail: TailMode = cli.tail.parse()?;
    let r = rat_flag(cli.r.as_deref())?;
    let out = match &cli.cmd {
        Cmd::Mul { u, v } => {
            let kind = product_flag(cli.product.as_deref(), "qsh", r.as_ref())?;
            commands::mul(&alphabet, &kind, u, v, format)?
        }
        Cmd::Psi { series, x } => commands::psi_cmd(&alphabet, series, r.as_ref(), x, format)?,
        Cmd::Coproduct { x } => commands::coproduct_cmd(&alphabet, x, format)?,
        Cmd::Antipode { x } => {
            let kind = product_flag(cli.product.as_deref(), "interp", r.as_ref())?;
            commands::antipode_cmd(&alphabet, &kind, x, format)?
        }
        Cmd::Dual { index } => commands::dual(index, format)?,
        Cmd::CyclicSum { index } => commands::cyclic_sum_cmd(index, format)?,
        Cmd::SumIndices { n, l, odd } => commands::sum_indices(*n, *l, *odd, format)?,
        Cmd::TwoOne { j } => commands::two_one(&parse_u32_list(j)?, format)?,
        Cmd::Eval { kind, level, index } => {
            let args = EvalArgs { kind, level: *level, r, terms: cli.terms, tail };
            commands::eval(&args, index, format)?
        }
        Cmd::EvalAiry { k, repeated, n } => commands::eval_airy(*k, *repeated, *n, format)?,
        Cmd::EvalG { zeros_file, index } => commands::eval_g(zeros_file, cli.terms, index, format)?,
        Cmd::Symsum { keys, symbolic } => commands::symsum(keys, r.as_ref(), cli.terms, *symbolic, format)?,
        Cmd::Verify { suite, seed } => {
            let default = SuiteConfig::default();
            let cfg = SuiteConfig { terms: cli.terms.unwrap_or(default.terms), tail, seed: *seed };
            commands::verify(suite, &cfg, format)?
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
