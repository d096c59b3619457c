use std::path::PathBuf;

use chern::invariants::DEFAULT_NMAX_CAP;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "chern", version, about = "Groebner bases and parameter-ideal invariants of graded quotients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print the JSON result document instead of the readable summary.
    #[arg(long, global = true)]
    pub json: bool,

    /// Also write the JSON result document to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    /// Reduced Groebner basis of an ideal.
    Gb(GbArgs),
    /// Length, socle dimension and the e/f coefficient vectors of M/qM.
    Invariants(InvariantsArgs),
    /// Irreducible and primary decomposition of a monomial ideal.
    Decompose(DecomposeArgs),
    /// Sample parameter ideals and evaluate the inequalities that apply.
    Check(CheckArgs),
    /// Reproduce the closed forms for the two non-Cohen-Macaulay families.
    VerifyPaper(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Args, Debug, Serialize)]
pub struct RingArgs {
    /// Ring such as `Q[x,y,z]` or `F32003[x,y] lex`.
    #[arg(long)]
    pub ring: Option<String>,

    /// Override the monomial order of the ring.
    #[arg(long, value_enum)]
    pub order: Option<OrderArg>,

    /// Coefficient field: `Q`, `Fp` (p = 32003) or `F<p>` such as `F101`.
    #[arg(long)]
    pub field: Option<String>,
}

/// The module `S/J`, given by a ring and `J` or by one of the built-in families.
#[derive(Args, Debug, Serialize)]
pub struct ModuleArgs {
    #[command(flatten)]
    pub ring: RingArgs,

    /// Generators of `J`, or an intersection `(f, g) & (h)`. Defaults to 0.
    #[arg(long)]
    pub module: Option<String>,

    /// Use `k[x1..xd, y]` with `J = (x1..xd) & (y)`.
    #[arg(long = "example-1", value_name = "D", conflicts_with_all = ["ring", "module", "example_2"])]
    pub example_1: Option<usize>,

    /// Use `k[x,y,z]` with `J = x^a (x,y,z) + (z^b)`.
    #[arg(long = "example-2", value_name = "A,B", conflicts_with_all = ["ring", "module"])]
    pub example_2: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct GbArgs {
    #[command(flatten)]
    pub ring: RingArgs,

    #[arg(long)]
    pub ideal: String,
}

#[derive(Args, Debug, Serialize)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub input: ModuleArgs,

    /// The ideal `q`; sampled as a system of parameters when omitted.
    #[arg(long)]
    pub ideal: Option<String>,

    /// Largest `n` tried before giving up on stabilization.
    #[arg(long, default_value_t = DEFAULT_NMAX_CAP)]
    pub nmax: u64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Degree of sampled parameters.
    #[arg(long, default_value_t = 1)]
    pub degree: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub input: ModuleArgs,

    /// Monomial ideal to decompose; defaults to `J`.
    #[arg(long)]
    pub ideal: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: ModuleArgs,

    #[arg(long, default_value_t = 5)]
    pub samples: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 2)]
    pub degree: u32,

    #[arg(long, default_value_t = DEFAULT_NMAX_CAP)]
    pub nmax: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// Which family: 1 (space and line) or 2 (line with embedded point).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub example: u8,

    /// Dimension of the space in family 1.
    #[arg(long, default_value_t = 3)]
    pub d: usize,

    #[arg(long, default_value_t = 2)]
    pub a: u32,

    #[arg(long, default_value_t = 2)]
    pub b: u32,

    /// Coefficient field, `Fp` by default.
    #[arg(long)]
    pub field: Option<String>,

    /// Parameter ideals to sample: 1 for family 1, 20 for family 2 by default.
    #[arg(long)]
    pub samples: Option<usize>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = DEFAULT_NMAX_CAP)]
    pub nmax: u64,
}
