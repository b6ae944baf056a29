use clap::{Args, Parser, Subcommand, ValueEnum};
use partition_core::{Charge, Multipartition};
use quiver_core::{Quiver, Residue};
use std::path::PathBuf;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "klrw", version, about = "Subdivision combinatorics of KLRW algebras in affine type A")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tikz,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The subdivided partition by strips and by runner insertion.
    Lamplus(EdgeArgs),
    /// Abacus display, optionally with the inserted runner.
    Abacus(AbacusArgs),
    /// Maximal strips for an edge.
    Strips(EdgeArgs),
    /// Residue diagram.
    Residues(Shape),
    /// The idempotent 1_lam as a loading.
    Idem(Shape),
    /// Subdivide 1_lam, or every tableau diagram of type --mu.
    Subdivide(SubdivideArgs),
    /// Semistandard tableaux and graded cell dimensions.
    Tableaux(TableauxArgs),
    /// Run a verification suite and write a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Shape {
    /// Quiver parameter; the quiver has e+1 vertices.
    #[arg(long)]
    pub e: u32,
    /// Residue charge, one entry per component, e.g. `0,2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub rho: Vec<i64>,
    /// Red positions; defaults to 0 at level one and to a spread charge otherwise.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub kappa: Option<Vec<i64>>,
    /// Multipartition, e.g. `4,3,2` or `3,1|2` or `1^9`.
    #[arg(long, allow_hyphen_values = true)]
    pub lam: String,
}

#[derive(Debug, Args)]
pub struct EdgeArgs {
    #[command(flatten)]
    pub shape: Shape,
    /// Subdivided edge `i -> i+1`.
    #[arg(long, default_value_t = 0)]
    pub edge: u32,
}

#[derive(Debug, Args)]
pub struct AbacusArgs {
    #[command(flatten)]
    pub shape: Shape,
    /// Truncation level; defaults to N0 - 2.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    /// Also show the abacus after inserting the runner for this edge.
    #[arg(long)]
    pub plus: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    ByType,
    UnsafeLeft,
    UnsafeRight,
}

#[derive(Debug, Args)]
pub struct SubdivideArgs {
    #[command(flatten)]
    pub shape: Shape,
    #[arg(long, default_value_t = 0)]
    pub edge: u32,
    /// Subdivide the tableau diagrams of this type instead of 1_lam.
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long, value_enum, default_value_t = SideArg::ByType)]
    pub side: SideArg,
}

#[derive(Debug, Args)]
pub struct TableauxArgs {
    #[command(flatten)]
    pub shape: Shape,
    /// Restrict to tableaux of this type.
    #[arg(long)]
    pub mu: Option<String>,
    /// Tableau drawn by `--format tikz`.
    #[arg(long, default_value_t = 0)]
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Equiv,
    Tuples,
    Idem,
    Degree,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 8)]
    pub n_max: u32,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    pub e_set: Vec<u32>,
    /// Component count for the equivalence sweep.
    #[arg(long, default_value_t = 1)]
    pub level: usize,
    /// Random diagrams for the degree suite; sampled level two cases for idem.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long, default_value = "klrw-report.json")]
    pub report: PathBuf,
}

fn usage(field: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("--{field}: {msg}"))
}

impl Shape {
    pub fn quiver(&self) -> Result<Quiver, CliError> {
        Quiver::new(self.e).map_err(|e| usage("e", e))
    }

    pub fn lam(&self) -> Result<Multipartition, CliError> {
        parse_multipartition("lam", &self.lam)
    }

    /// The charge, checked against the level of `lam`.
    pub fn charge(&self, lam: &Multipartition) -> Result<Charge, CliError> {
        if self.rho.len() != lam.level() {
            return Err(usage("rho", format!("{} entries for a multipartition of level {}", self.rho.len(), lam.level())));
        }
        self.affine_charge(lam)
    }

    /// As [`Shape::charge`], but `lam` may have more components than the
    /// charge; the extra ones use the affine extension.
    pub fn affine_charge(&self, lam: &Multipartition) -> Result<Charge, CliError> {
        if self.rho.len() > lam.level() {
            return Err(usage("rho", format!("{} entries for a multipartition of level {}", self.rho.len(), lam.level())));
        }
        match &self.kappa {
            Some(k) => Charge::new(self.rho.clone(), k.clone()).map_err(|e| usage("kappa", e)),
            None if self.rho.len() == 1 => Ok(Charge::level_one(self.rho[0])),
            None => Ok(Charge::spread(self.rho.clone(), lam.size())),
        }
    }
}

pub fn parse_multipartition(field: &str, s: &str) -> Result<Multipartition, CliError> {
    s.parse().map_err(|e| usage(field, e))
}

pub fn edge(q: &Quiver, i: u32) -> Result<Residue, CliError> {
    q.check(Residue(i)).map_err(|e| usage("edge", e))
}
