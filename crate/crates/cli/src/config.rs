//! Parsed command lines. A [`RunConfig`] serializes to JSON and back unchanged.

use alcovelab::Q;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Parser, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[command(name = "alcovelab", version, about = "Admissible sets, Kottwitz sets and local models for GL_n and GSp_2n")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Element cap for enumerations; overrides the default and ALCOVELAB_CAP.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: Option<u64>,
    /// Seed recorded with the run for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print the parsed configuration as JSON instead of running.
    #[arg(long, global = true)]
    #[serde(default)]
    pub print_config: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Gl,
    Gsp,
}

impl From<Group> for alcovelab::rootdata::GroupKind {
    fn from(g: Group) -> Self {
        match g {
            Group::Gl => alcovelab::rootdata::GroupKind::Gl,
            Group::Gsp => alcovelab::rootdata::GroupKind::Gsp,
        }
    }
}

/// Comma-separated integers, e.g. `1,0,-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(IntList(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| format!("`{}` is not an integer", p.trim())))
            .collect::<Result<_, _>>()
            .map(IntList)
    }
}

impl fmt::Display for IntList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma-separated rationals, e.g. `1/2,1/2`. Kept as text so that it round-trips verbatim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatList(pub String);

impl RatList {
    pub fn values(&self) -> Result<Vec<Q>, String> {
        self.0
            .split(',')
            .map(|p| p.trim().parse::<Q>().map_err(|_| format!("`{}` is not a rational number", p.trim())))
            .collect()
    }
}

impl FromStr for RatList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let r = RatList(s.to_string());
        r.values()?;
        Ok(r)
    }
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub group: Group,
    /// Rank: `GL_n` or `GSp_2n`.
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Dominant coweight in full coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: IntList,
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmKArgs {
    #[command(flatten)]
    pub mu: MuArgs,
    /// Affine simple reflections generating the parahoric; defaults to the special maximal one.
    #[arg(long)]
    pub k: Option<IntList>,
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChaiArgs {
    #[command(flatten)]
    pub mu: MuArgs,
    /// Newton vector of the lower class.
    #[arg(long, allow_hyphen_values = true)]
    pub from: RatList,
    /// Newton vector of the upper class.
    #[arg(long, allow_hyphen_values = true)]
    pub to: RatList,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    Either,
    Dominant,
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyArgs {
    /// Dominant coweight of `GL_2`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: IntList,
    /// Slopes `l1,l2` of the sigma-class.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: RatList,
    #[arg(long, value_enum, default_value_t = Reading::Either)]
    pub reading: Reading,
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridArgs {
    #[arg(long, default_value_t = 3)]
    pub mu_bound: i64,
    #[arg(long, default_value_t = 3)]
    pub lambda_bound: i64,
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvwArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// First matrix, as a b-spec (`identity`, `diag:...`, `antidiag:...`).
    #[arg(long, default_value = "identity")]
    pub g: String,
    /// Second matrix, as a b-spec.
    #[arg(long)]
    pub h: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelArg {
    Iwahori,
    Hyperspecial,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Found,
    Empty,
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    /// The element `b`, as a b-spec.
    #[arg(long)]
    pub b: String,
    /// Target element `t=..;w=..` for `X_w(b)`.
    #[arg(long, conflicts_with = "mu", required_unless_present = "mu")]
    pub w: Option<String>,
    /// Target coweight for `X(mu, b)`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<IntList>,
    #[arg(long, value_enum, default_value_t = LevelArg::Iwahori)]
    pub level: LevelArg,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long, default_value_t = 2)]
    pub m_max: u32,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    /// Exit with status 2 unless the outcome matches.
    #[arg(long, value_enum)]
    pub expect: Option<Expect>,
}

#[derive(Args, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Rank of the subspaces; forced to `n` for `gsp`.
    #[arg(long)]
    pub r: Option<usize>,
    /// Lattice chain index set.
    #[arg(long)]
    pub chain: IntList,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Further field sizes for the per-q table and polynomial fit.
    #[arg(long)]
    pub qs: Option<IntList>,
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// The admissible set Adm(mu).
    Adm(MuArgs),
    /// The permissible set Perm(mu).
    Perm(MuArgs),
    /// Set comparison of Adm(mu) and Perm(mu).
    Compare(MuArgs),
    /// Adm_K(mu) in the double cosets of a parahoric.
    #[command(name = "admK", alias = "adm-k")]
    #[serde(rename = "admK")]
    AdmK(AdmKArgs),
    /// The poset B(G, mu).
    Bgmu(MuArgs),
    /// Chai's length between two classes of B(G, mu).
    Chailength(ChaiArgs),
    /// Conjectured dimension of the basic locus, both forms.
    Dimbasic(MuArgs),
    /// Elements of Adm(mu) with nonempty X_w(b) for GL_2.
    AdlvClassify(ClassifyArgs),
    /// Coherence grid for GL_2.
    AdlvGrid(GridArgs),
    /// Relative position of two matrices.
    OracleInvw(InvwArgs),
    /// Bounded search for points of X_w(b) or X(mu, b).
    OracleSearch(SearchArgs),
    /// Point count of a lattice-chain local model.
    LocalmodelCount(LocalArgs),
    /// Runs every acceptance check.
    FixturesVerify,
}
