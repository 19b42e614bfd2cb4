use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cyclebreak",
    version,
    about = "Apply, trace and verify cycle-breaking bijections on permutations"
)]
pub struct Cli {
    /// Largest ground set the exhaustive commands accept. Overrides
    /// CYCLEBREAK_MAX_GROUND.
    #[arg(long, global = true)]
    pub max_ground: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a map to one permutation.
    Apply(ApplyArgs),
    /// Apply phi, psi or psi-inv and print every rule application.
    Trace(ApplyArgs),
    /// List the members of a class.
    Enumerate(ClassArgs),
    /// Count a class and compare with the closed form when there is one.
    Count(ClassArgs),
    /// Exhaustively check that a map is a bijection between its classes.
    Verify(VerifyArgs),
    /// Check inverse(map(p)) = p on seeded random inputs.
    Roundtrip(RoundtripArgs),
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct GroundArgs {
    /// Ground set {1, ..., k}.
    #[arg(long = "n", value_name = "K")]
    pub n: Option<u32>,
    /// Explicit ground set, e.g. "2,5,7,9".
    #[arg(long, value_name = "LIST")]
    pub ground: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Cycles,
    Oneline,
    Json,
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    /// phi, phi-inv, psi, psi-inv, ps, break, merge or swap.
    #[arg(long)]
    pub map: String,
    /// Permutation in cycle notation, e.g. "(1 3)(2 4)".
    #[arg(long)]
    pub perm: String,
    #[command(flatten)]
    pub ground: GroundArgs,
    /// Element pair for break, merge and swap, e.g. "1,2".
    #[arg(long, value_name = "X,Y")]
    pub pair: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Cycles)]
    pub format: Format,
    /// Leave fixed points out of cycle notation.
    #[arg(long)]
    pub hide_fixed: bool,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    /// ALL, ALL_ODD, ALL_EVEN, P, SAME_CYCLE_E1E2 or DIFF_CYCLE_E1E2.
    #[arg(long)]
    pub class: String,
    #[command(flatten)]
    pub ground: GroundArgs,
    #[arg(long, value_enum, default_value_t = Format::Cycles)]
    pub format: Format,
    #[arg(long)]
    pub hide_fixed: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// phi, psi or ps.
    #[arg(long)]
    pub map: String,
    #[command(flatten)]
    pub ground: GroundArgs,
    /// `json` for the machine-readable report; anything else prints text.
    #[arg(long, value_enum, default_value_t = Format::Cycles)]
    pub format: Format,
    /// Worker threads. The report is identical for every value.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    /// phi, psi or ps.
    #[arg(long)]
    pub map: String,
    #[command(flatten)]
    pub ground: GroundArgs,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub samples: u64,
    #[arg(long, value_enum, default_value_t = Format::Cycles)]
    pub format: Format,
}
