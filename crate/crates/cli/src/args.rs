use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "finf", version, about = "Two-variable knot invariant F∞ and its specializations, from braid words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads (defaults to one per core).
    #[arg(long, env = "FINF_THREADS", global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one invariant with one engine, or with all of them.
    Compute(ComputeArgs),
    /// Run a cross-verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct BraidArgs {
    /// Preset name (unknot, trefoil, mirror-trefoil, figure8) or a word
    /// such as "1 -2 1 -2".
    #[arg(long)]
    pub braid: String,

    /// Braid index for a word; defaults to the largest generator plus one.
    #[arg(long)]
    pub strands: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub invariant: Invariant,

    #[command(flatten)]
    pub braid: BraidArgs,

    #[arg(long, value_enum, default_value = "trace")]
    pub engine: Engine,

    /// State bound for finf.
    #[arg(long = "B")]
    pub bound: Option<u32>,

    /// Color for jones.
    #[arg(long = "N")]
    pub color: Option<u32>,

    /// Root of unity order for ado.
    #[arg(long)]
    pub r: Option<u32>,

    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,

    /// Remove the framing factor (`--normalize false` keeps the raw trace).
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    pub normalize: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,

    #[command(flatten)]
    pub braid: BraidArgs,

    #[arg(long = "B", default_value_t = 4)]
    pub bound: u32,

    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    Finf,
    Jones,
    Ado,
    Alexander,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Finf => "finf",
            Invariant::Jones => "jones",
            Invariant::Ado => "ado",
            Invariant::Alexander => "alexander",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Trace,
    Statesum,
    Homological,
    Qdet,
    All,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Trace => "trace",
            Engine::Statesum => "statesum",
            Engine::Homological => "homological",
            Engine::Qdet => "qdet",
            Engine::All => "all",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Engines,
    Markov,
    Ado,
    Mmr,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
}
