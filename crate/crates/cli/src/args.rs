use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "exclusivity",
    version,
    about = "Classical, quantum and exclusivity bounds of contextuality scenarios"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// SDP objective tolerance.
    #[arg(long, global = true, default_value_t = 1e-7)]
    pub tol: f64,
    /// Wall-clock budget for each exact clique search.
    #[arg(long, global = true, default_value_t = 60.0)]
    pub budget_secs: f64,
    /// Largest product graph that may be materialised.
    #[arg(long, global = true, default_value_t = 1024)]
    pub product_cap: usize,
    /// Largest graph accepted by isomorphism and cycle searches.
    #[arg(long, global = true, default_value_t = 32)]
    pub iso_cap: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build, combine and test exclusivity graphs
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Build scenarios and their exclusivity graphs
    #[command(subcommand)]
    Scenario(ScenarioCommand),
    /// Probability assignments and the exclusivity check
    #[command(subcommand)]
    Assignment(AssignmentCommand),
    /// Graph invariants and bounds
    #[command(subcommand)]
    Invariant(InvariantCommand),
    /// Check the reference claims and report a verdict
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Enumerate graph families
    #[command(subcommand)]
    Enumerate(EnumerateCommand),
}

#[derive(Subcommand, Debug)]
pub enum GraphCommand {
    #[command(subcommand)]
    Make(MakeCommand),
    #[command(subcommand)]
    Op(OpCommand),
    #[command(subcommand)]
    Test(TestCommand),
}

#[derive(Subcommand, Debug)]
pub enum MakeCommand {
    Circulant {
        #[arg(long)]
        n: usize,
        /// Comma-separated steps, e.g. `1,4`.
        #[arg(long, value_delimiter = ',', required = true)]
        steps: Vec<usize>,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct GraphFile {
    /// Graph JSON file.
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Args, Debug)]
pub struct GraphPair {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub other: PathBuf,
}

#[derive(Args, Debug)]
pub struct GraphPower {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
pub enum OpCommand {
    Complement(GraphFile),
    OrProduct(GraphPair),
    StrongProduct(GraphPair),
    OrPower(GraphPower),
    StrongPower(GraphPower),
}

#[derive(Subcommand, Debug)]
pub enum TestCommand {
    Isomorphic(GraphPair),
    VertexTransitive(GraphFile),
    SelfComplementary(GraphFile),
    /// Induced 5-cycles.
    Pentagons(GraphFile),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    Kcbs,
    Chsh,
}

#[derive(Subcommand, Debug)]
pub enum ScenarioCommand {
    Build {
        #[arg(value_enum)]
        which: Builtin,
    },
    /// Parse and validate a scenario file, printing it in canonical form.
    FromFile {
        #[arg(long)]
        file: PathBuf,
    },
    /// Joint events of two independent scenarios.
    Product {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        other: PathBuf,
    },
    ExclusivityGraph {
        #[arg(long)]
        scenario: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum AssignmentCommand {
    PrBox,
    /// Exit status 1 when some set of exclusive events exceeds 1.
    CheckE {
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long)]
        scenario: PathBuf,
    },
    Value {
        #[arg(long)]
        assignment: PathBuf,
        /// Comma-separated event indices; all events when absent.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
    },
    Product {
        #[arg(long)]
        assignment: PathBuf,
        #[arg(long)]
        other: PathBuf,
    },
}

/// A graph given directly or as the exclusivity graph of a scenario.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub scenario: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum InvariantCommand {
    Alpha(GraphInput),
    Omega(GraphInput),
    Theta(GraphInput),
    Alphastar(GraphInput),
    Triple(GraphInput),
    CopyBound {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        n: usize,
    },
    Capacity {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        max_power: usize,
    },
    Uniqueness(GraphInput),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    Kcbs {
        /// Check this graph instead of the KCBS exclusivity graph.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    Chsh {
        /// Check this graph instead of the CHSH exclusivity graph.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    Result1 {
        /// Graph of the 25 global events; built from two KCBS copies when absent.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    Result2 {
        #[arg(long)]
        n: usize,
        /// Check this graph as a claimed member instead of enumerating.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    Observation1 {
        #[arg(long)]
        scenario: Option<PathBuf>,
        #[arg(long)]
        assignment: Option<PathBuf>,
    },
    Observation2 {
        #[arg(long, default_value_t = 2)]
        max_power: usize,
        /// Replaces the CHSH exclusivity graph.
        #[arg(long)]
        chsh_graph: Option<PathBuf>,
        /// Replaces Ci8(1,2).
        #[arg(long)]
        capacity_graph: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum EnumerateCommand {
    /// Self-complementary circulants, one entry per isomorphism class.
    Scvt {
        #[arg(long)]
        n: usize,
    },
}
