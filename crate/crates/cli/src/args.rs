use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

#[derive(Debug, Parser)]
#[command(name = "enumerlab", version, about = "Exact enumerations, diagonal certificates and claim audits")]
pub struct Cli {
    /// Maximum number of items a single enumeration may materialize
    /// [default: ENUMERLAB_BUDGET or 16777216]
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zigzag pairing and tree-level projection
    #[command(subcommand)]
    Pair(PairCmd),
    /// Infinite binary sequences
    #[command(subcommand)]
    Seq(SeqCmd),
    /// Binary tree nodes and path sets
    #[command(subcommand)]
    Tree(TreeCmd),
    /// The truth-table matrix
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Diagonal complement, certificates and list transforms
    #[command(subcommand)]
    Diag(DiagCmd),
    /// Run the claim catalog
    Audit(AuditArgs),
    /// Render one of the six figures as SVG
    Fig(FigArgs),
}

#[derive(Debug, Subcommand)]
pub enum PairCmd {
    /// Zigzag index of the pair (M, N)
    Encode { m: BigUint, n: BigUint },
    /// Pair at zigzag index I
    Decode { i: BigUint },
    /// Grid pairs of tree level K
    Level { k: u64 },
    /// Zigzag label of matrix row I
    Rowlabel { i: BigUint },
    /// Grid pair of a tree node
    Node { level: u64, offset: BigUint },
    /// Tree node projected onto the pair (M, N), if any
    Tonode { m: BigUint, n: BigUint },
}

#[derive(Debug, Clone, Args)]
pub struct ProgramArg {
    /// Program in the expression language
    #[arg(value_name = "PROGRAM")]
    pub inline: Option<String>,
    /// Program in the expression language (alternative to the positional form)
    #[arg(long = "program", conflicts_with = "inline")]
    pub flag: Option<String>,
    /// Read the program from a UTF-8 file
    #[arg(long = "program-file", conflicts_with_all = ["inline", "flag"])]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SeqCmd {
    /// Bit at a 1-based position
    Bit {
        #[command(flatten)]
        program: ProgramArg,
        #[arg(long)]
        pos: u64,
    },
    /// First N bits
    Prefix {
        #[command(flatten)]
        program: ProgramArg,
        #[arg(long, default_value_t = 32)]
        prefix: u64,
    },
    /// First N bits of the complement
    Compl {
        #[command(flatten)]
        program: ProgramArg,
        #[arg(long, default_value_t = 32)]
        prefix: u64,
    },
    /// Exact dyadic interval fixed by the first N bits
    Bounds {
        #[command(flatten)]
        program: ProgramArg,
        #[arg(long, default_value_t = 32)]
        prefix: u64,
    },
    /// First position within N bits where two sequences differ
    Cmp {
        left: String,
        right: String,
        #[arg(long, default_value_t = 64)]
        prefix: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum TreeCmd {
    /// All root paths of length I
    Paths { i: u64 },
    /// Number of non-root nodes down to level I
    Count { i: u64 },
    /// Children of a node
    Children { level: u64, offset: BigUint },
    /// Node reached by a path of 0/1 branch labels ("" for the root)
    Addr { path: String },
    /// Prefix chain of a sequence
    Chain {
        #[command(flatten)]
        program: ProgramArg,
        #[arg(long, default_value_t = 8)]
        prefix: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum MatrixCmd {
    /// Entry at row R, column C
    Entry { r: BigUint, c: u64 },
    /// Row R as a sequence
    Row {
        r: BigUint,
        #[arg(long, default_value_t = 16)]
        prefix: u64,
    },
    /// Rows of the 2^I x I submatrix
    Submatrix { i: u64 },
    /// Row labels of the first N rows
    Labels { n: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Markdown,
}

#[derive(Debug, Subcommand)]
pub enum DiagCmd {
    /// Rows of a list and its diagonal complement
    Apply {
        #[command(flatten)]
        program: ProgramArg,
        #[arg(long, default_value_t = 8)]
        rows: u64,
        #[arg(long, default_value_t = 16)]
        prefix: u64,
    },
    /// Disagreement certificates for the first N rows
    Cert {
        #[command(flatten)]
        program: ProgramArg,
        #[arg(long, default_value_t = 16)]
        rows: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Even and odd halves of a list
    Split {
        #[command(flatten)]
        program: ProgramArg,
        #[arg(long, default_value_t = 4)]
        rows: u64,
        #[arg(long, default_value_t = 16)]
        prefix: u64,
    },
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, default_value_t = 12)]
    pub depth: u64,
    /// Run a single claim (C1 through C10)
    #[arg(long)]
    pub claim: Option<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Markdown)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct FigArgs {
    /// Figure number, 1 through 6
    #[arg(value_parser = clap::value_parser!(u8).range(1..=6))]
    pub n: u8,
    /// Tree depth (figures 2 and 3)
    #[arg(long)]
    pub depth: Option<u64>,
    /// Matrix rows (figures 5 and 6)
    #[arg(long)]
    pub rows: Option<u64>,
    /// Matrix columns (figures 5 and 6)
    #[arg(long)]
    pub cols: Option<u64>,
    /// Grid size (figures 1, 3 and 4)
    #[arg(long)]
    pub grid: Option<u64>,
    /// Number of walk anti-diagonals (figure 4)
    #[arg(long)]
    pub diagonals: Option<u64>,
    /// Output format; only svg is supported
    #[arg(long, default_value = "svg", value_parser = ["svg"])]
    pub format: String,
}
