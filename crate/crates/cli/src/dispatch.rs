//! Routes a parsed command line to the core operations.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use enumerlab_core::audit::{run_all, run_claim};
use enumerlab_core::bitseq::eq_prefix;
use enumerlab_core::diagonal::{antidiagonal, certificates, split, split_disjointness, SplitDisjointness};
use enumerlab_core::endsl::{self, GRAMMAR};
use enumerlab_core::listmatrix::{entry_big, figure6_enumeration, row_seq, submatrix_rows};
use enumerlab_core::pairing::{
    level_pairs, node_to_pair, pair_to_node, row_label, zigzag_decode, zigzag_encode,
};
use enumerlab_core::tree::{children, node_count, path_to_addr, paths_at_depth, prefix_chain};
use enumerlab_core::{
    BitSeq, BitString, Budget, ClaimId, Enumeration, Error, GridPair, NodeAddr, ParseError,
    ZigzagIndex, DEFAULT_BUDGET,
};
use thiserror::Error as ThisError;

use crate::args::{
    AuditArgs, Cli, Command, DiagCmd, FigArgs, MatrixCmd, PairCmd, ProgramArg, ReportFormat,
    SeqCmd, TreeCmd,
};
use crate::figures::{render_figure, FigParams};
use crate::report;

pub const BUDGET_ENV: &str = "ENUMERLAB_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Refuted = 1,
    Usage = 2,
    Budget = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub status: ExitStatus,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            status: ExitStatus::Success,
        }
    }
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{source}")]
    Parse { source: ParseError, program: String },
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Core(Error::DepthLimit { .. }) => ExitStatus::Budget,
            _ => ExitStatus::Usage,
        }
    }

    /// Text for the error stream; parse errors point at the offending column
    /// and are followed by the grammar.
    pub fn diagnostic(&self) -> String {
        let mut out = format!("error: {self}\n");
        if let CliError::Parse { source, program } = self {
            let line = program.lines().nth(source.line().saturating_sub(1) as usize);
            if let Some(line) = line {
                let pad = " ".repeat(source.column().saturating_sub(1) as usize);
                let _ = write!(out, "\n  {line}\n  {pad}^\n");
            }
            let _ = write!(out, "\n{GRAMMAR}");
            if !out.ends_with('\n') {
                out.push('\n');
            }
        }
        out
    }
}

/// Resolves the enumeration budget: flag, then environment, then default.
pub fn resolve_budget(flag: Option<u64>, env: Option<&str>) -> Result<Budget, CliError> {
    let limit = match (flag, env) {
        (Some(v), _) => v,
        (None, Some(text)) => text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV} must be a positive integer, got `{text}`")))?,
        (None, None) => DEFAULT_BUDGET,
    };
    Budget::new(limit).ok_or_else(|| CliError::Usage("the budget must be positive".into()))
}

pub fn run(cli: &Cli, env_budget: Option<&str>) -> Result<Output, CliError> {
    let budget = resolve_budget(cli.budget, env_budget)?;
    match &cli.command {
        Command::Pair(c) => pair(c, budget).map(Output::ok),
        Command::Seq(c) => seq(c, budget).map(Output::ok),
        Command::Tree(c) => tree(c, budget).map(Output::ok),
        Command::Matrix(c) => matrix(c, budget).map(Output::ok),
        Command::Diag(c) => diag(c, budget).map(Output::ok),
        Command::Audit(a) => audit(a, budget),
        Command::Fig(f) => fig(f, budget).map(Output::ok),
    }
}

fn lines<I, T>(items: I) -> String
where
    I: IntoIterator<Item = T>,
    T: std::fmt::Display,
{
    let mut out = String::new();
    for item in items {
        let _ = writeln!(out, "{item}");
    }
    out
}

fn pair(c: &PairCmd, budget: Budget) -> Result<String, CliError> {
    Ok(match c {
        PairCmd::Encode { m, n } => lines([zigzag_encode(&GridPair::new(m.clone(), n.clone()))]),
        PairCmd::Decode { i } => lines([zigzag_decode(&ZigzagIndex(i.clone()))]),
        PairCmd::Level { k } => lines(level_pairs(*k, budget)?),
        PairCmd::Rowlabel { i } => lines([row_label(i.clone())]),
        PairCmd::Node { level, offset } => {
            lines([node_to_pair(&NodeAddr::new(*level, offset.clone())?)])
        }
        PairCmd::Tonode { m, n } => match pair_to_node(&GridPair::new(m.clone(), n.clone())) {
            Some(a) => lines([a]),
            None => "none\n".to_string(),
        },
    })
}

fn program_text(p: &ProgramArg) -> Result<String, CliError> {
    match (&p.inline, &p.flag, &p.file) {
        (Some(t), _, _) | (_, Some(t), _) => Ok(t.clone()),
        (_, _, Some(path)) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        _ => Err(CliError::Usage(
            "a program is required (positional, --program or --program-file)".into(),
        )),
    }
}

fn parse_seq_text(text: String) -> Result<BitSeq, CliError> {
    match endsl::parse_seq(&text) {
        Ok(a) => Ok(endsl::eval_seq(&a)),
        Err(source) => Err(CliError::Parse {
            source,
            program: text,
        }),
    }
}

fn parse_enum_text(text: String) -> Result<(Enumeration, String), CliError> {
    match endsl::parse_enum(&text) {
        Ok(a) => Ok((endsl::eval_enum(&a), a.to_string())),
        Err(source) => Err(CliError::Parse {
            source,
            program: text,
        }),
    }
}

fn seq_program(p: &ProgramArg) -> Result<BitSeq, CliError> {
    parse_seq_text(program_text(p)?)
}

fn enum_program(p: &ProgramArg) -> Result<(Enumeration, String), CliError> {
    parse_enum_text(program_text(p)?)
}

fn seq(c: &SeqCmd, budget: Budget) -> Result<String, CliError> {
    Ok(match c {
        SeqCmd::Bit { program, pos } => lines([seq_program(program)?.bit_at(*pos)?]),
        SeqCmd::Prefix { program, prefix } => {
            budget.check_count(*prefix)?;
            lines([seq_program(program)?.prefix(*prefix)])
        }
        SeqCmd::Compl { program, prefix } => {
            budget.check_count(*prefix)?;
            lines([seq_program(program)?.complement().prefix(*prefix)])
        }
        SeqCmd::Bounds { program, prefix } => {
            budget.check_count(*prefix)?;
            lines([seq_program(program)?.dyadic_bounds(*prefix)])
        }
        SeqCmd::Cmp { left, right, prefix } => {
            budget.check_count(*prefix)?;
            let a = parse_seq_text(left.clone())?;
            let b = parse_seq_text(right.clone())?;
            match eq_prefix(&a, &b, *prefix) {
                Some(p) => format!("differ at position {p}\n"),
                None => format!("agree on the first {prefix} bits\n"),
            }
        }
    })
}

fn tree(c: &TreeCmd, budget: Budget) -> Result<String, CliError> {
    Ok(match c {
        TreeCmd::Paths { i } => lines(paths_at_depth(*i, budget)?),
        TreeCmd::Count { i } => lines([node_count(*i)]),
        TreeCmd::Children { level, offset } => {
            let (zero, one) = children(&NodeAddr::new(*level, offset.clone())?);
            lines([zero, one])
        }
        TreeCmd::Addr { path } => {
            let p = BitString::from_str(path)
                .map_err(|ch| CliError::Usage(format!("path must consist of 0 and 1, found `{ch}`")))?;
            budget.check_count(p.len() as u64)?;
            lines([path_to_addr(&p)])
        }
        TreeCmd::Chain { program, prefix } => {
            budget.check(&(num_bigint::BigUint::from(*prefix) * *prefix))?;
            lines(prefix_chain(&seq_program(program)?, *prefix))
        }
    })
}

fn matrix(c: &MatrixCmd, budget: Budget) -> Result<String, CliError> {
    Ok(match c {
        MatrixCmd::Entry { r, c } => lines([entry_big(r, *c)]),
        MatrixCmd::Row { r, prefix } => {
            budget.check_count(*prefix)?;
            lines([row_seq(r.clone()).prefix(*prefix)])
        }
        MatrixCmd::Submatrix { i } => lines(submatrix_rows(*i, budget)?),
        MatrixCmd::Labels { n } => {
            budget.check_count(*n)?;
            let labeled = figure6_enumeration();
            let mut out = String::new();
            for i in 0..*n {
                let _ = writeln!(out, "{i} {}", labeled.label(i));
            }
            out
        }
    })
}

fn diag(c: &DiagCmd, budget: Budget) -> Result<String, CliError> {
    Ok(match c {
        DiagCmd::Apply {
            program,
            rows,
            prefix,
        } => {
            budget.check(&(num_bigint::BigUint::from(*rows) * *prefix))?;
            let (list, text) = enum_program(program)?;
            let mut out = format!("list: {text}\n");
            for r in 0..*rows {
                let _ = writeln!(out, "row {r}: {}", list.row(r).prefix(*prefix));
            }
            let _ = writeln!(out, "diagc: {}", antidiagonal(&list).prefix(*prefix));
            out
        }
        DiagCmd::Cert {
            program,
            rows,
            format,
        } => {
            budget.check_count(*rows)?;
            let (list, text) = enum_program(program)?;
            let certs = certificates(&list, *rows);
            match format {
                ReportFormat::Json => report::certificates_json(&text, &certs),
                ReportFormat::Markdown => report::certificates_markdown(&text, &certs),
            }
        }
        DiagCmd::Split {
            program,
            rows,
            prefix,
        } => {
            budget.check(&(num_bigint::BigUint::from(*rows) * 2u32 * *prefix))?;
            let (list, text) = enum_program(program)?;
            let (even, odd) = split(&list);
            let mut out = format!("list: {text}\n");
            for r in 0..*rows {
                let _ = writeln!(out, "even {r}: {}", even.row(r).prefix(*prefix));
            }
            for r in 0..*rows {
                let _ = writeln!(out, "odd {r}: {}", odd.row(r).prefix(*prefix));
            }
            match split_disjointness(&list, rows.saturating_mul(2), *prefix) {
                SplitDisjointness::Disjoint { rows, prefix } => {
                    let _ = writeln!(out, "halves disjoint on {rows} rows at prefix {prefix}");
                }
                SplitDisjointness::Undecided {
                    even_row,
                    odd_row,
                    prefix,
                } => {
                    let _ = writeln!(
                        out,
                        "undecided: rows {even_row} and {odd_row} share prefix {prefix}"
                    );
                }
            }
            out
        }
    })
}

fn audit(a: &AuditArgs, budget: Budget) -> Result<Output, CliError> {
    let results = match &a.claim {
        Some(text) => {
            let id = ClaimId::from_str(text)?;
            vec![Ok(run_claim(id, a.depth, budget)?)]
        }
        None => run_all(a.depth, budget),
    };
    let text = match a.format {
        ReportFormat::Json => report::audit_json(&results),
        ReportFormat::Markdown => report::audit_markdown(a.depth, &results),
    };
    let status = if results.iter().any(|r| r.is_err()) {
        ExitStatus::Budget
    } else if report::any_refuted(&results) {
        ExitStatus::Refuted
    } else {
        ExitStatus::Success
    };
    Ok(Output { text, status })
}

fn fig(f: &FigArgs, budget: Budget) -> Result<String, CliError> {
    let params = FigParams {
        depth: f.depth,
        rows: f.rows,
        cols: f.cols,
        grid: f.grid,
        diagonals: f.diagonals,
    };
    Ok(render_figure(f.n, &params, budget)?)
}

/// One invocation per public core operation that exercises it.
pub const DISPATCH_TABLE: &[(&str, &[&str])] = &[
    ("pairing::zigzag_encode", &["pair", "encode", "3", "0"]),
    ("pairing::zigzag_decode", &["pair", "decode", "6"]),
    ("pairing::level_pairs", &["pair", "level", "2"]),
    ("pairing::node_to_pair", &["pair", "node", "2", "1"]),
    ("pairing::pair_to_node", &["pair", "tonode", "1", "2"]),
    ("pairing::row_label", &["pair", "rowlabel", "8"]),
    ("bitseq::bit_at", &["seq", "bit", "natrow(6)", "--pos", "2"]),
    ("bitseq::prefix", &["seq", "prefix", "periodic(01)", "--prefix", "8"]),
    ("bitseq::complement", &["seq", "compl", "natrow(5)", "--prefix", "8"]),
    ("bitseq::dyadic_bounds", &["seq", "bounds", "ones", "--prefix", "4"]),
    ("bitseq::eq_prefix", &["seq", "cmp", "natrow(7)", "ones", "--prefix", "8"]),
    ("tree::children", &["tree", "children", "1", "1"]),
    ("tree::path_to_addr", &["tree", "addr", "011"]),
    ("tree::paths_at_depth", &["tree", "paths", "3"]),
    ("tree::prefix_chain", &["tree", "chain", "natrow(5)", "--prefix", "4"]),
    ("tree::node_count", &["tree", "count", "3"]),
    ("listmatrix::entry", &["matrix", "entry", "16", "4"]),
    ("listmatrix::row_seq", &["matrix", "row", "5", "--prefix", "8"]),
    ("listmatrix::submatrix_rows", &["matrix", "submatrix", "3"]),
    ("listmatrix::figure6_enumeration", &["matrix", "labels", "7"]),
    ("diagonal::antidiagonal", &["diag", "apply", "figure5", "--rows", "4", "--prefix", "8"]),
    ("diagonal::certificates", &["diag", "cert", "figure5", "--rows", "8"]),
    ("diagonal::insert", &["diag", "apply", "insert(figure5, 1, ones)", "--rows", "4"]),
    ("diagonal::split", &["diag", "split", "figure5", "--rows", "4"]),
    ("diagonal::interleave", &["diag", "apply", "interleave(figure5, const(ones))"]),
    ("endsl::parse", &["diag", "apply", "--program", "interleave(figure5, const(zeros))"]),
    ("endsl::eval_seq", &["seq", "prefix", "prepend(101, compl(zeros))"]),
    ("endsl::eval_enum", &["diag", "cert", "const(periodic(10))", "--rows", "4"]),
    ("audit::run_claim", &["audit", "--claim", "C10", "--depth", "7"]),
    ("audit::run_all", &["audit", "--depth", "4", "--format", "json"]),
];

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn exec(argv: &[&str]) -> Result<Output, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("enumerlab").chain(argv.iter().copied())).unwrap();
        run(&cli, None)
    }

    fn text(argv: &[&str]) -> String {
        exec(argv).unwrap().text
    }

    #[test]
    fn pair_examples() {
        assert_eq!(text(&["pair", "encode", "3", "0"]), "6\n");
        assert_eq!(text(&["pair", "decode", "4"]), "(1, 1)\n");
        assert_eq!(text(&["pair", "level", "1"]), "(0, 1)\n(1, 0)\n");
        assert_eq!(text(&["pair", "rowlabel", "6"]), "21\n");
        assert_eq!(text(&["pair", "tonode", "1", "1"]), "none\n");
    }

    #[test]
    fn sequence_commands() {
        assert_eq!(text(&["seq", "bit", "natrow(6)", "--pos", "2"]), "1\n");
        assert_eq!(text(&["seq", "prefix", "periodic(01)", "--prefix", "5"]), "01010\n");
        assert_eq!(text(&["seq", "compl", "natrow(5)", "--prefix", "4"]), "0101\n");
        assert_eq!(text(&["seq", "cmp", "natrow(7)", "ones"]), "differ at position 4\n");
        assert_eq!(text(&["seq", "cmp", "ones", "compl(zeros)"]), "agree on the first 64 bits\n");
    }

    #[test]
    fn tree_and_matrix_commands() {
        assert_eq!(text(&["tree", "count", "3"]), "14\n");
        assert_eq!(text(&["tree", "paths", "2"]), "00\n01\n10\n11\n");
        assert_eq!(text(&["tree", "addr", "011"]), "(level 3, offset 3)\n");
        assert_eq!(text(&["tree", "addr", ""]), "(level 0, offset 0)\n");
        assert_eq!(text(&["matrix", "entry", "16", "4"]), "1\n");
        assert_eq!(text(&["matrix", "labels", "3"]), "0 0\n1 2\n2 3\n");
    }

    #[test]
    fn error_statuses() {
        let status = |argv: &[&str]| exec(argv).unwrap_err().status();
        assert_eq!(status(&["tree", "paths", "0"]), ExitStatus::Usage);
        assert_eq!(status(&["tree", "paths", "40"]), ExitStatus::Budget);
        assert_eq!(status(&["pair", "node", "1", "2"]), ExitStatus::Usage);
        assert_eq!(status(&["seq", "bit", "ones", "--pos", "0"]), ExitStatus::Usage);
        assert_eq!(status(&["audit", "--claim", "C11"]), ExitStatus::Usage);
        assert_eq!(status(&["seq", "prefix", "figure5"]), ExitStatus::Usage);
        assert_eq!(status(&["seq", "prefix"]), ExitStatus::Usage);
    }

    #[test]
    fn parse_diagnostic_points_at_column() {
        let err = exec(&["seq", "prefix", "compl(onez)"]).unwrap_err();
        let d = err.diagnostic();
        assert!(d.contains("1:7:"), "{d}");
        assert!(d.contains("\n        ^\n"), "{d}");
        assert!(d.contains(GRAMMAR.lines().next().unwrap()));
    }

    #[test]
    fn budget_resolution() {
        assert_eq!(resolve_budget(None, None).unwrap().limit(), DEFAULT_BUDGET);
        assert_eq!(resolve_budget(None, Some("100")).unwrap().limit(), 100);
        assert_eq!(resolve_budget(Some(7), Some("100")).unwrap().limit(), 7);
        assert!(resolve_budget(Some(0), None).is_err());
        assert!(resolve_budget(None, Some("lots")).is_err());
    }

    #[test]
    fn refuted_audit_exits_one() {
        let out = exec(&["audit", "--claim", "c9", "--depth", "3"]).unwrap();
        assert_eq!(out.status, ExitStatus::Refuted);
        let out = exec(&["audit", "--claim", "C10", "--depth", "3"]).unwrap();
        assert_eq!(out.status, ExitStatus::Success);
    }
}
