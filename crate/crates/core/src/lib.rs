//! Exact, lazy enumeration primitives: the zigzag pairing of `N` with
//! `N x N`, the infinite binary tree and its path sets, the truth-table list
//! of binary expansions, Cantor's diagonal complement with checkable
//! certificates, a small expression language for sequences and lists, and a
//! claim catalog that audits all of the above at finite depth.

pub mod audit;
pub mod bitseq;
pub mod budget;
pub mod diagonal;
pub mod endsl;
pub mod error;
pub mod listmatrix;
pub mod pairing;
pub mod tree;

pub use audit::{ClaimFailure, ClaimId, ClaimReport, Status, Witness};
pub use bitseq::{eq_prefix, Bit, BitSeq, BitString, DyadicInterval};
pub use budget::{Budget, DEFAULT_BUDGET};
pub use diagonal::{Certificate, Enumeration};
pub use endsl::{Ast, ParseError};
pub use error::{Error, Result};
pub use pairing::{GridPair, NodeAddr, Orientation, ZigzagIndex};

/// Every public operation, as `module::function`. The command-line frontend
/// is checked against this list.
pub const OPERATIONS: &[&str] = &[
    "pairing::zigzag_encode",
    "pairing::zigzag_decode",
    "pairing::level_pairs",
    "pairing::node_to_pair",
    "pairing::pair_to_node",
    "pairing::row_label",
    "bitseq::bit_at",
    "bitseq::prefix",
    "bitseq::complement",
    "bitseq::dyadic_bounds",
    "bitseq::eq_prefix",
    "tree::children",
    "tree::path_to_addr",
    "tree::paths_at_depth",
    "tree::prefix_chain",
    "tree::node_count",
    "listmatrix::entry",
    "listmatrix::row_seq",
    "listmatrix::submatrix_rows",
    "listmatrix::figure6_enumeration",
    "diagonal::antidiagonal",
    "diagonal::certificates",
    "diagonal::insert",
    "diagonal::split",
    "diagonal::interleave",
    "endsl::parse",
    "endsl::eval_seq",
    "endsl::eval_enum",
    "audit::run_claim",
    "audit::run_all",
];
