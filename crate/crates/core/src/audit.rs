//! Executable claim catalog.
//!
//! Each claim with finitely checkable content is run at a caller-chosen
//! depth and reported as verified at that depth, refuted with witnesses, or
//! not settled by a finite check. A verified report says nothing beyond the
//! depth it was run at.
//!
//! Depth semantics per claim:
//!
//! | claim | checked at depth `d` |
//! |-------|----------------------|
//! | C1  | tree levels `0..=d` |
//! | C2  | anti-diagonals `0..d` |
//! | C3, C4, C8 | path depths `1..=d` |
//! | C5  | levels `0..=d` of the all-ones path |
//! | C6  | rows `0..d` of each battery list |
//! | C7  | prefix length `d` over the first `min(2^d, 4096)` rows |
//! | C9  | rows `0..2^d` |
//! | C10 | rows `0..d` |
//!
//! Witnesses name lists by their expression text, so [`recheck`] can rebuild
//! everything it needs from the witness alone.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::bitseq::{eq_prefix, Bit, BitSeq, BitString};
use crate::budget::Budget;
use crate::diagonal::{self, Enumeration, SplitDisjointness};
use crate::endsl;
use crate::error::{Error, Result};
use crate::listmatrix::{self, entry, row_seq};
use crate::pairing::{
    level_pairs, node_to_pair, node_to_pair_oriented, row_label, zigzag_decode, zigzag_encode,
    GridPair, NodeAddr, Orientation, ZigzagWalk,
};
use crate::tree::{self, node_count, path_to_addr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
    ];

    /// One-line statement of what the claim asserts.
    pub fn anchor(self) -> &'static str {
        match self {
            ClaimId::C1 => "tree projection: distinct tree nodes land on distinct grid points, level k on the anti-diagonal m+n = 2^k-1",
            ClaimId::C2 => "zigzag walk: a bijection between the naturals and grid pairs, each anti-diagonal filling a contiguous index range",
            ClaimId::C3 => "path endings: the endpoints of all paths of length 1..i are exactly the non-root nodes of the depth-i tree",
            ClaimId::C4 => "path counting: |P_t| = 2^t and the total over t <= i equals the 2^(i+1)-2 non-root nodes",
            ClaimId::C5 => "all-ones path: at level k it sits at (0, 2^k-1), whose inclusive column distance from (0, 0) is |G_k| = 2^k",
            ClaimId::C6 => "diagonal complement: differs from every listed row at the row's own diagonal position",
            ClaimId::C7 => "odd/even split: the two halves of a list share no sequence",
            ClaimId::C8 => "truth-table submatrix: the first 2^i rows cut to i columns are every length-i path exactly once",
            ClaimId::C9 => "matrix completeness: the truth-table list contains every infinite path (refuted: the all-ones path is missing)",
            ClaimId::C10 => "row labels: the zigzag label of row i counts the walk elements before the row's first element",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Claims that make no statement a finite computation can settle.
pub const NOT_FINITELY_CHECKABLE: &[(&str, &str)] = &[
    (
        "complete-list hypothesis",
        "asserts a list holding every infinite path; quantifies over an infinite set. C9 refutes the truth-table matrix as such a list.",
    ),
    (
        "countable path set",
        "asserts the infinite paths are equinumerous with the naturals; only the finite counting content (C3, C4, C5) is checked.",
    ),
    (
        "union bound over all depths",
        "an inequality over the union of every path set; its finite instances are C4.",
    ),
    (
        "matrix upper bound",
        "bounds the path set by the elements on the zigzag line; an infinite comparison with no finite instance.",
    ),
    (
        "list form argument",
        "a meta-level inference about which forms a complete list may take; there is no construction to run.",
    ),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Refuted,
    NotFinitelyCheckable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::NotFinitelyCheckable => "not_finitely_checkable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Grid position of the all-ones path at one level, under both orientations.
    Trace {
        level: u64,
        listed: (u64, u64),
        mirrored: (u64, u64),
        inclusive_distance: u64,
        level_size: u64,
    },
    /// A diagonal certificate for one row of a list.
    Certificate {
        list: String,
        row: u64,
        position: u64,
        diagonal_bit: Bit,
        row_bit: Bit,
    },
    /// Two rows from opposite halves of a split that agree on a prefix.
    Collision {
        list: String,
        even_row: u64,
        odd_row: u64,
        prefix: BitString,
    },
    /// A matrix row that leaves the all-ones path at `position`.
    Disagreement {
        row: u64,
        position: u64,
        row_bit: Bit,
        path_bit: Bit,
    },
    /// Two sequences that agree on their first `prefix` bits.
    PrefixAgreement {
        left: String,
        right: String,
        prefix: u64,
    },
    /// A failed instance of a check expected to hold.
    Counterexample { detail: String },
}

fn ms<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub anchor: String,
    pub depth: u64,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    #[serde(rename = "elapsed_ms", serialize_with = "ms")]
    pub elapsed: Duration,
}

/// A claim that could not be run, e.g. because the depth exceeds the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimFailure {
    pub claim: ClaimId,
    pub depth: u64,
    pub error: Error,
}

/// The lists diagonal certificates are checked on, in expression syntax.
pub const BATTERY: [&str; 5] = [
    "const(zeros)",
    "figure5",
    "interleave(const(ones), const(zeros))",
    "interleave(figure5, const(periodic(01)))",
    "insert(figure5, 1, diagc(figure5))",
];

/// Lists whose split halves are compared for C7.
pub const SPLIT_BATTERY: [&str; 2] = ["figure5", "insert(figure5, 1, diagc(figure5))"];

const SPLIT_ROW_CAP: u64 = 4096;
const DIAGONAL_PREFIX: u64 = 256;

fn list(text: &str) -> Enumeration {
    endsl::eval_enum(&endsl::parse_enum(text).expect("built-in list parses"))
}

fn seq(text: &str) -> Option<BitSeq> {
    endsl::parse_seq(text).ok().map(|s| endsl::eval_seq(&s))
}

fn u(v: &BigUint) -> u64 {
    v.to_u64().expect("audited coordinates fit in u64")
}

struct Outcome {
    status: Status,
    witnesses: Vec<Witness>,
}

impl Outcome {
    fn verified(witnesses: Vec<Witness>) -> Self {
        Outcome {
            status: Status::Verified,
            witnesses,
        }
    }

    fn broken(detail: String) -> Self {
        Outcome {
            status: Status::Refuted,
            witnesses: vec![Witness::Counterexample { detail }],
        }
    }
}

/// Runs one claim at `depth`.
pub fn run_claim(id: ClaimId, depth: u64, budget: Budget) -> Result<ClaimReport> {
    let start = Instant::now();
    let outcome = match id {
        ClaimId::C1 => projection_injective(depth, budget)?,
        ClaimId::C2 => zigzag_bijective(depth, budget)?,
        ClaimId::C3 => endings_cover(depth, budget)?,
        ClaimId::C4 => counting_identity(depth, budget)?,
        ClaimId::C5 => all_ones_trace(depth, budget)?,
        ClaimId::C6 => diagonal_certificates(depth, budget)?,
        ClaimId::C7 => split_disjoint(depth, budget)?,
        ClaimId::C8 => submatrix_coverage(depth, budget)?,
        ClaimId::C9 => matrix_incomplete(depth, budget)?,
        ClaimId::C10 => row_labels(depth, budget)?,
    };
    Ok(ClaimReport {
        claim: id,
        anchor: id.anchor().to_string(),
        depth,
        status: outcome.status,
        witnesses: outcome.witnesses,
        elapsed: start.elapsed(),
    })
}

/// Runs C1 through C10 in parallel; results come back in catalog order.
pub fn run_all(depth: u64, budget: Budget) -> Vec<Result<ClaimReport, ClaimFailure>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = ClaimId::ALL
            .into_iter()
            .map(|id| scope.spawn(move || (id, run_claim(id, depth, budget))))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                let (claim, result) = h.join().expect("claim runner panicked");
                result.map_err(|error| ClaimFailure {
                    claim,
                    depth,
                    error,
                })
            })
            .collect()
    })
}

fn projection_injective(depth: u64, budget: Budget) -> Result<Outcome> {
    budget.check(&(node_count(depth) + 1u32))?;
    let mut seen = HashSet::new();
    for level in 0..=depth {
        let diagonal = (BigUint::one() << level) - 1u32;
        for offset in 0..1u64 << level {
            let a = NodeAddr::new(level, offset)?;
            let p = node_to_pair(&a);
            if p.diagonal() != diagonal {
                return Ok(Outcome::broken(format!("{a} maps to {p}, off its anti-diagonal")));
            }
            if !seen.insert(p.clone()) {
                return Ok(Outcome::broken(format!("{a} maps to {p}, already taken")));
            }
        }
    }
    Ok(Outcome::verified(vec![]))
}

fn zigzag_bijective(depth: u64, budget: Budget) -> Result<Outcome> {
    let total = BigUint::from(depth) * (depth + 1) / 2u32;
    budget.check(&total)?;
    for d in 0..depth {
        let first = BigUint::from(d) * (d + 1) / 2u32;
        let mut indices = Vec::with_capacity(d as usize + 1);
        for m in 0..=d {
            let p = GridPair::new(m, d - m);
            let i = zigzag_encode(&p);
            if zigzag_decode(&i) != p {
                return Ok(Outcome::broken(format!("{p} encodes to {i} which decodes elsewhere")));
            }
            indices.push(i.0);
        }
        indices.sort();
        let expected = (0..=d).map(|k| &first + k);
        if !indices.iter().cloned().eq(expected) {
            return Ok(Outcome::broken(format!("diagonal {d} does not fill [{first}, {first} + {d}]")));
        }
    }
    Ok(Outcome::verified(vec![]))
}

fn endings_cover(depth: u64, budget: Budget) -> Result<Outcome> {
    budget.check(&node_count(depth))?;
    let mut endings = HashSet::new();
    for t in 1..=depth {
        for p in tree::paths_at_depth(t, budget)? {
            endings.insert(path_to_addr(&p));
        }
    }
    let mut expected = 0u64;
    for level in 1..=depth {
        for offset in 0..1u64 << level {
            expected += 1;
            let a = NodeAddr::new(level, offset)?;
            if !endings.contains(&a) {
                return Ok(Outcome::broken(format!("no path ends at {a}")));
            }
        }
    }
    if endings.len() as u64 != expected {
        return Ok(Outcome::broken(format!(
            "{} distinct endings for {expected} non-root nodes",
            endings.len()
        )));
    }
    Ok(Outcome::verified(vec![]))
}

fn counting_identity(depth: u64, budget: Budget) -> Result<Outcome> {
    budget.check(&node_count(depth))?;
    let mut total = BigUint::from(0u32);
    for t in 1..=depth {
        let set = tree::PathSet::new(t)?;
        let counted = BigUint::from(set.iter(budget)?.count());
        if counted != set.len() {
            return Ok(Outcome::broken(format!("|P_{t}| enumerates to {counted}, not {}", set.len())));
        }
        total += counted;
    }
    if total != node_count(depth) {
        return Ok(Outcome::broken(format!(
            "paths total {total} but the tree has {} non-root nodes",
            node_count(depth)
        )));
    }
    Ok(Outcome::verified(vec![]))
}

fn all_ones_trace(depth: u64, budget: Budget) -> Result<Outcome> {
    budget.check(&(node_count(depth) + 1u32))?;
    let ones = BitSeq::ones();
    let mut witnesses = Vec::new();
    for k in 0..=depth {
        let node = path_to_addr(&ones.prefix(k));
        let listed = node_to_pair_oriented(&node, Orientation::Listed);
        let mirrored = node_to_pair_oriented(&node, Orientation::Mirrored);
        let top = (1u64 << k) - 1;
        if mirrored != GridPair::new(0u32, top) {
            return Ok(Outcome::broken(format!("level {k}: all-ones node at {mirrored}")));
        }
        // lattice points on the column segment from (0, 0) to (0, 2^k - 1)
        let inclusive_distance = u(&mirrored.n) + 1;
        let level_size = level_pairs(k, budget)?.len() as u64;
        if inclusive_distance != level_size {
            return Ok(Outcome::broken(format!(
                "level {k}: distance {inclusive_distance} but |G_k| = {level_size}"
            )));
        }
        witnesses.push(Witness::Trace {
            level: k,
            listed: (u(&listed.m), u(&listed.n)),
            mirrored: (u(&mirrored.m), u(&mirrored.n)),
            inclusive_distance,
            level_size,
        });
    }
    Ok(Outcome::verified(witnesses))
}

fn diagonal_certificates(depth: u64, budget: Budget) -> Result<Outcome> {
    budget.check(&(BigUint::from(depth) * BATTERY.len()))?;
    let mut witnesses = Vec::new();
    for text in BATTERY {
        let e = list(text);
        let diag = diagonal::antidiagonal(&e);
        for c in diagonal::certificates(&e, depth) {
            if !c.revalidate(&diag, &e) {
                return Ok(Outcome::broken(format!("{text}: certificate {c} does not revalidate")));
            }
            witnesses.push(Witness::Certificate {
                list: text.to_string(),
                row: c.row,
                position: c.position,
                diagonal_bit: c.left_bit,
                row_bit: c.right_bit,
            });
        }
    }
    Ok(Outcome::verified(witnesses))
}

fn split_disjoint(depth: u64, budget: Budget) -> Result<Outcome> {
    let rows = if depth >= 12 {
        SPLIT_ROW_CAP
    } else {
        (1u64 << depth).min(SPLIT_ROW_CAP)
    };
    budget.check_count(rows * SPLIT_BATTERY.len() as u64)?;
    let mut witnesses = Vec::new();
    for text in SPLIT_BATTERY {
        if let SplitDisjointness::Undecided {
            even_row,
            odd_row,
            prefix,
        } = diagonal::split_disjointness(&list(text), rows, depth)
        {
            witnesses.push(Witness::Collision {
                list: text.to_string(),
                even_row,
                odd_row,
                prefix,
            });
        }
    }
    Ok(if witnesses.is_empty() {
        Outcome::verified(vec![])
    } else {
        Outcome {
            status: Status::NotFinitelyCheckable,
            witnesses,
        }
    })
}

fn submatrix_coverage(depth: u64, budget: Budget) -> Result<Outcome> {
    budget.check(&node_count(depth))?;
    for i in 1..=depth {
        let rows = listmatrix::submatrix_rows(i, budget)?;
        if rows.len() as u64 != 1u64 << i {
            return Ok(Outcome::broken(format!("depth {i}: {} distinct rows", rows.len())));
        }
        let paths: BTreeSet<BitString> = tree::paths_at_depth(i, budget)?.collect();
        if rows != paths {
            return Ok(Outcome::broken(format!("depth {i}: rows differ from the path set")));
        }
    }
    Ok(Outcome::verified(vec![]))
}

fn matrix_incomplete(depth: u64, budget: Budget) -> Result<Outcome> {
    budget.check_pow2(depth)?;
    let ones = BitSeq::ones();
    let mut witnesses = Vec::with_capacity((1usize << depth) + 1);
    for r in 0..1u64 << depth {
        let bound = u64::from(64 - r.leading_zeros()) + 1;
        let row = row_seq(r);
        match eq_prefix(&row, &ones, bound) {
            Some(position) => witnesses.push(Witness::Disagreement {
                row: r,
                position,
                row_bit: row.bit(position),
                path_bit: Bit::One,
            }),
            None => {
                return Ok(Outcome {
                    status: Status::NotFinitelyCheckable,
                    witnesses: vec![Witness::Counterexample {
                        detail: format!("row {r} agrees with the all-ones path on {bound} bits"),
                    }],
                })
            }
        }
    }
    let diag_text = "diagc(figure5)";
    let diag = seq(diag_text).expect("built-in sequence parses");
    if let Some(p) = eq_prefix(&diag, &ones, DIAGONAL_PREFIX) {
        return Ok(Outcome::broken(format!("{diag_text} leaves the all-ones path at {p}")));
    }
    witnesses.push(Witness::PrefixAgreement {
        left: diag_text.to_string(),
        right: "ones".to_string(),
        prefix: DIAGONAL_PREFIX,
    });
    Ok(Outcome {
        status: Status::Refuted,
        witnesses,
    })
}

fn row_labels(depth: u64, budget: Budget) -> Result<Outcome> {
    budget.check(&(BigUint::from(depth) * (depth + 1) / 2u32))?;
    let mut walked = vec![None; depth as usize];
    let mut found = 0;
    if depth > 0 {
        for (step, (m, n)) in ZigzagWalk::new().enumerate() {
            if m == 0 && n < depth {
                walked[n as usize] = Some(step as u64);
                found += 1;
                if found == depth {
                    break;
                }
            }
        }
    }
    for (i, w) in walked.into_iter().enumerate() {
        let closed = row_label(i as u64);
        if w.map(BigUint::from) != Some(closed.clone()) {
            return Ok(Outcome::broken(format!("row {i}: closed form {closed}, walk {w:?}")));
        }
    }
    Ok(Outcome::verified(vec![]))
}

/// Rechecks a witness using only public operations of the other modules.
pub fn recheck(w: &Witness) -> bool {
    match w {
        Witness::Trace {
            level,
            listed,
            mirrored,
            inclusive_distance,
            level_size,
        } => {
            let Ok(node) = NodeAddr::new(*level, (BigUint::one() << *level) - 1u32) else {
                return false;
            };
            node_to_pair_oriented(&node, Orientation::Listed) == GridPair::new(listed.0, listed.1)
                && node_to_pair_oriented(&node, Orientation::Mirrored)
                    == GridPair::new(mirrored.0, mirrored.1)
                && mirrored.0 == 0
                && *inclusive_distance == mirrored.1 + 1
                && *level_size == 1u64 << level
        }
        Witness::Certificate {
            list,
            row,
            position,
            diagonal_bit,
            row_bit,
        } => {
            let Ok(ast) = endsl::parse_enum(list) else {
                return false;
            };
            let e = endsl::eval_enum(&ast);
            let diag = diagonal::antidiagonal(&e);
            *position == row + 1
                && diagonal_bit != row_bit
                && diag.bit_at(*position) == Ok(*diagonal_bit)
                && e.row(*row).bit_at(*position) == Ok(*row_bit)
        }
        Witness::Collision {
            list,
            even_row,
            odd_row,
            prefix,
        } => {
            let Ok(ast) = endsl::parse_enum(list) else {
                return false;
            };
            let e = endsl::eval_enum(&ast);
            let n = prefix.len() as u64;
            even_row % 2 == 0
                && odd_row % 2 == 1
                && e.row(*even_row).prefix(n) == *prefix
                && e.row(*odd_row).prefix(n) == *prefix
        }
        Witness::Disagreement {
            row,
            position,
            row_bit,
            path_bit,
        } => {
            *position >= 1
                && row_bit != path_bit
                && entry(*row, position - 1) == *row_bit
                && BitSeq::ones().bit_at(*position) == Ok(*path_bit)
        }
        Witness::PrefixAgreement { left, right, prefix } => match (seq(left), seq(right)) {
            (Some(a), Some(b)) => eq_prefix(&a, &b, *prefix).is_none(),
            _ => false,
        },
        Witness::Counterexample { .. } => false,
    }
}
