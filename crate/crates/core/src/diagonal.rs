//! Lists of infinite binary sequences, the diagonal complement, and the list
//! transforms (insert, split, interleave).
//!
//! Row `r` of a list is paired with diagonal position `r + 1`: the first
//! listed sequence contributes its first bit, and so on. Every certificate
//! records both numbers so the offset is never implicit.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bitseq::{Bit, BitSeq, BitString};

type RowFn = dyn Fn(&BigUint) -> BitSeq + Send + Sync;

enum ListRule {
    Figure5,
    Constant(BitSeq),
    Interleave(Enumeration, Enumeration),
    SplitEven(Enumeration),
    SplitOdd(Enumeration),
    Insert {
        source: Enumeration,
        at: BigUint,
        seq: BitSeq,
    },
    Custom {
        name: String,
        rule: Box<RowFn>,
    },
}

/// A total map from row indices `0, 1, 2, …` to sequences.
#[derive(Clone)]
pub struct Enumeration(Arc<ListRule>);

impl Enumeration {
    fn from_rule(rule: ListRule) -> Self {
        Enumeration(Arc::new(rule))
    }

    /// The truth-table list: row `r` is the binary expansion of `r`, least
    /// significant bit first.
    pub fn figure5() -> Self {
        Self::from_rule(ListRule::Figure5)
    }

    /// Every row is `s`.
    pub fn constant(s: BitSeq) -> Self {
        Self::from_rule(ListRule::Constant(s))
    }

    /// A list backed by an arbitrary rule. The rule must be deterministic.
    pub fn from_fn(
        name: impl Into<String>,
        rule: impl Fn(&BigUint) -> BitSeq + Send + Sync + 'static,
    ) -> Self {
        Self::from_rule(ListRule::Custom {
            name: name.into(),
            rule: Box::new(rule),
        })
    }

    pub fn row(&self, r: u64) -> BitSeq {
        self.row_big(&BigUint::from(r))
    }

    pub fn row_big(&self, r: &BigUint) -> BitSeq {
        match &*self.0 {
            ListRule::Figure5 => BitSeq::nat_row(r.clone()),
            ListRule::Constant(s) => s.clone(),
            ListRule::Interleave(even, odd) => {
                let (half, parity) = r.div_rem(&BigUint::from(2u8));
                if parity.to_u8() == Some(0) {
                    even.row_big(&half)
                } else {
                    odd.row_big(&half)
                }
            }
            ListRule::SplitEven(e) => e.row_big(&(r << 1u8)),
            ListRule::SplitOdd(e) => e.row_big(&((r << 1u8) + 1u8)),
            ListRule::Insert { source, at, seq } => match r.cmp(at) {
                std::cmp::Ordering::Less => source.row_big(r),
                std::cmp::Ordering::Equal => seq.clone(),
                std::cmp::Ordering::Greater => source.row_big(&(r - 1u8)),
            },
            ListRule::Custom { rule, .. } => rule(r),
        }
    }

    /// Where the list came from, in expression syntax for built-in rules.
    pub fn description(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Enumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            ListRule::Figure5 => f.write_str("figure5"),
            ListRule::Constant(s) => write!(f, "const({s})"),
            ListRule::Interleave(a, b) => write!(f, "interleave({a}, {b})"),
            ListRule::SplitEven(e) => write!(f, "spliteven({e})"),
            ListRule::SplitOdd(e) => write!(f, "splitodd({e})"),
            ListRule::Insert { source, at, seq } => write!(f, "insert({source}, {at}, {seq})"),
            ListRule::Custom { name, .. } => f.write_str(name),
        }
    }
}

impl fmt::Debug for Enumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Enumeration").field(&self.to_string()).finish()
    }
}

/// The sequence whose `j`-th bit flips the `j`-th bit of row `j - 1`.
pub fn antidiagonal(e: &Enumeration) -> BitSeq {
    BitSeq::antidiagonal_of(e.clone())
}

/// Evidence that the diagonal complement differs from one listed row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Certificate {
    pub row: u64,
    pub position: u64,
    /// Bit of the diagonal complement at `position`.
    pub left_bit: Bit,
    /// Bit of row `row` at `position`.
    pub right_bit: Bit,
}

impl Certificate {
    /// Rechecks the certificate against `diagonal` and `list` using only
    /// position lookups.
    pub fn revalidate(&self, diagonal: &BitSeq, list: &Enumeration) -> bool {
        self.position == self.row + 1
            && self.left_bit != self.right_bit
            && diagonal.bit_at(self.position) == Ok(self.left_bit)
            && list.row(self.row).bit_at(self.position) == Ok(self.right_bit)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} position {}: diagonal {} vs row {}",
            self.row, self.position, self.left_bit, self.right_bit
        )
    }
}

/// One certificate per row `r < upto`.
pub fn certificates(e: &Enumeration, upto: u64) -> Vec<Certificate> {
    let diagonal = antidiagonal(e);
    (0..upto)
        .map(|row| {
            let position = row + 1;
            Certificate {
                row,
                position,
                left_bit: diagonal.bit(position),
                right_bit: e.row(row).bit(position),
            }
        })
        .collect()
}

/// `s` placed at row `k`; rows at and after `k` move down by one.
pub fn insert(e: &Enumeration, k: impl Into<BigUint>, s: &BitSeq) -> Enumeration {
    Enumeration::from_rule(ListRule::Insert {
        source: e.clone(),
        at: k.into(),
        seq: s.clone(),
    })
}

/// Even rows and odd rows, each reindexed from 0.
pub fn split(e: &Enumeration) -> (Enumeration, Enumeration) {
    (
        Enumeration::from_rule(ListRule::SplitEven(e.clone())),
        Enumeration::from_rule(ListRule::SplitOdd(e.clone())),
    )
}

/// Rows of `even` at even indices and rows of `odd` at odd indices.
pub fn interleave(even: &Enumeration, odd: &Enumeration) -> Enumeration {
    Enumeration::from_rule(ListRule::Interleave(even.clone(), odd.clone()))
}

/// Outcome of comparing the two halves of a split list at a finite depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitDisjointness {
    /// No even-half prefix equals an odd-half prefix among the rows checked.
    Disjoint { rows: u64, prefix: u64 },
    /// Two rows share a prefix; disjointness is not settled at this depth.
    Undecided {
        even_row: u64,
        odd_row: u64,
        prefix: BitString,
    },
}

/// Compares prefixes of length `prefix` across the even and odd halves of
/// the first `rows` rows of `e`. Reported row numbers index into `e`.
pub fn split_disjointness(e: &Enumeration, rows: u64, prefix: u64) -> SplitDisjointness {
    use std::collections::HashMap;

    let mut evens: HashMap<BitString, u64> = HashMap::new();
    for r in (0..rows).step_by(2) {
        evens.entry(e.row(r).prefix(prefix)).or_insert(r);
    }
    for r in (1..rows).step_by(2) {
        let p = e.row(r).prefix(prefix);
        if let Some(&even_row) = evens.get(&p) {
            return SplitDisjointness::Undecided {
                even_row,
                odd_row: r,
                prefix: p,
            };
        }
    }
    SplitDisjointness::Disjoint { rows, prefix }
}
