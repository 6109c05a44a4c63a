//! The infinite binary tree, its finite truncations and path sets.
//!
//! The tree is never materialized: a node is a [`NodeAddr`] and a path of
//! length `i` is a [`BitString`] whose bits are the branch labels taken from
//! the root (0 for the upper branch, 1 for the lower).

use num_bigint::BigUint;
use num_traits::One;

use crate::bitseq::{Bit, BitSeq, BitString};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::pairing::NodeAddr;

/// The 0-child and the 1-child of `a`.
pub fn children(a: &NodeAddr) -> (NodeAddr, NodeAddr) {
    let level = a.level() + 1;
    let zero = a.offset() << 1u8;
    let one = &zero + 1u32;
    (
        NodeAddr::new_unchecked(level, zero),
        NodeAddr::new_unchecked(level, one),
    )
}

/// The node a finite root path ends at.
pub fn path_to_addr(p: &BitString) -> NodeAddr {
    NodeAddr::new_unchecked(p.len() as u64, p.value_msb_first())
}

pub fn addr_to_path(a: &NodeAddr) -> BitString {
    BitString::from_value_msb_first(a.offset(), a.level())
}

/// `P_i`: all root paths of length `depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathSet {
    depth: u64,
}

impl PathSet {
    pub fn new(depth: u64) -> Result<Self> {
        if depth == 0 {
            return Err(Error::ZeroDepth);
        }
        Ok(PathSet { depth })
    }

    pub fn depth(self) -> u64 {
        self.depth
    }

    /// `|P_i| = 2^i`, without enumerating.
    pub fn len(self) -> BigUint {
        BigUint::one() << self.depth
    }

    pub fn iter(self, budget: Budget) -> Result<Paths> {
        budget.check_pow2(self.depth)?;
        Ok(Paths {
            depth: self.depth,
            next: 0,
            end: 1u64 << self.depth,
        })
    }
}

/// Iterator over the paths of one depth in offset order, `00…0` first.
#[derive(Debug, Clone)]
pub struct Paths {
    depth: u64,
    next: u64,
    end: u64,
}

impl Iterator for Paths {
    type Item = BitString;

    fn next(&mut self) -> Option<BitString> {
        if self.next == self.end {
            return None;
        }
        let v = self.next;
        self.next += 1;
        Some((0..self.depth).rev().map(|b| Bit::from(v >> b & 1 == 1)).collect())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Paths {}

pub fn paths_at_depth(i: u64, budget: Budget) -> Result<Paths> {
    PathSet::new(i)?.iter(budget)
}

/// `[prefix(s, 1), …, prefix(s, n)]`: the finite stages of an infinite path.
pub fn prefix_chain(s: &BitSeq, n: u64) -> Vec<BitString> {
    let mut out = Vec::with_capacity(n as usize);
    let mut cur = BitString::new();
    for i in 1..=n {
        cur.push(s.bit(i));
        out.push(cur.clone());
    }
    out
}

/// Nodes of the depth-`i` truncation, root excluded: `2^(i+1) - 2`.
pub fn node_count(i: u64) -> BigUint {
    (BigUint::one() << (i + 1)) - 2u32
}
