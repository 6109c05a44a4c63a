//! The zigzag bijection between `N` and `N x N`, and the projection of
//! binary-tree levels onto grid anti-diagonals.
//!
//! The walk starts at `(0, 0)` and visits anti-diagonals `m + n = d` in
//! increasing `d`. Even diagonals run from `(0, d)` to `(d, 0)`, odd ones from
//! `(d, 0)` to `(0, d)`:
//!
//! ```text
//! (0,0) (1,0) (0,1) (0,2) (1,1) (2,0) (3,0) ...
//!   0     1     2     3     4     5     6
//! ```
//!
//! All indices are arbitrary precision. Small inputs take a `u128` fast path.

use std::fmt;

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};

/// A point `(m, n)` of the grid; `m` is the column, `n` the row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPair {
    pub m: BigUint,
    pub n: BigUint,
}

impl GridPair {
    pub fn new(m: impl Into<BigUint>, n: impl Into<BigUint>) -> Self {
        GridPair {
            m: m.into(),
            n: n.into(),
        }
    }

    /// Index `m + n` of the anti-diagonal through this point.
    pub fn diagonal(&self) -> BigUint {
        &self.m + &self.n
    }
}

impl fmt::Display for GridPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// Position along the zigzag walk, starting at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZigzagIndex(pub BigUint);

impl From<u64> for ZigzagIndex {
    fn from(v: u64) -> Self {
        ZigzagIndex(BigUint::from(v))
    }
}

impl fmt::Display for ZigzagIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A node of the infinite binary tree: `level` 0 is the root, and
/// `offset < 2^level` counts nodes of that level from the 0-branch side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeAddr {
    level: u64,
    offset: BigUint,
}

impl NodeAddr {
    pub fn new(level: u64, offset: impl Into<BigUint>) -> Result<Self> {
        let offset = offset.into();
        if offset.bits() > level {
            return Err(Error::InvalidNode { level, offset });
        }
        Ok(NodeAddr { level, offset })
    }

    pub fn root() -> Self {
        NodeAddr {
            level: 0,
            offset: BigUint::zero(),
        }
    }

    pub(crate) fn new_unchecked(level: u64, offset: BigUint) -> Self {
        debug_assert!(offset.bits() <= level);
        NodeAddr { level, offset }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn offset(&self) -> &BigUint {
        &self.offset
    }
}

impl fmt::Display for NodeAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(level {}, offset {})", self.level, self.offset)
    }
}

/// Which end of its anti-diagonal a level's last node lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `(k, j) -> (j, 2^k - 1 - j)`: offsets follow the listed pair order.
    Listed,
    /// `(k, j) -> (2^k - 1 - j, j)`: the all-ones path climbs the `m = 0` column.
    Mirrored,
}

/// Coordinates below this bound keep `d (d + 1)` inside a `u128`.
const SMALL: u64 = 1 << 62;

fn triangular(d: &BigUint) -> BigUint {
    (d * (d + 1u32)) >> 1u8
}

/// Position of `p` on the zigzag walk.
pub fn zigzag_encode(p: &GridPair) -> ZigzagIndex {
    if let (Some(m), Some(n)) = (p.m.to_u64(), p.n.to_u64()) {
        if m < SMALL && n < SMALL {
            let (m, n) = (m as u128, n as u128);
            let d = m + n;
            let along = if d % 2 == 0 { m } else { n };
            return ZigzagIndex(BigUint::from(d * (d + 1) / 2 + along));
        }
    }
    let d = p.diagonal();
    let along = if d.is_even() { &p.m } else { &p.n };
    ZigzagIndex(triangular(&d) + along)
}

/// Inverse of [`zigzag_encode`].
pub fn zigzag_decode(i: &ZigzagIndex) -> GridPair {
    if let Some(i) = i.0.to_u64() {
        let i = i as u128;
        // 8i + 1 < 2^67, so the square root and T(d) stay inside u128.
        let d = ((8 * i + 1).sqrt() - 1) / 2;
        let r = i - d * (d + 1) / 2;
        let (m, n) = if d.is_multiple_of(2) { (r, d - r) } else { (d - r, r) };
        return GridPair::new(m, n);
    }
    let d = ((&i.0 * 8u32 + 1u32).sqrt() - 1u32) >> 1u8;
    let r = &i.0 - triangular(&d);
    let other = &d - &r;
    if d.is_even() {
        GridPair { m: r, n: other }
    } else {
        GridPair { m: other, n: r }
    }
}

/// The `2^k` grid pairs of tree level `k`, in listed order
/// `(0, 2^k - 1), (1, 2^k - 2), …, (2^k - 1, 0)`.
pub fn level_pairs(k: u64, budget: Budget) -> Result<Vec<GridPair>> {
    budget.check_pow2(k)?;
    let top = (1u64 << k) - 1;
    Ok((0..=top).map(|j| GridPair::new(j, top - j)).collect())
}

pub fn node_to_pair(a: &NodeAddr) -> GridPair {
    node_to_pair_oriented(a, Orientation::Listed)
}

pub fn node_to_pair_oriented(a: &NodeAddr, orientation: Orientation) -> GridPair {
    let top = (BigUint::one() << a.level) - 1u32;
    let other = top - &a.offset;
    match orientation {
        Orientation::Listed => GridPair {
            m: a.offset.clone(),
            n: other,
        },
        Orientation::Mirrored => GridPair {
            m: other,
            n: a.offset.clone(),
        },
    }
}

/// The tree node projected onto `p`, or `None` for grid points off the
/// anti-diagonals `m + n = 2^k - 1`.
pub fn pair_to_node(p: &GridPair) -> Option<NodeAddr> {
    let width = p.diagonal() + 1u32;
    if width.count_ones() != 1 {
        return None;
    }
    Some(NodeAddr::new_unchecked(width.bits() - 1, p.m.clone()))
}

/// Number of walk elements strictly before the first element of row `i`.
pub fn row_label(i: impl Into<BigUint>) -> BigUint {
    zigzag_encode(&GridPair::new(0u32, i)).0
}

/// Step-by-step simulation of the zigzag walk over fixed-width coordinates.
///
/// Unlike [`zigzag_encode`] this never uses the triangular-number formula:
/// each step is a local move on the grid.
#[derive(Debug, Clone, Default)]
pub struct ZigzagWalk {
    next: Option<(u64, u64)>,
    started: bool,
}

impl ZigzagWalk {
    pub fn new() -> Self {
        ZigzagWalk::default()
    }
}

impl Iterator for ZigzagWalk {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        if !self.started {
            self.started = true;
            self.next = Some((0, 0));
        }
        let (m, n) = self.next?;
        let even = (m + n) % 2 == 0;
        self.next = match (even, m, n) {
            // even diagonals head towards (d, 0); at the end step right
            (true, _, 0) => m.checked_add(1).map(|m| (m, 0)),
            (true, _, _) => Some((m + 1, n - 1)),
            // odd diagonals head towards (0, d); at the end step down
            (false, 0, _) => n.checked_add(1).map(|n| (0, n)),
            (false, _, _) => Some((m - 1, n + 1)),
        };
        Some((m, n))
    }
}
