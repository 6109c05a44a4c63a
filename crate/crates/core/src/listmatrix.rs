//! The truth-table matrix and its zigzag row labels.
//!
//! Entry `(r, c)` is bit `c` of `r`. Read down column `c` the entries repeat
//! `2^c` zeros followed by `2^c` ones; read along row `r` they spell `r` in
//! binary, least significant bit first. The first `2^i` rows cut to their
//! first `i` columns are therefore every length-`i` bit string exactly once.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::bitseq::{Bit, BitSeq, BitString};
use crate::budget::Budget;
use crate::diagonal::Enumeration;
use crate::error::{Error, Result};
use crate::pairing::row_label;

pub fn entry(r: u64, c: u64) -> Bit {
    if c >= 64 {
        Bit::Zero
    } else {
        Bit::from(r >> c & 1 == 1)
    }
}

pub fn entry_big(r: &BigUint, c: u64) -> Bit {
    Bit::from(r.bit(c))
}

/// Row `r` as a sequence: bit `i` is `entry(r, i - 1)`.
pub fn row_seq(r: impl Into<BigUint>) -> BitSeq {
    BitSeq::nat_row(r)
}

pub fn figure5() -> Enumeration {
    Enumeration::figure5()
}

/// Prefixes of length `i` of the first `2^i` rows.
pub fn submatrix_rows(i: u64, budget: Budget) -> Result<BTreeSet<BitString>> {
    if i == 0 {
        return Err(Error::ZeroDepth);
    }
    budget.check_pow2(i)?;
    Ok((0..1u64 << i)
        .map(|r| (0..i).map(|c| entry(r, c)).collect())
        .collect())
}

/// The matrix rows paired with their zigzag labels.
#[derive(Debug, Clone)]
pub struct LabeledEnumeration {
    rows: Enumeration,
}

impl LabeledEnumeration {
    pub fn rows(&self) -> &Enumeration {
        &self.rows
    }

    pub fn row(&self, i: u64) -> BitSeq {
        self.rows.row(i)
    }

    pub fn label(&self, i: u64) -> BigUint {
        row_label(i)
    }
}

pub fn figure6_enumeration() -> LabeledEnumeration {
    LabeledEnumeration { rows: figure5() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::paths_at_depth;

    #[test]
    fn entry_examples() {
        assert_eq!(entry(5, 0), Bit::One);
        assert_eq!(entry(16, 4), Bit::One);
        assert!((0..16).all(|r| entry(r, 4) == Bit::Zero));
        assert!((0..=64).all(|c| entry(0, c) == Bit::Zero));
        assert_eq!(entry(u64::MAX, 63), Bit::One);
    }

    #[test]
    fn columns_repeat_blocks() {
        for c in 0..6u64 {
            let block = 1u64 << c;
            for r in 0..512u64 {
                let expected = Bit::from((r / block) % 2 == 1);
                assert_eq!(entry(r, c), expected);
            }
        }
    }

    #[test]
    fn row_seq_examples() {
        assert_eq!(row_seq(0u32).prefix(5).to_string(), "00000");
        assert_eq!(row_seq(6u32).prefix(4).to_string(), "0110");
        assert_eq!(row_seq(11u32).prefix(5).to_string(), "11010");
        assert_eq!(row_seq(11u32).support_hint(), Some(4));
    }

    #[test]
    fn big_rows_agree() {
        for r in [0u64, 1, 77, 1 << 40, u64::MAX] {
            for c in 0..70 {
                assert_eq!(entry(r, c), entry_big(&BigUint::from(r), c));
            }
        }
    }

    #[test]
    fn submatrix_examples() {
        let b = Budget::default();
        let s1: Vec<String> = submatrix_rows(1, b).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(s1, ["0", "1"]);
        assert_eq!(submatrix_rows(3, b).unwrap().len(), 8);
        assert_eq!(submatrix_rows(12, b).unwrap().len(), 4096);
        assert_eq!(submatrix_rows(0, b).unwrap_err(), Error::ZeroDepth);
        assert!(submatrix_rows(30, b).is_err());
    }

    #[test]
    fn submatrix_matches_paths() {
        let b = Budget::default();
        for i in 1..=12 {
            let paths: BTreeSet<BitString> = paths_at_depth(i, b).unwrap().collect();
            assert_eq!(submatrix_rows(i, b).unwrap(), paths);
        }
    }

    #[test]
    fn diagonal_entries_are_zero() {
        assert!((0..10_000u64).all(|i| entry(i, i) == Bit::Zero));
    }

    #[test]
    fn labels() {
        let f6 = figure6_enumeration();
        let got: Vec<BigUint> = (0..7).map(|i| f6.label(i)).collect();
        let want: Vec<BigUint> = [0u32, 2, 3, 9, 10, 20, 21].map(BigUint::from).to_vec();
        assert_eq!(got, want);
        assert_eq!(f6.label(8), BigUint::from(36u32));
        assert_eq!(f6.row(9).prefix(8), row_seq(9u32).prefix(8));
    }
}
