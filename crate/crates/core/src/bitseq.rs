//! Total, lazily evaluated infinite binary sequences.
//!
//! A [`BitSeq`] is a rule from 1-based positions to bits. Nothing is ever
//! materialized beyond the positions a caller asks for, so sequences can be
//! composed freely (complemented, prefixed, read off a list's diagonal) and
//! evaluated at arbitrarily distant positions.
//!
//! Sequences are compared only through finite prefixes ([`eq_prefix`]);
//! equality of two infinite sequences is not decidable in general and is not
//! offered. Dyadic rationals with two expansions (`0.0111…` and `0.1000…`)
//! are distinct sequences here.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::diagonal::Enumeration;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub fn flip(self) -> Bit {
        match self {
            Bit::Zero => Bit::One,
            Bit::One => Bit::Zero,
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }

    pub fn is_one(self) -> bool {
        self == Bit::One
    }
}

impl From<bool> for Bit {
    fn from(b: bool) -> Self {
        if b {
            Bit::One
        } else {
            Bit::Zero
        }
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

impl Serialize for Bit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.as_u8())
    }
}

/// A finite string of bits, written first bit first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: Vec<Bit>,
}

impl BitString {
    pub fn new() -> Self {
        BitString::default()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[Bit] {
        &self.bits
    }

    pub fn push(&mut self, bit: Bit) {
        self.bits.push(bit);
    }

    /// `self` followed by `bit`.
    pub fn with(&self, bit: Bit) -> BitString {
        let mut out = self.clone();
        out.push(bit);
        out
    }

    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        other.bits.starts_with(&self.bits)
    }

    /// The string read as a binary numeral, first bit most significant.
    pub fn value_msb_first(&self) -> BigUint {
        let mut v = BigUint::zero();
        for b in &self.bits {
            v <<= 1u8;
            if b.is_one() {
                v += 1u8;
            }
        }
        v
    }

    /// The `width` low bits of `value`, most significant first.
    pub fn from_value_msb_first(value: &BigUint, width: u64) -> BitString {
        (0..width).rev().map(|i| Bit::from(value.bit(i))).collect()
    }
}

impl FromIterator<Bit> for BitString {
    fn from_iter<I: IntoIterator<Item = Bit>>(iter: I) -> Self {
        BitString {
            bits: iter.into_iter().collect(),
        }
    }
}

impl FromStr for BitString {
    type Err = char;

    /// Parses a string of `0`/`1` characters; the error is the first other character.
    fn from_str(s: &str) -> std::result::Result<Self, char> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(Bit::Zero),
                '1' => Ok(Bit::One),
                other => Err(other),
            })
            .collect()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug)]
enum Rule {
    Zeros,
    Ones,
    Periodic(BitString),
    NatRow(BigUint),
    Complement(BitSeq),
    Prepend(BitString, BitSeq),
    Antidiagonal(Enumeration),
}

/// What is statically known about a sequence's tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tail {
    /// Every bit after the bound equals the given bit.
    Constant(Bit, u64),
    Unknown,
}

/// An infinite binary sequence `f1 f2 f3 …`, evaluated on demand.
#[derive(Debug, Clone)]
pub struct BitSeq(Arc<Rule>);

impl BitSeq {
    fn from_rule(rule: Rule) -> Self {
        BitSeq(Arc::new(rule))
    }

    pub fn zeros() -> Self {
        Self::from_rule(Rule::Zeros)
    }

    pub fn ones() -> Self {
        Self::from_rule(Rule::Ones)
    }

    /// The pattern repeated forever.
    pub fn periodic(pattern: BitString) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Self::from_rule(Rule::Periodic(pattern)))
    }

    /// The binary expansion of `r`, least significant bit first, then zeros.
    pub fn nat_row(r: impl Into<BigUint>) -> Self {
        Self::from_rule(Rule::NatRow(r.into()))
    }

    pub fn prepend(head: BitString, tail: BitSeq) -> Self {
        Self::from_rule(Rule::Prepend(head, tail))
    }

    pub fn complement(&self) -> Self {
        Self::from_rule(Rule::Complement(self.clone()))
    }

    pub(crate) fn antidiagonal_of(list: Enumeration) -> Self {
        Self::from_rule(Rule::Antidiagonal(list))
    }

    /// The `i`-th bit, `i >= 1`.
    pub fn bit_at(&self, i: u64) -> Result<Bit> {
        if i == 0 {
            return Err(Error::PositionZero);
        }
        Ok(self.bit(i))
    }

    pub(crate) fn bit(&self, i: u64) -> Bit {
        debug_assert!(i >= 1);
        match &*self.0 {
            Rule::Zeros => Bit::Zero,
            Rule::Ones => Bit::One,
            Rule::Periodic(p) => {
                let len = p.len() as u64;
                p.bits()[((i - 1) % len) as usize]
            }
            Rule::NatRow(r) => Bit::from(r.bit(i - 1)),
            Rule::Complement(s) => s.bit(i).flip(),
            Rule::Prepend(head, tail) => {
                let len = head.len() as u64;
                if i <= len {
                    head.bits()[(i - 1) as usize]
                } else {
                    tail.bit(i - len)
                }
            }
            Rule::Antidiagonal(list) => list.row_big(&BigUint::from(i - 1)).bit(i).flip(),
        }
    }

    /// Bits `1..=n`.
    pub fn prefix(&self, n: u64) -> BitString {
        (1..=n).map(|i| self.bit(i)).collect()
    }

    /// `[L, L + 2^-n]` where `L` is the value of the first `n` bits read as a
    /// binary fraction. The real number the sequence denotes lies inside.
    pub fn dyadic_bounds(&self, n: u64) -> DyadicInterval {
        let numer = BigInt::from(self.prefix(n).value_msb_first());
        let denom = BigInt::one() << n;
        let lower = BigRational::new(numer, denom.clone());
        let upper = &lower + BigRational::new(BigInt::one(), denom);
        DyadicInterval { lower, upper }
    }

    /// The last position that can hold a 1, when the sequence is statically
    /// known to be eventually zero.
    pub fn support_hint(&self) -> Option<u64> {
        match self.tail() {
            Tail::Constant(Bit::Zero, bound) => Some(bound),
            _ => None,
        }
    }

    fn tail(&self) -> Tail {
        match &*self.0 {
            Rule::Zeros => Tail::Constant(Bit::Zero, 0),
            Rule::Ones => Tail::Constant(Bit::One, 0),
            Rule::Periodic(p) => match p.bits() {
                [first, rest @ ..] if rest.iter().all(|b| b == first) => Tail::Constant(*first, 0),
                _ => Tail::Unknown,
            },
            Rule::NatRow(r) => Tail::Constant(Bit::Zero, r.bits()),
            Rule::Complement(s) => match s.tail() {
                Tail::Constant(b, bound) => Tail::Constant(b.flip(), bound),
                Tail::Unknown => Tail::Unknown,
            },
            Rule::Prepend(head, tail) => match tail.tail() {
                Tail::Constant(b, bound) => Tail::Constant(b, bound + head.len() as u64),
                Tail::Unknown => Tail::Unknown,
            },
            Rule::Antidiagonal(_) => Tail::Unknown,
        }
    }
}

/// Free-function form of [`BitSeq::bit_at`].
pub fn bit_at(s: &BitSeq, i: u64) -> Result<Bit> {
    s.bit_at(i)
}

pub fn prefix(s: &BitSeq, n: u64) -> BitString {
    s.prefix(n)
}

pub fn complement(s: &BitSeq) -> BitSeq {
    s.complement()
}

pub fn dyadic_bounds(s: &BitSeq, n: u64) -> DyadicInterval {
    s.dyadic_bounds(n)
}

/// Least position `i <= n` where `a` and `b` differ, if any.
pub fn eq_prefix(a: &BitSeq, b: &BitSeq, n: u64) -> Option<u64> {
    (1..=n).find(|&i| a.bit(i) != b.bit(i))
}

/// Renders the sequence in the expression language of [`crate::endsl`].
impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Rule::Zeros => f.write_str("zeros"),
            Rule::Ones => f.write_str("ones"),
            Rule::Periodic(p) => write!(f, "periodic({p})"),
            Rule::NatRow(r) => write!(f, "natrow({r})"),
            Rule::Complement(s) => write!(f, "compl({s})"),
            Rule::Prepend(head, tail) => write!(f, "prepend({head}, {tail})"),
            Rule::Antidiagonal(list) => write!(f, "diagc({list})"),
        }
    }
}

/// A closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicInterval {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl DyadicInterval {
    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, other: &DyadicInterval) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn bit_at_examples() {
        assert_eq!(BitSeq::ones().bit_at(7), Ok(Bit::One));
        assert_eq!(BitSeq::nat_row(6u32).bit_at(2), Ok(Bit::One));
        let p = BitSeq::periodic(bits("01")).unwrap();
        assert_eq!(p.bit_at(4), Ok(Bit::One));
        assert_eq!(p.bit_at(3), Ok(Bit::Zero));
    }

    #[test]
    fn position_zero_is_an_error() {
        assert_eq!(BitSeq::zeros().bit_at(0), Err(Error::PositionZero));
    }

    #[test]
    fn empty_pattern_is_rejected() {
        assert_eq!(BitSeq::periodic(BitString::new()).unwrap_err(), Error::EmptyPattern);
    }

    #[test]
    fn prefixes() {
        assert_eq!(BitSeq::ones().prefix(4), bits("1111"));
        assert_eq!(BitSeq::nat_row(6u32).prefix(4), bits("0110"));
        assert!(BitSeq::ones().prefix(0).is_empty());
    }

    #[test]
    fn complements() {
        assert_eq!(BitSeq::ones().complement().prefix(40), BitSeq::zeros().prefix(40));
        let p01 = BitSeq::periodic(bits("01")).unwrap();
        let p10 = BitSeq::periodic(bits("10")).unwrap();
        assert_eq!(p01.complement().prefix(33), p10.prefix(33));
        assert_eq!(BitSeq::nat_row(5u32).complement().prefix(3), bits("010"));
    }

    #[test]
    fn dyadic_examples() {
        let b = BitSeq::ones().dyadic_bounds(3);
        assert_eq!((b.lower, b.upper), (ratio(7, 8), ratio(1, 1)));
        let b = BitSeq::zeros().dyadic_bounds(5);
        assert_eq!((b.lower, b.upper), (ratio(0, 1), ratio(1, 32)));
        let b = BitSeq::periodic(bits("01")).unwrap().dyadic_bounds(2);
        assert_eq!((b.lower, b.upper), (ratio(1, 4), ratio(1, 2)));
    }

    #[test]
    fn eq_prefix_examples() {
        assert_eq!(eq_prefix(&BitSeq::ones(), &BitSeq::ones(), 100), None);
        assert_eq!(eq_prefix(&BitSeq::ones(), &BitSeq::nat_row(6u32), 10), Some(1));
        let a = BitSeq::periodic(bits("01")).unwrap();
        let b = BitSeq::periodic(bits("0011")).unwrap();
        assert_eq!(eq_prefix(&a, &b, 10), Some(2));
    }

    #[test]
    fn support_hints() {
        assert_eq!(BitSeq::zeros().support_hint(), Some(0));
        assert_eq!(BitSeq::ones().support_hint(), None);
        assert_eq!(BitSeq::nat_row(6u32).support_hint(), Some(3));
        assert_eq!(BitSeq::nat_row(0u32).support_hint(), Some(0));
        assert_eq!(BitSeq::ones().complement().support_hint(), Some(0));
        assert_eq!(BitSeq::prepend(bits("110"), BitSeq::nat_row(1u32)).support_hint(), Some(4));
        assert_eq!(BitSeq::periodic(bits("000")).unwrap().support_hint(), Some(0));
        assert_eq!(BitSeq::periodic(bits("01")).unwrap().support_hint(), None);
    }

    #[test]
    fn prepend_then_tail() {
        let s = BitSeq::prepend(bits("110"), BitSeq::zeros());
        assert_eq!(s.prefix(6), bits("110000"));
    }

    #[test]
    fn bitstring_value_roundtrip() {
        assert_eq!(bits("01").value_msb_first(), BigUint::from(1u32));
        assert_eq!(bits("111").value_msb_first(), BigUint::from(7u32));
        assert_eq!(BitString::from_value_msb_first(&BigUint::from(5u32), 4), bits("0101"));
        assert_eq!("012".parse::<BitString>(), Err('2'));
    }

    #[test]
    fn display_uses_expression_syntax() {
        let s = BitSeq::prepend(bits("10"), BitSeq::nat_row(6u32).complement());
        assert_eq!(s.to_string(), "prepend(10, compl(natrow(6)))");
    }
}
