//! Approval ballots and the 0/1 vectors they induce on an axis.

use std::fmt;

use crate::error::{Error, Result};

/// Largest candidate count a [`Ballot`] bit set can hold.
pub const MAX_CANDIDATES: usize = 64;

/// A non-empty set of approved candidates, stored as a 64-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ballot(u64);

impl Ballot {
    pub fn from_mask(mask: u64) -> Result<Self> {
        if mask == 0 {
            return Err(Error::EmptyBallot);
        }
        Ok(Ballot(mask))
    }

    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Result<Self> {
        let mut mask = 0u64;
        for c in members {
            if c >= MAX_CANDIDATES {
                return Err(Error::TooManyCandidates {
                    got: c + 1,
                    max: MAX_CANDIDATES,
                });
            }
            mask |= 1 << c;
        }
        Ballot::from_mask(mask)
    }

    /// The ballot approving every candidate in `0..m`.
    pub fn full(m: usize) -> Result<Self> {
        Ballot::from_mask(low_mask(m))
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, candidate: usize) -> bool {
        candidate < MAX_CANDIDATES && self.0 >> candidate & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Always false; ballots are non-empty. Present for API symmetry with `len`.
    pub fn is_empty(self) -> bool {
        false
    }

    pub fn is_singleton(self) -> bool {
        self.0.is_power_of_two()
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    /// Highest candidate index plus one.
    pub fn span(self) -> usize {
        MAX_CANDIDATES - self.0.leading_zeros() as usize
    }

    /// Restriction to the candidates in `keep` (sorted ascending), relabelled by
    /// rank within `keep`. `None` when nothing approved survives.
    pub fn restrict(self, keep: &[usize]) -> Option<Ballot> {
        let mut mask = 0u64;
        for (new, &old) in keep.iter().enumerate() {
            if self.contains(old) {
                mask |= 1 << new;
            }
        }
        Ballot::from_mask(mask).ok()
    }
}

pub(crate) fn low_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// The 0/1 vector of a ballot read along an axis: bit `i` is set iff the
/// candidate at axis position `i` is approved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ApprovalVector {
    bits: u64,
    len: usize,
}

impl ApprovalVector {
    pub fn new(bits: u64, len: usize) -> Self {
        debug_assert!(len <= 64 && bits & !low_mask(len) == 0);
        ApprovalVector { bits, len }
    }

    /// Parses a string such as `"0110"`.
    pub fn parse(s: &str) -> Option<Self> {
        if s.len() > 64 {
            return None;
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => return None,
            }
        }
        Some(ApprovalVector::new(bits, s.len()))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(self) -> usize {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn get(self, position: usize) -> bool {
        self.bits >> position & 1 == 1
    }

    pub fn ones(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// True iff the set bits form one contiguous block (or there are none).
    pub fn is_contiguous(self) -> bool {
        if self.bits == 0 {
            return true;
        }
        let shifted = self.bits >> self.bits.trailing_zeros();
        shifted & (shifted + 1) == 0
    }

    pub fn reversed(self) -> Self {
        if self.len == 0 {
            return self;
        }
        ApprovalVector::new(self.bits.reverse_bits() >> (64 - self.len), self.len)
    }
}

impl fmt::Display for ApprovalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}
