//! Axes: strict linear orders of the candidates, identified up to reversal.

use std::cmp::Ordering;
use std::fmt;

use crate::ballot::{ApprovalVector, Ballot, BitIter, MAX_CANDIDATES};
use crate::error::{Error, Result};

/// A permutation of `0..m`, read left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Axis {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Axis {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let m = order.len();
        if m > MAX_CANDIDATES {
            return Err(Error::TooManyCandidates {
                got: m,
                max: MAX_CANDIDATES,
            });
        }
        let mut position = vec![usize::MAX; m];
        for (i, &c) in order.iter().enumerate() {
            if c >= m || position[c] != usize::MAX {
                return Err(Error::InvalidAxis(format!("{order:?}")));
            }
            position[c] = i;
        }
        Ok(Axis { order, position })
    }

    /// `0 1 2 … m-1`.
    pub fn identity(m: usize) -> Self {
        Axis::new((0..m).collect()).expect("identity is a permutation")
    }

    pub(crate) fn from_order_unchecked(order: Vec<usize>) -> Self {
        let mut position = vec![0; order.len()];
        for (i, &c) in order.iter().enumerate() {
            position[c] = i;
        }
        Axis { order, position }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Axis position of `candidate`.
    pub fn position(&self, candidate: usize) -> usize {
        self.position[candidate]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn reverse(&self) -> Axis {
        let mut order = self.order.clone();
        order.reverse();
        Axis::from_order_unchecked(order)
    }

    /// An axis is canonical when it is lexicographically no larger than its
    /// reverse, which for a permutation means first < last.
    pub fn is_canonical(&self) -> bool {
        match (self.order.first(), self.order.last()) {
            (Some(first), Some(last)) => first <= last,
            _ => true,
        }
    }

    /// The lexicographically smaller of the axis and its reverse.
    pub fn canonical(&self) -> Axis {
        if self.is_canonical() {
            self.clone()
        } else {
            self.reverse()
        }
    }

    /// Same reversal class.
    pub fn equivalent(&self, other: &Axis) -> bool {
        self.len() == other.len() && (self.order == other.order || self.order.iter().eq(other.order.iter().rev()))
    }

    /// Restriction to the candidates in `keep` (sorted ascending), relabelled
    /// by rank within `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Axis {
        let mut rank = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            rank[old] = new;
        }
        let order = self
            .order
            .iter()
            .filter_map(|&c| (rank[c] != usize::MAX).then_some(rank[c]))
            .collect();
        Axis::from_order_unchecked(order)
    }

    fn check(&self, ballot: Ballot) -> Result<()> {
        let m = self.len();
        if ballot.span() > m {
            return Err(Error::CandidateMismatch(ballot.span() - 1));
        }
        Ok(())
    }

    pub fn approval_vector(&self, ballot: Ballot) -> Result<ApprovalVector> {
        self.check(ballot)?;
        Ok(self.vector_unchecked(ballot.mask()))
    }

    #[inline]
    pub(crate) fn vector_unchecked(&self, mask: u64) -> ApprovalVector {
        let mut bits = 0u64;
        for c in BitIter(mask) {
            bits |= 1 << self.position[c];
        }
        ApprovalVector::new(bits, self.len())
    }

    pub fn is_interval(&self, ballot: Ballot) -> Result<bool> {
        Ok(self.approval_vector(ballot)?.is_contiguous())
    }

    /// Non-approved candidates lying strictly between two approved ones,
    /// in ascending index order.
    pub fn interfering_candidates(&self, ballot: Ballot) -> Result<Vec<usize>> {
        let v = self.approval_vector(ballot)?;
        let (lo, hi) = extent(v.bits());
        let mut out: Vec<usize> = (lo..=hi)
            .filter(|&i| !v.get(i))
            .map(|i| self.order[i])
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Smallest interval of this axis containing `ballot`.
    pub fn completion(&self, ballot: Ballot) -> Result<Ballot> {
        let v = self.approval_vector(ballot)?;
        let (lo, hi) = extent(v.bits());
        Ballot::new(self.order[lo..=hi].iter().copied())
    }

    /// Candidates strictly between `a` and `b` on the axis.
    pub fn between(&self, a: usize, b: usize) -> &[usize] {
        let (pa, pb) = (self.position[a], self.position[b]);
        let (lo, hi) = if pa < pb { (pa, pb) } else { (pb, pa) };
        &self.order[lo + 1..hi]
    }
}

/// Every canonical axis over `m` candidates, in lexicographic order.
pub fn canonical_axes(m: usize) -> impl Iterator<Item = Axis> {
    let mut next = Some((0..m).collect::<Vec<usize>>());
    std::iter::from_fn(move || loop {
        let current = next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            next = Some(succ);
        }
        let axis = Axis::from_order_unchecked(current);
        if axis.is_canonical() {
            return Some(axis);
        }
    })
}

/// Advances `v` to its lexicographic successor; false when `v` was the last.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Lowest and highest set bit of a non-zero word.
#[inline]
pub(crate) fn extent(bits: u64) -> (usize, usize) {
    debug_assert!(bits != 0);
    (bits.trailing_zeros() as usize, 63 - bits.leading_zeros() as usize)
}

impl PartialOrd for Axis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Axis {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order)
    }
}

impl fmt::Debug for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Axis{:?}", self.order)
    }
}

/// Free-function forms of the axis queries.
pub fn approval_vector(ballot: Ballot, axis: &Axis) -> Result<ApprovalVector> {
    axis.approval_vector(ballot)
}

pub fn is_interval(ballot: Ballot, axis: &Axis) -> Result<bool> {
    axis.is_interval(ballot)
}

pub fn interfering_candidates(ballot: Ballot, axis: &Axis) -> Result<Vec<usize>> {
    axis.interfering_candidates(ballot)
}

pub fn canonicalize(axis: &Axis) -> Axis {
    axis.canonical()
}
