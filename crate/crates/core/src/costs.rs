//! Per-ballot cost functions of the scoring rules.
//!
//! Every rule here depends on a ballot and an axis only through the approval
//! vector the axis induces, so the primitive is [`vector_cost`]; the other
//! entry points build the vector first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::axis::{extent, Axis};
use crate::ballot::{ApprovalVector, Ballot};
use crate::error::{Error, Result};
use crate::profile::{Weight, WeightedProfile};

/// The approval-based scoring rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CostRule {
    /// Voter Deletion: 1 for every non-interval ballot.
    Vd,
    /// Minimum Flips: fewest approvals to add or remove.
    Mf,
    /// Ballot Completion: number of interfering candidates.
    Bc,
    /// Minimum Swaps: fewest adjacent swaps of the axis.
    Ms,
    /// Forbidden Triples: approved-unapproved-approved triples.
    Ft,
    /// Number of contiguous holes.
    Genus,
}

impl CostRule {
    pub const ALL: [CostRule; 6] = [
        CostRule::Vd,
        CostRule::Mf,
        CostRule::Bc,
        CostRule::Ms,
        CostRule::Ft,
        CostRule::Genus,
    ];

    /// The five rules ordered by the cost hierarchy VD ≤ MF ≤ BC ≤ MS ≤ FT.
    pub const HIERARCHY: [CostRule; 5] = [CostRule::Vd, CostRule::Mf, CostRule::Bc, CostRule::Ms, CostRule::Ft];

    pub fn name(self) -> &'static str {
        match self {
            CostRule::Vd => "vd",
            CostRule::Mf => "mf",
            CostRule::Bc => "bc",
            CostRule::Ms => "ms",
            CostRule::Ft => "ft",
            CostRule::Genus => "genus",
        }
    }

    /// Rules whose optimal axes are the concatenations of per-class optima
    /// over the co-approval partition.
    pub fn is_partition_consistent(self) -> bool {
        matches!(self, CostRule::Bc | CostRule::Ms | CostRule::Ft)
    }
}

impl fmt::Display for CostRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name().to_uppercase())
    }
}

impl FromStr for CostRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CostRule::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::RuleUnsupported {
                rule: s.to_string(),
                operation: "rule lookup",
            })
    }
}

/// Cost of an approval vector under `rule`.
pub fn vector_cost(rule: CostRule, vector: ApprovalVector) -> u64 {
    bits_cost(rule, vector.bits())
}

pub(crate) fn bits_cost(rule: CostRule, bits: u64) -> u64 {
    if bits == 0 {
        return 0;
    }
    let shifted = bits >> bits.trailing_zeros();
    if shifted & (shifted + 1) == 0 {
        return 0;
    }
    let (lo, hi) = extent(bits);
    let ones = bits.count_ones() as u64;
    match rule {
        CostRule::Vd => 1,
        CostRule::Bc => (hi - lo + 1) as u64 - ones,
        CostRule::Ms | CostRule::Ft => {
            let mut left = 0u64;
            let mut total = 0u64;
            for i in lo..=hi {
                if bits >> i & 1 == 1 {
                    left += 1;
                } else {
                    let right = ones - left;
                    total += if rule == CostRule::Ms { left.min(right) } else { left * right };
                }
            }
            total
        }
        CostRule::Genus => {
            // a hole starts wherever a 0 follows a 1 inside [lo, hi]
            let inside = bits >> lo;
            let starts = inside & !(inside >> 1);
            // the final 1 at `hi` is also counted by `starts`; subtract it
            starts.count_ones() as u64 - 1
        }
        CostRule::Mf => {
            // best interval [x, y] maximises approved minus unapproved inside it
            let mut best = i64::MIN;
            let mut run = 0i64;
            for i in lo..=hi {
                let v = if bits >> i & 1 == 1 { 1 } else { -1 };
                run = (run + v).max(v);
                best = best.max(run);
            }
            ones - best as u64
        }
    }
}

/// Cost one ballot incurs on an axis.
pub fn ballot_cost(rule: CostRule, ballot: Ballot, axis: &Axis) -> Result<u64> {
    Ok(vector_cost(rule, axis.approval_vector(ballot)?))
}

/// Weighted sum of [`ballot_cost`] over the profile.
pub fn profile_cost(rule: CostRule, profile: &WeightedProfile, axis: &Axis) -> Result<Weight> {
    if axis.len() != profile.num_candidates() {
        return Err(Error::AxisSizeMismatch {
            left: profile.num_candidates(),
            right: axis.len(),
        });
    }
    let mut total = Weight::from_integer(0);
    for &(b, w) in profile.entries() {
        total += w * ballot_cost(rule, b, axis)?;
    }
    Ok(total)
}

/// Precomputed costs of every approval vector of length `m`.
#[derive(Debug, Clone)]
pub(crate) struct CostTable {
    costs: Vec<u32>,
}

impl CostTable {
    pub(crate) const MAX_M: usize = 16;

    pub(crate) fn new(rule: CostRule, m: usize) -> Option<Self> {
        if m > Self::MAX_M {
            return None;
        }
        let costs = (0..1u64 << m).map(|bits| bits_cost(rule, bits) as u32).collect();
        Some(CostTable { costs })
    }

    #[inline]
    pub(crate) fn get(&self, bits: u64) -> u64 {
        self.costs[bits as usize] as u64
    }
}
