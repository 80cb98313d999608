//! Linear profiles: those admitting an axis on which every ballot is an interval.

use petgraph::unionfind::UnionFind;

use crate::axis::Axis;
use crate::costs::CostRule;
use crate::error::Result;
use crate::profile::{Weight, WeightedProfile};
use crate::solver::{axes_within, SolveOptions};

/// Classes of the transitive closure of "approved together by some ballot".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePartition {
    classes: Vec<Vec<usize>>,
}

impl CandidatePartition {
    /// Classes with ascending members, ordered by smallest member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class holding `candidate`.
    pub fn class_of(&self, candidate: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&candidate).is_ok())
    }
}

/// Co-approval classes; a never-approved candidate is a class on its own.
pub fn coapproval_partition(profile: &WeightedProfile) -> CandidatePartition {
    let m = profile.num_candidates();
    let mut uf = UnionFind::<usize>::new(m);
    for (ballot, w) in profile.entries() {
        if *w == Weight::from_integer(0) {
            continue;
        }
        let mut members = ballot.members();
        if let Some(first) = members.next() {
            for c in members {
                uf.union(first, c);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; m];
    for (c, &root) in labels.iter().enumerate() {
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[root]].push(c);
    }
    CandidatePartition { classes }
}

/// Every canonical axis on which all ballots are intervals, with the default
/// enumeration bound.
pub fn consistent_axes(profile: &WeightedProfile) -> Result<Vec<Axis>> {
    consistent_axes_with(profile, &SolveOptions::default())
}

pub fn consistent_axes_with(profile: &WeightedProfile, options: &SolveOptions) -> Result<Vec<Axis>> {
    axes_within(profile, CostRule::Vd, options, 0)
}

pub fn is_linear(profile: &WeightedProfile) -> Result<bool> {
    Ok(!consistent_axes(profile)?.is_empty())
}
