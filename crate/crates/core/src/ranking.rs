//! Ranking ballots and the two ranking analogues of the approval rules.
//!
//! A ranking is single-peaked on an axis when every top-k prefix is an
//! interval. `VdRank` counts rankings that are not; `FtRank` counts triples
//! `x ◁ y ◁ z` in which the voter ranks `y` below both `x` and `z`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::axis::Axis;
use crate::error::{Error, Result};
use crate::profile::{Candidates, Weight};
use crate::solver::{check_overflow, scale_weights, solve_model, CostModel, SolveOptions, SolveResult};

/// A complete strict ranking, best first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankingBallot {
    order: Vec<usize>,
}

impl RankingBallot {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        // same validation as an axis: a permutation of 0..m
        Axis::new(order.clone())?;
        Ok(RankingBallot { order })
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

    /// `rank[c]` is 0 for the favourite.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.order.len()];
        for (r, &c) in self.order.iter().enumerate() {
            rank[c] = r;
        }
        rank
    }
}

/// A candidate registry with weighted complete rankings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingProfile {
    candidates: Candidates,
    entries: Vec<(RankingBallot, Weight)>,
}

impl RankingProfile {
    pub fn new(candidates: Candidates, entries: Vec<(RankingBallot, Weight)>) -> Result<Self> {
        if candidates.is_empty() {
            return Err(Error::EmptyProfile);
        }
        for (r, _) in &entries {
            if r.len() != candidates.len() {
                return Err(Error::AxisSizeMismatch {
                    left: candidates.len(),
                    right: r.len(),
                });
            }
        }
        let total: Weight = entries.iter().map(|e| e.1).sum();
        if total == Weight::from_integer(0) {
            return Err(Error::InvalidWeight("total weight must be positive".into()));
        }
        Ok(RankingProfile { candidates, entries })
    }

    /// Unit-free builder over letter candidates, rankings written `"bac"`.
    pub fn from_letters(m: usize, entries: &[(u64, &str)]) -> Result<Self> {
        let candidates = Candidates::letters(m);
        let entries = entries
            .iter()
            .map(|&(w, s)| {
                let axis = candidates.parse_axis(s)?;
                Ok((RankingBallot::new(axis.order().to_vec())?, Weight::from_integer(w)))
            })
            .collect::<Result<Vec<_>>>()?;
        RankingProfile::new(candidates, entries)
    }

    pub fn candidates(&self) -> &Candidates {
        &self.candidates
    }

    pub fn num_candidates(&self) -> usize {
        self.candidates.len()
    }

    pub fn entries(&self) -> &[(RankingBallot, Weight)] {
        &self.entries
    }

    /// Identical rankings merged, zero weights dropped, heaviest first.
    pub fn preprocess(&self) -> RankingProfile {
        let mut merged: BTreeMap<RankingBallot, Weight> = BTreeMap::new();
        for (r, w) in &self.entries {
            if *w != Weight::from_integer(0) {
                *merged.entry(r.clone()).or_insert_with(|| Weight::from_integer(0)) += *w;
            }
        }
        let mut entries: Vec<_> = merged.into_iter().collect();
        entries.sort_by(|x, y| y.1.cmp(&x.1).then_with(|| x.0.cmp(&y.0)));
        RankingProfile {
            candidates: self.candidates.clone(),
            entries,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankingRule {
    VdRank,
    FtRank,
}

impl RankingRule {
    pub const ALL: [RankingRule; 2] = [RankingRule::VdRank, RankingRule::FtRank];

    pub fn name(self) -> &'static str {
        match self {
            RankingRule::VdRank => "vd-rank",
            RankingRule::FtRank => "ft-rank",
        }
    }
}

impl fmt::Display for RankingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name().to_uppercase())
    }
}

impl FromStr for RankingRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        RankingRule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::RuleUnsupported {
                rule: s,
                operation: "ranking rule lookup",
            })
    }
}

fn check_sizes(ranking: &RankingBallot, axis: &Axis) -> Result<()> {
    if ranking.len() != axis.len() {
        return Err(Error::AxisSizeMismatch {
            left: axis.len(),
            right: ranking.len(),
        });
    }
    Ok(())
}

/// Walks `ranking` keeping only candidates with a position, and checks that
/// each one extends the interval of those before it.
fn single_peaked_on(ranking: &[usize], position: &[usize]) -> bool {
    let mut span: Option<(usize, usize)> = None;
    for &c in ranking {
        let p = position[c];
        if p == usize::MAX {
            continue;
        }
        span = match span {
            None => Some((p, p)),
            Some((lo, hi)) if p + 1 == lo => Some((p, hi)),
            Some((lo, hi)) if p == hi + 1 => Some((lo, p)),
            Some(_) => return false,
        };
    }
    true
}

/// Forbidden triples of one ranking; `rank` is indexed by candidate and
/// `order` lists the candidates along the axis.
fn forbidden_triples(rank: &[usize], order: &[usize]) -> u64 {
    let mut total = 0;
    for (j, &y) in order.iter().enumerate() {
        let left = order[..j].iter().filter(|&&x| rank[x] < rank[y]).count() as u64;
        let right = order[j + 1..].iter().filter(|&&z| rank[z] < rank[y]).count() as u64;
        total += left * right;
    }
    total
}

/// Every top-k prefix of `ranking` is an interval of `axis`.
pub fn is_single_peaked(ranking: &RankingBallot, axis: &Axis) -> Result<bool> {
    check_sizes(ranking, axis)?;
    Ok(single_peaked_on(ranking.order(), axis.positions()))
}

pub fn ranking_cost(rule: RankingRule, ranking: &RankingBallot, axis: &Axis) -> Result<u64> {
    check_sizes(ranking, axis)?;
    Ok(match rule {
        RankingRule::VdRank => u64::from(!single_peaked_on(ranking.order(), axis.positions())),
        RankingRule::FtRank => forbidden_triples(&ranking.ranks(), axis.order()),
    })
}

/// Weighted sum of [`ranking_cost`].
pub fn ranking_profile_cost(rule: RankingRule, profile: &RankingProfile, axis: &Axis) -> Result<Weight> {
    let mut total = Weight::from_integer(0);
    for (r, w) in profile.entries() {
        total += *w * ranking_cost(rule, r, axis)?;
    }
    Ok(total)
}

/// VD-rank sums over rankings. FT-rank is pre-aggregated: for every
/// candidate triple, the weight of voters ranking each member last of the
/// three, so an axis costs one lookup per position triple.
struct RankingModel {
    rule: RankingRule,
    m: usize,
    rankings: Vec<Vec<usize>>,
    weights: Vec<u64>,
    /// `worst[(x * m + y) * m + z]`, indexed by the sorted triple, holds the
    /// weights of voters whose least favourite of `{x, y, z}` is x, y, z.
    worst: Vec<[u64; 3]>,
    popularity: Vec<u64>,
}

impl RankingModel {
    fn new(profile: &RankingProfile, rule: RankingRule) -> Result<(Self, u64)> {
        let m = profile.num_candidates();
        let ws: Vec<Weight> = profile.entries().iter().map(|e| e.1).collect();
        let (weights, scale) = scale_weights(&ws)?;
        let rankings: Vec<Vec<usize>> = profile.entries().iter().map(|e| e.0.order().to_vec()).collect();
        let mut popularity = vec![0u64; m];
        let mut worst = Vec::new();
        for (r, &w) in rankings.iter().zip(&weights) {
            for (pos, &c) in r.iter().enumerate() {
                popularity[c] += w * (m - 1 - pos) as u64;
            }
        }
        if rule == RankingRule::FtRank {
            worst = vec![[0u64; 3]; m * m * m];
            for (r, &w) in rankings.iter().zip(&weights) {
                let mut rank = vec![0; m];
                for (pos, &c) in r.iter().enumerate() {
                    rank[c] = pos;
                }
                for x in 0..m {
                    for y in x + 1..m {
                        for z in y + 1..m {
                            let t = [x, y, z];
                            let k = (0..3).max_by_key(|&k| rank[t[k]]).unwrap();
                            worst[(x * m + y) * m + z][k] += w;
                        }
                    }
                }
            }
        }
        let model = RankingModel {
            rule,
            m,
            rankings,
            weights,
            worst,
            popularity,
        };
        check_overflow(&model)?;
        Ok((model, scale))
    }

    fn middle_worst(&self, a: usize, b: usize, c: usize) -> u64 {
        // b is the middle candidate on the axis
        let mut t = [(a, 0), (b, 1), (c, 2)];
        t.sort_unstable();
        let k = t.iter().position(|&(_, role)| role == 1).unwrap();
        self.worst[(t[0].0 * self.m + t[1].0) * self.m + t[2].0][k]
    }

    fn positions(&self, order: &[usize]) -> Vec<usize> {
        let mut position = vec![usize::MAX; self.m];
        for (p, &c) in order.iter().enumerate() {
            position[c] = p;
        }
        position
    }
}

impl CostModel for RankingModel {
    fn num_candidates(&self) -> usize {
        self.m
    }

    fn weights(&self) -> &[u64] {
        &self.weights
    }

    fn entry_cost(&self, i: usize, order: &[usize]) -> u64 {
        let position = self.positions(order);
        match self.rule {
            RankingRule::VdRank => u64::from(!single_peaked_on(&self.rankings[i], &position)),
            RankingRule::FtRank => {
                let mut rank = vec![0; self.m];
                for (pos, &c) in self.rankings[i].iter().enumerate() {
                    rank[c] = pos;
                }
                forbidden_triples(&rank, order)
            }
        }
    }

    fn popularity(&self) -> Vec<u64> {
        self.popularity.clone()
    }

    fn max_entry_cost(&self) -> u64 {
        let m = self.m as u64;
        m * m * m
    }

    fn cost(&self, order: &[usize]) -> u64 {
        self.cost_within(order, u64::MAX).expect("unbounded limit")
    }

    fn cost_within(&self, order: &[usize], limit: u64) -> Option<u64> {
        let mut total = 0u64;
        match self.rule {
            RankingRule::VdRank => {
                let position = self.positions(order);
                for (r, &w) in self.rankings.iter().zip(&self.weights) {
                    if !single_peaked_on(r, &position) {
                        total += w;
                        if total > limit {
                            return None;
                        }
                    }
                }
            }
            RankingRule::FtRank => {
                let k = order.len();
                for j in 1..k.saturating_sub(1) {
                    for i in 0..j {
                        for l in j + 1..k {
                            total += self.middle_worst(order[i], order[j], order[l]);
                        }
                    }
                    if total > limit {
                        return None;
                    }
                }
            }
        }
        Some(total)
    }
}

/// Every canonical axis minimising the weighted ranking cost.
pub fn solve_ranking(profile: &RankingProfile, rule: RankingRule, options: &SolveOptions) -> Result<SolveResult> {
    let m = profile.num_candidates();
    if m == 0 {
        return Err(Error::EmptyProfile);
    }
    if m > options.enumeration_bound {
        return Err(Error::SizeLimit {
            m,
            bound: options.enumeration_bound,
        });
    }
    let (model, scale) = RankingModel::new(&profile.preprocess(), rule)?;
    solve_model(&model, scale, options, None)
}
