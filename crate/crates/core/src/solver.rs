//! Exact minimisation of profile cost over all axes.
//!
//! The search enumerates each reversal class of axes once. Two devices cut
//! the work without ever discarding a tied optimum:
//!
//! * per-axis evaluation walks the ballots in decreasing weight order and
//!   stops as soon as the running sum exceeds the incumbent cost;
//! * axes are grouped by their restriction to all candidates but a fixed
//!   pair `{u, v}`. Every rule's cost weakly decreases when candidates are
//!   deleted, so the cost of the shared reduced axis bounds the whole group
//!   from below and a group whose bound exceeds the incumbent is skipped.
//!
//! The incumbent is shared between worker threads and only ever decreases;
//! the final optimal set is merged after all workers finish, so the answer
//! does not depend on the thread count.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Integer;

use crate::axis::{next_permutation, Axis};
use crate::costs::{bits_cost, CostRule, CostTable};
use crate::error::{Error, Result};
use crate::linearity::coapproval_partition;
use crate::profile::{Weight, WeightedProfile};

/// Knobs of [`solve`].
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Largest candidate count the solver will enumerate.
    pub enumeration_bound: usize,
    pub use_pair_pruning: bool,
    /// Stop summing an axis' cost once it exceeds the incumbent.
    pub use_early_abort: bool,
    /// Split into co-approval classes for rules where that is exact.
    pub use_decomposition: bool,
    /// Initial incumbent; defaults to the greedy insertion axis when pruning.
    pub warm_start: Option<Axis>,
    pub thread_count: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            enumeration_bound: 12,
            use_pair_pruning: true,
            use_early_abort: true,
            use_decomposition: true,
            warm_start: None,
            thread_count: 1,
        }
    }
}

impl SolveOptions {
    /// Plain enumeration: no pruning, abort, decomposition or warm start.
    pub fn exhaustive() -> Self {
        SolveOptions {
            use_pair_pruning: false,
            use_early_abort: false,
            use_decomposition: false,
            ..SolveOptions::default()
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.thread_count = threads;
        self
    }

    fn validate(&self, m: usize) -> Result<()> {
        if self.enumeration_bound == 0 || self.enumeration_bound > MAX_ENUMERATION {
            return Err(Error::ParameterDomain(format!(
                "enumeration bound must be in 1..={MAX_ENUMERATION}"
            )));
        }
        if self.thread_count == 0 {
            return Err(Error::ParameterDomain("thread count must be positive".into()));
        }
        if m == 0 {
            return Err(Error::EmptyProfile);
        }
        if m > self.enumeration_bound {
            return Err(Error::SizeLimit {
                m,
                bound: self.enumeration_bound,
            });
        }
        if let Some(w) = &self.warm_start {
            if w.len() != m {
                return Err(Error::AxisSizeMismatch { left: m, right: w.len() });
            }
        }
        Ok(())
    }
}

/// Permutation ranks must fit in a `u64`.
const MAX_ENUMERATION: usize = 20;

/// Optimal cost and every optimal axis (canonical, sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimal_cost: Weight,
    pub optimal_axes: Vec<Axis>,
    pub axes_examined: u64,
    pub axes_pruned: u64,
}

impl SolveResult {
    pub fn contains(&self, axis: &Axis) -> bool {
        self.optimal_axes.binary_search(&axis.canonical()).is_ok()
    }
}

/// A cost function over axes, given as a weighted sum of per-entry costs.
pub(crate) trait CostModel: Sync {
    fn num_candidates(&self) -> usize;
    /// Integer weights, in the order entries should be summed.
    fn weights(&self) -> &[u64];
    /// Cost of entry `i` on `order`, a sequence of distinct candidates.
    /// Candidates missing from `order` are deleted from the entry first.
    fn entry_cost(&self, i: usize, order: &[usize]) -> u64;
    /// Larger means more central in the greedy heuristic.
    fn popularity(&self) -> Vec<u64>;
    /// Upper bound on any single entry cost, for overflow checks.
    fn max_entry_cost(&self) -> u64;

    fn cost(&self, order: &[usize]) -> u64 {
        self.weights()
            .iter()
            .enumerate()
            .map(|(i, &w)| w * self.entry_cost(i, order))
            .sum()
    }

    /// Cost if it does not exceed `limit`.
    fn cost_within(&self, order: &[usize], limit: u64) -> Option<u64> {
        let mut total = 0u64;
        for (i, &w) in self.weights().iter().enumerate() {
            total += w * self.entry_cost(i, order);
            if total > limit {
                return None;
            }
        }
        Some(total)
    }
}

/// Integer weights sharing one denominator: `weights[i] / scale`.
pub(crate) fn scale_weights(weights: &[Weight]) -> Result<(Vec<u64>, u64)> {
    let scale = weights.iter().fold(1u64, |acc, w| acc.lcm(w.denom()));
    let scaled = weights
        .iter()
        .map(|w| w.numer().checked_mul(scale / w.denom()).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok((scaled, scale))
}

pub(crate) fn check_overflow<M: CostModel>(model: &M) -> Result<()> {
    let mut total = 0u64;
    for &w in model.weights() {
        let term = w.checked_mul(model.max_entry_cost()).ok_or(Error::Overflow)?;
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    // headroom for the sum exceeding the limit by one term during early abort
    total.checked_mul(2).ok_or(Error::Overflow)?;
    Ok(())
}

pub(crate) struct ApprovalModel {
    rule: CostRule,
    m: usize,
    masks: Vec<u64>,
    weights: Vec<u64>,
    scale: u64,
    tables: Vec<Option<CostTable>>,
}

impl ApprovalModel {
    /// Expects a preprocessed profile, so entries are already weight-sorted.
    pub(crate) fn new(profile: &WeightedProfile, rule: CostRule) -> Result<Self> {
        let m = profile.num_candidates();
        let ws: Vec<Weight> = profile.entries().iter().map(|e| e.1).collect();
        let (weights, scale) = scale_weights(&ws)?;
        let mut tables: Vec<Option<CostTable>> = (0..=m).map(|_| None).collect();
        tables[m] = CostTable::new(rule, m);
        if m >= 2 {
            tables[m - 2] = CostTable::new(rule, m - 2);
        }
        let model = ApprovalModel {
            rule,
            m,
            masks: profile.entries().iter().map(|e| e.0.mask()).collect(),
            weights,
            scale,
            tables,
        };
        check_overflow(&model)?;
        Ok(model)
    }

    pub(crate) fn scale(&self) -> u64 {
        self.scale
    }
}

impl CostModel for ApprovalModel {
    fn num_candidates(&self) -> usize {
        self.m
    }

    fn weights(&self) -> &[u64] {
        &self.weights
    }

    #[inline]
    fn entry_cost(&self, i: usize, order: &[usize]) -> u64 {
        let mask = self.masks[i];
        let mut bits = 0u64;
        for (p, &c) in order.iter().enumerate() {
            bits |= (mask >> c & 1) << p;
        }
        match &self.tables[order.len()] {
            Some(t) => t.get(bits),
            None => bits_cost(self.rule, bits),
        }
    }

    fn popularity(&self) -> Vec<u64> {
        let mut score = vec![0u64; self.m];
        for (&mask, &w) in self.masks.iter().zip(&self.weights) {
            for (c, s) in score.iter_mut().enumerate() {
                if mask >> c & 1 == 1 {
                    *s += w;
                }
            }
        }
        score
    }

    fn max_entry_cost(&self) -> u64 {
        let m = self.m as u64;
        m * m * m
    }
}

pub(crate) struct SearchConfig {
    pub threads: usize,
    pub pruning: bool,
    pub early_abort: bool,
    /// Only axes costing at most this much are reported.
    pub initial_bound: Option<u64>,
}

pub(crate) struct RawOutcome {
    pub best: Option<u64>,
    pub orders: Vec<Vec<usize>>,
    pub examined: u64,
    pub pruned: u64,
}

struct Worker<'a, M> {
    model: &'a M,
    incumbent: &'a AtomicU64,
    early_abort: bool,
    best: u64,
    orders: Vec<Vec<usize>>,
    examined: u64,
    pruned: u64,
}

impl<M: CostModel> Worker<'_, M> {
    fn visit(&mut self, order: &[usize]) {
        self.examined += 1;
        let limit = self.incumbent.load(Ordering::Relaxed);
        let cost = if self.early_abort {
            match self.model.cost_within(order, limit) {
                Some(c) => c,
                None => return,
            }
        } else {
            let c = self.model.cost(order);
            if c > limit {
                return;
            }
            c
        };
        self.incumbent.fetch_min(cost, Ordering::Relaxed);
        if cost < self.best {
            self.best = cost;
            self.orders.clear();
        }
        if cost == self.best {
            let mut o = order.to_vec();
            if o.first() > o.last() {
                o.reverse();
            }
            self.orders.push(o);
        }
    }
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// The permutation of `items` (sorted) with lexicographic rank `rank`.
fn unrank(items: &[usize], mut rank: u64) -> Vec<usize> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(items.len());
    for k in (0..items.len()).rev() {
        let f = factorial(k);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Calls `f` on every permutation of `items` with first < last whose rank lies in `range`.
fn for_canonical_perms(items: &[usize], range: std::ops::Range<u64>, mut f: impl FnMut(&[usize])) {
    if range.is_empty() {
        return;
    }
    let mut perm = unrank(items, range.start);
    for _ in range {
        if perm.len() < 2 || perm[0] < perm[perm.len() - 1] {
            f(&perm);
        }
        next_permutation(&mut perm);
    }
}

/// Candidates deleted for the pair bound: the two least popular.
fn pivot_pair<M: CostModel>(model: &M) -> (usize, usize) {
    let pop = model.popularity();
    let mut idx: Vec<usize> = (0..model.num_candidates()).collect();
    idx.sort_by_key(|&c| (pop[c], c));
    (idx[0], idx[1])
}

/// Ordered position pairs `(i, j)` for inserting the pivots, outermost first.
fn insertion_pairs(m: usize) -> Vec<(usize, usize)> {
    let depth = |p: usize| p.min(m - 1 - p);
    let mut pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    pairs.sort_by_key(|&(i, j)| (depth(i).min(depth(j)), depth(i).max(depth(j)), i, j));
    pairs
}

pub(crate) fn search<M: CostModel>(model: &M, cfg: &SearchConfig) -> RawOutcome {
    let m = model.num_candidates();
    let incumbent = AtomicU64::new(cfg.initial_bound.unwrap_or(u64::MAX));
    let pruning = cfg.pruning && m >= 4;
    let (pair, base): (Option<(usize, usize)>, Vec<usize>) = if pruning {
        let (u, v) = pivot_pair(model);
        (Some((u, v)), (0..m).filter(|&c| c != u && c != v).collect())
    } else {
        (None, (0..m).collect())
    };
    let pairs = if pruning { insertion_pairs(m) } else { Vec::new() };
    let total = factorial(base.len());
    let threads = (cfg.threads as u64).clamp(1, total.max(1)) as usize;

    let run = |range: std::ops::Range<u64>| {
        let mut w = Worker {
            model,
            incumbent: &incumbent,
            early_abort: cfg.early_abort,
            best: u64::MAX,
            orders: Vec::new(),
            examined: 0,
            pruned: 0,
        };
        let mut full = vec![0usize; m];
        for_canonical_perms(&base, range, |reduced| match pair {
            None => w.visit(reduced),
            Some((u, v)) => {
                let limit = incumbent.load(Ordering::Relaxed);
                if model.cost_within(reduced, limit).is_none() {
                    w.pruned += pairs.len() as u64;
                    return;
                }
                for &(i, j) in &pairs {
                    let mut rest = reduced.iter();
                    for (p, slot) in full.iter_mut().enumerate() {
                        *slot = if p == i {
                            u
                        } else if p == j {
                            v
                        } else {
                            *rest.next().expect("m - 2 reduced candidates")
                        };
                    }
                    w.visit(&full);
                }
            }
        });
        (w.best, w.orders, w.examined, w.pruned)
    };

    let parts: Vec<_> = if threads == 1 {
        vec![run(0..total)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|t| {
                    let start = total * t / threads as u64;
                    let end = total * (t + 1) / threads as u64;
                    let run = &run;
                    s.spawn(move || run(start..end))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };

    let best = parts.iter().map(|p| p.0).min().unwrap_or(u64::MAX);
    let mut orders = Vec::new();
    let (mut examined, mut pruned) = (0, 0);
    for (b, o, e, p) in parts {
        examined += e;
        pruned += p;
        if b == best {
            orders.extend(o);
        }
    }
    orders.sort();
    RawOutcome {
        best: (best != u64::MAX).then_some(best),
        orders,
        examined,
        pruned,
    }
}

/// Insertion heuristic over any cost model: candidates in decreasing
/// popularity, each placed where the partial axis is cheapest.
pub(crate) fn greedy_order<M: CostModel>(model: &M) -> Vec<usize> {
    let pop = model.popularity();
    let mut by_pop: Vec<usize> = (0..model.num_candidates()).collect();
    by_pop.sort_by_key(|&c| (std::cmp::Reverse(pop[c]), c));
    let mut order: Vec<usize> = Vec::with_capacity(by_pop.len());
    for c in by_pop {
        let mut best: Option<(u64, usize)> = None;
        for p in 0..=order.len() {
            order.insert(p, c);
            let cost = model.cost(&order);
            order.remove(p);
            if best.is_none_or(|(b, _)| cost < b) {
                best = Some((cost, p));
            }
        }
        order.insert(best.map_or(0, |b| b.1), c);
    }
    order
}

/// Greedy insertion axis, usable as a warm start.
pub fn greedy_warm_start(profile: &WeightedProfile, rule: CostRule) -> Result<Axis> {
    if profile.num_candidates() == 0 {
        return Err(Error::EmptyProfile);
    }
    let model = ApprovalModel::new(&profile.preprocess(), rule)?;
    Ok(Axis::new(greedy_order(&model))?.canonical())
}

fn search_config(options: &SolveOptions, initial_bound: Option<u64>) -> SearchConfig {
    SearchConfig {
        threads: options.thread_count,
        pruning: options.use_pair_pruning,
        early_abort: options.use_early_abort,
        initial_bound,
    }
}

/// Runs the search on `model` and converts the outcome. `ceiling` limits the
/// reported axes to those costing at most that much (in model units).
pub(crate) fn solve_model<M: CostModel>(
    model: &M,
    scale: u64,
    options: &SolveOptions,
    ceiling: Option<u64>,
) -> Result<SolveResult> {
    let warm = match (&options.warm_start, ceiling) {
        (_, Some(c)) => Some(c),
        (Some(axis), None) => Some(model.cost(axis.order())),
        (None, None) if options.use_pair_pruning => Some(model.cost(&greedy_order(model))),
        (None, None) => None,
    };
    let raw = search(model, &search_config(options, warm));
    let optimal_axes = raw.orders.into_iter().map(Axis::from_order_unchecked).collect();
    Ok(SolveResult {
        optimal_cost: Weight::new(raw.best.unwrap_or(0), scale),
        optimal_axes,
        axes_examined: raw.examined,
        axes_pruned: raw.pruned,
    })
}

fn solve_plain(profile: &WeightedProfile, rule: CostRule, options: &SolveOptions) -> Result<SolveResult> {
    let model = ApprovalModel::new(&profile.preprocess(), rule)?;
    solve_model(&model, model.scale(), options, None)
}

/// Every canonical axis minimising the weighted cost of `profile` under `rule`.
pub fn solve(profile: &WeightedProfile, rule: CostRule, options: &SolveOptions) -> Result<SolveResult> {
    options.validate(profile.num_candidates())?;
    if options.use_decomposition && rule.is_partition_consistent() && coapproval_partition(profile).len() > 1 {
        return solve_decomposed(profile, rule, options);
    }
    solve_plain(profile, rule, options)
}

/// Axes costing at most `ceiling` (in the profile's weight units).
pub(crate) fn axes_within(
    profile: &WeightedProfile,
    rule: CostRule,
    options: &SolveOptions,
    ceiling: u64,
) -> Result<Vec<Axis>> {
    options.validate(profile.num_candidates())?;
    let model = ApprovalModel::new(&profile.preprocess(), rule)?;
    Ok(solve_model(&model, model.scale(), options, Some(ceiling))?.optimal_axes)
}

/// Solves each co-approval class separately and returns every concatenation
/// of per-class optima, in every class order and orientation.
pub fn solve_decomposed(profile: &WeightedProfile, rule: CostRule, options: &SolveOptions) -> Result<SolveResult> {
    if !rule.is_partition_consistent() {
        return Err(Error::RuleUnsupported {
            rule: rule.to_string(),
            operation: "solve_decomposed",
        });
    }
    options.validate(profile.num_candidates())?;
    solve_by_classes(profile, rule, options)
}

/// The decomposition itself, for any rule. Exact only for the
/// partition-consistent rules; the axiom checker uses it as the reference set.
pub(crate) fn solve_by_classes(profile: &WeightedProfile, rule: CostRule, options: &SolveOptions) -> Result<SolveResult> {
    let partition = coapproval_partition(profile);
    let mut total = Weight::from_integer(0);
    let (mut examined, mut pruned) = (0, 0);
    // per class: every optimal sub-axis in both orientations, in original labels
    let mut blocks: Vec<Vec<Vec<usize>>> = Vec::new();
    for class in partition.classes() {
        if class.len() == 1 {
            blocks.push(vec![class.clone()]);
            continue;
        }
        let sub_options = SolveOptions {
            warm_start: options.warm_start.as_ref().map(|w| w.restrict(class)),
            ..options.clone()
        };
        let sub = solve_plain(&profile.restrict(class), rule, &sub_options)?;
        total += sub.optimal_cost;
        examined += sub.axes_examined;
        pruned += sub.axes_pruned;
        let mut oriented = Vec::new();
        for axis in &sub.optimal_axes {
            let order: Vec<usize> = axis.order().iter().map(|&c| class[c]).collect();
            let mut rev = order.clone();
            rev.reverse();
            oriented.push(order);
            oriented.push(rev);
        }
        blocks.push(oriented);
    }

    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut class_order: Vec<usize> = (0..blocks.len()).collect();
    loop {
        let mut stack: Vec<usize> = Vec::with_capacity(profile.num_candidates());
        concat_choices(&blocks, &class_order, 0, &mut stack, &mut out);
        if !next_permutation(&mut class_order) {
            break;
        }
    }
    Ok(SolveResult {
        optimal_cost: total,
        optimal_axes: out.into_iter().map(Axis::from_order_unchecked).collect(),
        axes_examined: examined,
        axes_pruned: pruned,
    })
}

fn concat_choices(
    blocks: &[Vec<Vec<usize>>],
    class_order: &[usize],
    depth: usize,
    stack: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    if depth == class_order.len() {
        let mut o = stack.clone();
        if o.first() > o.last() {
            o.reverse();
        }
        out.insert(o);
        return;
    }
    for choice in &blocks[class_order[depth]] {
        let len = stack.len();
        stack.extend_from_slice(choice);
        concat_choices(blocks, class_order, depth + 1, stack, out);
        stack.truncate(len);
    }
}

/// Axes sharing one restriction to all candidates but `removed`.
#[derive(Debug, Clone)]
pub struct PairGroup {
    pub removed: (usize, usize),
    /// Axis over the remaining candidates, relabelled by rank.
    pub reduced: Axis,
}

impl PairGroup {
    /// The remaining candidates, ascending; `reduced` is labelled by position here.
    pub fn kept(&self, m: usize) -> Vec<usize> {
        (0..m).filter(|&c| c != self.removed.0 && c != self.removed.1).collect()
    }

    /// Every axis of the group (one per ordered pair of insertion positions), canonical.
    pub fn members(&self) -> Vec<Axis> {
        let m = self.reduced.len() + 2;
        let keep = self.kept(m);
        let (u, v) = self.removed;
        let mut out = Vec::with_capacity(m * (m - 1));
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                let mut rest = self.reduced.order().iter().map(|&r| keep[r]);
                let order: Vec<usize> = (0..m)
                    .map(|p| if p == i { u } else if p == j { v } else { rest.next().unwrap() })
                    .collect();
                out.push(Axis::from_order_unchecked(order).canonical());
            }
        }
        out
    }
}

/// Lower bound on the cost of every axis in `group`: the cost of the reduced
/// axis on the profile with the removed pair deleted.
pub fn lower_bound_pair_removal(profile: &WeightedProfile, rule: CostRule, group: &PairGroup) -> Result<Weight> {
    let m = profile.num_candidates();
    let (u, v) = group.removed;
    if u == v || u >= m || v >= m || group.reduced.len() + 2 != m {
        return Err(Error::AxisSizeMismatch {
            left: m,
            right: group.reduced.len() + 2,
        });
    }
    let reduced_profile = profile.restrict(&group.kept(m));
    crate::costs::profile_cost(rule, &reduced_profile, &group.reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axis::canonical_axes;
    use crate::costs::profile_cost;

    fn example_one() -> WeightedProfile {
        WeightedProfile::from_letters(4, &[(4, "bcd"), (4, "ab"), (3, "ad"), (1, "ac"), (1, "bc")]).unwrap()
    }

    fn names(p: &WeightedProfile, r: &SolveResult) -> Vec<String> {
        r.optimal_axes.iter().map(|a| p.candidates().format_axis(a)).collect()
    }

    #[test]
    fn example_one_optima() {
        let p = example_one();
        let opts = SolveOptions::default();
        let vd = solve(&p, CostRule::Vd, &opts).unwrap();
        assert_eq!(names(&p, &vd), ["abcd"]);
        assert_eq!(vd.optimal_cost, Weight::from_integer(4));
        assert_eq!(names(&p, &solve(&p, CostRule::Mf, &opts).unwrap()), ["abcd"]);
        assert_eq!(names(&p, &solve(&p, CostRule::Bc, &opts).unwrap()), ["cbad"]);
        assert_eq!(names(&p, &solve(&p, CostRule::Ms, &opts).unwrap()), ["cbad"]);
        assert_eq!(names(&p, &solve(&p, CostRule::Ft, &opts).unwrap()), ["abdc", "adbc"]);
    }

    #[test]
    fn trivial_sizes() {
        let p = WeightedProfile::from_letters(1, &[(1, "a")]).unwrap();
        let r = solve(&p, CostRule::Ft, &SolveOptions::default()).unwrap();
        assert_eq!(r.optimal_axes, vec![Axis::identity(1)]);
        let p = WeightedProfile::from_letters(3, &[(1, "a")]).unwrap();
        let r = solve(&p, CostRule::Vd, &SolveOptions::default()).unwrap();
        assert_eq!(r.optimal_axes.len(), 3);
        assert_eq!(r.optimal_cost, Weight::from_integer(0));
    }

    #[test]
    fn size_limit_and_empty() {
        let p = WeightedProfile::from_letters(5, &[(1, "ab")]).unwrap();
        let opts = SolveOptions {
            enumeration_bound: 4,
            ..SolveOptions::default()
        };
        assert_eq!(solve(&p, CostRule::Vd, &opts), Err(Error::SizeLimit { m: 5, bound: 4 }));
        let empty = WeightedProfile::from_parts(crate::profile::Candidates::letters(0), vec![]).unwrap();
        assert_eq!(solve(&empty, CostRule::Vd, &SolveOptions::default()), Err(Error::EmptyProfile));
    }

    #[test]
    fn fractional_weights_are_exact() {
        let c = crate::profile::Candidates::letters(4);
        let p = WeightedProfile::new(
            c.clone(),
            vec![
                (c.parse_ballot("ab").unwrap(), Weight::new(1, 3)),
                (c.parse_ballot("ac").unwrap(), Weight::new(1, 2)),
                (c.parse_ballot("ad").unwrap(), Weight::new(2, 7)),
            ],
        )
        .unwrap();
        let r = solve(&p, CostRule::Bc, &SolveOptions::default()).unwrap();
        assert_eq!(r.optimal_cost, Weight::new(2, 7));
    }

    #[test]
    fn greedy_is_an_axis() {
        let p = example_one();
        for rule in CostRule::ALL {
            let a = greedy_warm_start(&p, rule).unwrap();
            assert_eq!(a.len(), 4);
        }
        let single = WeightedProfile::from_letters(1, &[(1, "a")]).unwrap();
        assert_eq!(greedy_warm_start(&single, CostRule::Vd).unwrap(), Axis::identity(1));
    }

    #[test]
    fn decomposition_rejects_vd_and_mf() {
        let p = example_one();
        for rule in [CostRule::Vd, CostRule::Mf, CostRule::Genus] {
            assert!(matches!(
                solve_decomposed(&p, rule, &SolveOptions::default()),
                Err(Error::RuleUnsupported { .. })
            ));
        }
    }

    #[test]
    fn pair_group_bound_is_below_members() {
        let p = example_one();
        let group = PairGroup {
            removed: (1, 3),
            reduced: Axis::new(vec![1, 0]).unwrap(),
        };
        assert_eq!(group.members().len(), 12);
        let bound = lower_bound_pair_removal(&p, CostRule::Ft, &group).unwrap();
        for axis in group.members() {
            assert!(profile_cost(CostRule::Ft, &p, &axis).unwrap() >= bound);
        }
        // the members of the group cover every reversal class exactly once here
        let all: BTreeSet<Axis> = group.members().into_iter().collect();
        assert_eq!(all.len(), canonical_axes(4).count());
    }

    #[test]
    fn insertion_pairs_cover_everything() {
        let pairs = insertion_pairs(6);
        assert_eq!(pairs.len(), 30);
        assert_eq!(pairs[0], (0, 5));
    }
}
